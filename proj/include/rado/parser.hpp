#pragma once

// Text grammar for polynomial systems. Equations are separated by ';' or
// newlines; within an equation: +, -, *, ^, integer and rational literals
// (e.g. 2/3), identifiers [a-zA-Z][a-zA-Z0-9_]*, parentheses. '*' between
// factors is optional on input and always emitted on output.

#include "rado/polynomial.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace rado {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, size_t offset)
        : std::runtime_error(message + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

namespace detail {

enum class TokKind { Ident, Number, Plus, Minus, Star, Caret, LParen, RParen, Separator, End };

struct Token {
    TokKind kind;
    size_t pos;
    std::string text;     // Ident
    Rational value;       // Number
    bool integral = false;
};

inline std::vector<Token> tokenize_system(std::string_view src) {
    std::vector<Token> toks;
    size_t i = 0;
    const size_t n = src.size();
    while (i < n) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        size_t pos = i;
        if (c == '\n' || c == ';') {
            toks.push_back({TokKind::Separator, pos, "", Rational(0)});
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < n && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            std::string num(src.substr(i, j - i));
            bool integral = true;
            if (j < n && src[j] == '/' && j + 1 < n &&
                std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
                size_t k = j + 1;
                while (k < n && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
                std::string den(src.substr(j + 1, k - j - 1));
                if (Integer(den) == 0) throw ParseError("zero denominator in rational literal", j + 1);
                num += "/";
                num += den;
                integral = false;
                j = k;
            }
            toks.push_back({TokKind::Number, pos, "", parse_rational(num), integral});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < n && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            toks.push_back({TokKind::Ident, pos, std::string(src.substr(i, j - i)), Rational(0)});
            i = j;
            continue;
        }
        switch (c) {
            case '+': toks.push_back({TokKind::Plus, pos, "", Rational(0)}); break;
            case '-': toks.push_back({TokKind::Minus, pos, "", Rational(0)}); break;
            case '*': toks.push_back({TokKind::Star, pos, "", Rational(0)}); break;
            case '^': toks.push_back({TokKind::Caret, pos, "", Rational(0)}); break;
            case '(': toks.push_back({TokKind::LParen, pos, "", Rational(0)}); break;
            case ')': toks.push_back({TokKind::RParen, pos, "", Rational(0)}); break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", pos);
        }
        ++i;
    }
    toks.push_back({TokKind::End, n, "", Rational(0)});
    return toks;
}

class SystemParser {
public:
    explicit SystemParser(std::string_view src) : toks_(tokenize_system(src)) {}

    PolySystem parse() {
        PolySystem sys;
        std::vector<Polynomial> polys;
        std::vector<size_t> starts;
        while (true) {
            while (at(TokKind::Separator)) advance();
            if (at(TokKind::End)) break;
            starts.push_back(cur().pos);
            polys.push_back(parse_expr(sys));
            if (!at(TokKind::Separator) && !at(TokKind::End))
                throw ParseError("expected end of equation, got " + describe(cur()), cur().pos);
        }
        if (polys.empty()) throw ParseError("empty input", 0);
        for (size_t k = 0; k < polys.size(); ++k) {
            if (polys[k].is_zero())
                throw ParseError("equation identically zero", starts[k]);
        }
        return canonicalize(sys, polys);
    }

private:
    const Token& cur() const { return toks_[idx_]; }
    bool at(TokKind k) const { return cur().kind == k; }
    void advance() { ++idx_; }

    static std::string describe(const Token& t) {
        switch (t.kind) {
            case TokKind::Ident: return "identifier '" + t.text + "'";
            case TokKind::Number: return "number";
            case TokKind::Plus: return "token '+'";
            case TokKind::Minus: return "token '-'";
            case TokKind::Star: return "token '*'";
            case TokKind::Caret: return "token '^'";
            case TokKind::LParen: return "token '('";
            case TokKind::RParen: return "token ')'";
            case TokKind::Separator: return "end of equation";
            case TokKind::End: return "end of input";
        }
        return "token";
    }

    bool factor_start() const {
        return at(TokKind::Ident) || at(TokKind::Number) || at(TokKind::LParen);
    }

    Polynomial parse_expr(PolySystem& sys) {
        bool negate = false;
        if (at(TokKind::Minus)) {
            negate = true;
            advance();
        } else if (at(TokKind::Plus)) {
            advance();
        }
        Polynomial acc = parse_term(sys);
        if (negate) acc = -acc;
        while (at(TokKind::Plus) || at(TokKind::Minus)) {
            bool minus = at(TokKind::Minus);
            advance();
            Polynomial t = parse_term(sys);
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Polynomial parse_term(PolySystem& sys) {
        Polynomial acc = parse_factor(sys);
        while (true) {
            if (at(TokKind::Star)) {
                advance();
                if (!factor_start())
                    throw ParseError("syntax error at " + describe(cur()), cur().pos);
                acc = acc * parse_factor(sys);
            } else if (factor_start()) {
                acc = acc * parse_factor(sys);  // juxtaposition
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial parse_factor(PolySystem& sys) {
        Polynomial base = parse_primary(sys);
        if (at(TokKind::Caret)) {
            size_t pos = cur().pos;
            advance();
            if (!at(TokKind::Number) || !cur().integral)
                throw ParseError("exponent must be an integer literal", cur().pos);
            Integer e = numerator(cur().value);
            if (e < 0) throw ParseError("negative exponent", pos);
            if (e > 64) throw ParseError("exponent too large", pos);
            advance();
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial parse_primary(PolySystem& sys) {
        if (at(TokKind::Number)) {
            Polynomial p = Polynomial::constant(cur().value);
            advance();
            return p;
        }
        if (at(TokKind::Ident)) {
            int v = sys.add_variable(cur().text);
            advance();
            return Polynomial::variable(v);
        }
        if (at(TokKind::LParen)) {
            advance();
            Polynomial p = parse_expr(sys);
            if (!at(TokKind::RParen)) throw ParseError("expected ')'", cur().pos);
            advance();
            return p;
        }
        throw ParseError("syntax error at " + describe(cur()), cur().pos);
    }

    // Reorders variables to their first appearance in the canonical printed
    // form, so printing then reparsing reproduces the same structure.
    static PolySystem canonicalize(const PolySystem& parsed, std::vector<Polynomial> polys) {
        std::vector<std::string> vars = parsed.variables();
        for (int round = 0; round < 4; ++round) {
            std::vector<int> order;  // old index -> appearance rank
            order.assign(vars.size(), -1);
            int next = 0;
            for (const auto& p : polys)
                for (const auto& t : p.terms())
                    for (const auto& [v, e] : t.powers)
                        if (order[static_cast<size_t>(v)] < 0) order[static_cast<size_t>(v)] = next++;
            for (auto& o : order)
                if (o < 0) o = next++;  // variables not used by any equation keep relative order
            bool identity = true;
            for (size_t i = 0; i < order.size(); ++i)
                if (order[i] != static_cast<int>(i)) identity = false;
            if (identity) break;
            std::vector<std::string> new_vars(vars.size());
            for (size_t i = 0; i < vars.size(); ++i) new_vars[static_cast<size_t>(order[i])] = vars[i];
            for (auto& p : polys) p = p.remap_variables(order);
            vars = std::move(new_vars);
        }
        return PolySystem(std::move(vars), std::move(polys));
    }

    std::vector<Token> toks_;
    size_t idx_ = 0;
};

}  // namespace detail

inline PolySystem parse_system(std::string_view text) { return detail::SystemParser(text).parse(); }

}  // namespace rado
