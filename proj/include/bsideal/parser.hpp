#pragma once

// Recursive-descent parser for polynomial input strings.
//
//   expr   := sign? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := rational | var | '(' expr ')'
//
// Multiplication is always explicit ("2*x", never "2x"). The optional leading
// sign is a small extension over the base grammar so that every canonical
// printed form (which may start with a negative term) parses back.
// parse_poly accepts x-variables only; parse_spoly accepts s-variables only.
// Errors carry the byte offset of the offending token.

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "multipoly.hpp"
#include "signature.hpp"

namespace bsideal {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

class PolyParser {
public:
    PolyParser(const std::string& src, const Signature& sig, bool s_mode)
        : src_(src), sig_(sig), s_mode_(s_mode) {}

    MultiPoly run() {
        MultiPoly p = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    MultiPoly expr() {
        skip_ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            if (get() == '-') sign = -1;
        }
        MultiPoly p = term();
        if (sign < 0) p = -p;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            get();
            MultiPoly q = term();
            if (c == '+') p += q; else p -= q;
        }
        return p;
    }

    MultiPoly term() {
        MultiPoly p = factor();
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            get();
            p *= factor();
        }
        return p;
    }

    MultiPoly factor() {
        MultiPoly b = base();
        skip_ws();
        if (peek() == '^') {
            get();
            unsigned e = natural();
            b = b.pow(e);
        }
        return b;
    }

    MultiPoly base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            get();
            MultiPoly p = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            get();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
        if (std::isalpha(static_cast<unsigned char>(c))) return variable();
        fail(c == '\0' ? "unexpected end of input" : "unexpected character");
        return MultiPoly(sig_);  // unreachable
    }

    MultiPoly rational_literal() {
        std::size_t start = pos_;
        std::string digits = digit_run();
        if (peek() == '/') {
            get();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected denominator digits");
            std::string den = digit_run();
            if (Integer(den) == 0) fail("zero denominator", start);
            return MultiPoly::constant(sig_, Rational::from_string(digits + "/" + den));
        }
        return MultiPoly::constant(sig_, Rational::from_string(digits));
    }

    MultiPoly variable() {
        std::size_t start = pos_;
        std::string name;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
            name += get();
        if (s_mode_) {
            for (int j = 0; j < sig_.r(); ++j)
                if (sig_.s_name(j) == name)
                    return MultiPoly::var(sig_, sig_.s_index(j));
        } else {
            for (int i = 0; i < sig_.n(); ++i)
                if (sig_.x_names()[i] == name)
                    return MultiPoly::var(sig_, sig_.x_index(i));
        }
        fail("unknown variable '" + name + "'", start);
        return MultiPoly(sig_);  // unreachable
    }

    unsigned natural() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a nonnegative integer exponent");
        std::size_t start = pos_;
        std::string digits = digit_run();
        try {
            unsigned long v = std::stoul(digits);
            if (v > 4096) fail("exponent too large", start);
            return static_cast<unsigned>(v);
        } catch (const std::out_of_range&) {
            fail("exponent too large", start);
        }
        return 0;  // unreachable
    }

    std::string digit_run() {
        std::string out;
        while (std::isdigit(static_cast<unsigned char>(peek()))) out += get();
        return out;
    }

    void skip_ws() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }
    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    char get() { return src_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) { fail(msg, pos_); }
    [[noreturn]] void fail(const std::string& msg, std::size_t pos) {
        throw ParseError(msg, pos);
    }

    const std::string& src_;
    const Signature& sig_;
    bool s_mode_;
    std::size_t pos_ = 0;
};

}  // namespace detail

// Polynomial in the signature's x-variables.
inline MultiPoly parse_poly(const std::string& src, const Signature& sig) {
    return detail::PolyParser(src, sig, /*s_mode=*/false).run();
}

// Polynomial in the signature's s-variables (b-polynomial input).
inline MultiPoly parse_spoly(const std::string& src, const Signature& sig) {
    return detail::PolyParser(src, sig, /*s_mode=*/true).run();
}

// Identifier scan used by the CLI to infer a signature from input strings.
inline std::vector<std::string> collect_identifiers(const std::string& src) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < src.size()) {
        if (std::isalpha(static_cast<unsigned char>(src[i]))) {
            std::string name;
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                name += src[i++];
            bool seen = false;
            for (auto& n : out) seen = seen || n == name;
            if (!seen) out.push_back(name);
        } else {
            ++i;
        }
    }
    return out;
}

}  // namespace bsideal
