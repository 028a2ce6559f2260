#pragma once

// Exact rational arithmetic on top of GMP. Values are always stored reduced
// with a positive denominator; zero is 0/1. No floating point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bsideal {

using Integer = mpz_class;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) { normalize(); }
    Rational(const Integer& num, const Integer& den) : v_(num, den) { normalize(); }

    // Accepts "3", "-3", "5/6", "-5/6". Denominator must be nonzero.
    static Rational from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("not a rational literal: '" + s + "'");
        if (q.get_den() == 0) throw std::domain_error("zero denominator: '" + s + "'");
        q.canonicalize();
        Rational r;
        r.v_ = q;
        return r;
    }

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { Rational r; r.v_ = -v_; return r; }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { Rational r; r.v_ = ::abs(v_); return r; }
    Rational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        Rational r;
        r.v_ = 1 / v_;
        return r;
    }

    // Total bit size of numerator and denominator; used for pivot selection.
    std::size_t bit_size() const {
        return mpz_sizeinbase(v_.get_num().get_mpz_t(), 2) +
               mpz_sizeinbase(v_.get_den().get_mpz_t(), 2);
    }

    std::string str() const { return v_.get_str(); }

private:
    void normalize() {
        if (v_.get_den() == 0) throw std::domain_error("zero denominator");
        v_.canonicalize();
    }

    mpq_class v_;
};

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

inline Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// Exact integer quotient; throws if not divisible.
inline Integer exact_div(const Integer& a, const Integer& b) {
    if (b == 0) throw std::domain_error("integer division by zero");
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::domain_error("inexact integer division");
    return q;
}

}  // namespace bsideal
