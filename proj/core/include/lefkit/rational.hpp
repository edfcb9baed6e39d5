#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "lefkit/errors.hpp"

namespace lefkit {

/// Arbitrary-precision rational number, always canonical: lowest terms,
/// positive denominator, zero stored as 0/1. Arithmetic is exact; division
/// by zero raises DivisionByZero. Values are immutable in spirit: every
/// operation returns a fresh value and never mutates shared state.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(long n, long d);
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d);

    /// Accepts "p", "-p", "p/q" with arbitrary-precision digits.
    static Rational parse(std::string_view text);

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return !(a == b);
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.v_ < b.v_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a.v_ <= b.v_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) {
        return b <= a;
    }

    Rational abs() const;
    Rational inverse() const;

    /// a^k for k >= 0 (0^0 = 1).
    Rational pow(unsigned k) const;

    /// Canonical text form: "p" when the denominator is 1, else "p/q".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

enum class RationalOp { Add, Sub, Mul, Div };

/// Dispatch form of the four field operations; Div with b = 0 raises
/// DivisionByZero.
Rational rational_arith(const Rational& a, const Rational& b, RationalOp op);

}  // namespace lefkit
