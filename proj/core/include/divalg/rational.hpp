#ifndef DIVALG_RATIONAL_HPP
#define DIVALG_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include "divalg/errors.hpp"

namespace divalg {

/// Exact rational scalar. Always canonical: lowest terms, denominator > 0,
/// zero is 0/1. Backed by GMP; no floating point anywhere in this library.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long num, long den);
    explicit Rational(mpz_class n) : q_(std::move(n)) {}
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "-7", "3/2", "1/-3". Decimal points, exponents and a zero
    /// denominator are rejected.
    static Rational parse(std::string_view text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_square() const;
    int sign() const { return sgn(q_); }

    /// Bits in numerator plus bits in denominator; pivot-selection heuristic.
    std::size_t bit_size() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational inverse() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational pow(long e) const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    /// "p/q", or just "p" for integers.
    std::string str() const;

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace divalg

#endif
