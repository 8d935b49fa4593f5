#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

#include "qbrauer/errors.hpp"

namespace qbrauer {

using Int = mpz_class;

// Exact rational scalar backed by GMP. Always in canonical form:
// denominator > 0, gcd(|num|, den) = 1, zero stored as 0/1.
// There is no floating point anywhere in this library.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}        // NOLINT: implicit, scalars appear everywhere
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
  Rational(const Int& n) : v_(n) {}                      // NOLINT

  Rational(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(Int(num), Int(den)) {}

  // Parses "num" or "num/den" with optional leading '-'. Whitespace is not
  // accepted; this is the exact inverse of str().
  static Rational from_string(const std::string& s);

  [[nodiscard]] Int num() const { return v_.get_num(); }
  [[nodiscard]] Int den() const { return v_.get_den(); }

  [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
  [[nodiscard]] bool is_one() const { return v_ == 1; }
  [[nodiscard]] int sign() const { return sgn(v_); }

  [[nodiscard]] Rational inverse() const {
    if (is_zero()) throw DomainError("Rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
  }

  // Integer power, negative exponents allowed on nonzero values.
  [[nodiscard]] Rational pow(long e) const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  // "num" when den == 1, else "num/den".
  [[nodiscard]] std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& x);

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;  // invariant: canonical (gmp keeps it so after canonicalize())
};

// Generalized binomial coefficient binom(m, k) = m(m-1)...(m-k+1) / k!
// for rational m and natural k; binom(m, 0) = 1.
[[nodiscard]] Rational gen_binom(const Rational& m, unsigned long k);

// Exact factorial as an integer.
[[nodiscard]] Int factorial(unsigned long n);

}  // namespace qbrauer
