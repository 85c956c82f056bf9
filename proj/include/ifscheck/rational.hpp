#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision exact rational scalar.
 *
 * Always kept in canonical form: denominator positive, gcd(|num|, den) = 1,
 * zero stored as 0/1. Equality is therefore structural. Word maps of depth n
 * carry denominators of size 6^n, so fixed-width integers are not an option.
 */

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ifscheck {

class Rational {
 public:
  using Int = boost::multiprecision::mpz_int;

  Rational() = default;
  Rational(long long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const Int& n) : v_(n) {}
  /// Throws InputError when d == 0.
  Rational(const Int& n, const Int& d);

  /// Parses "p/q" or "p" (optional leading '-'). Throws InputError.
  static Rational parse(std::string_view text);

  Int numerator() const;
  Int denominator() const;

  bool is_zero() const;
  bool is_integer() const;
  int sign() const;

  /// Largest integer <= *this.
  Int floor() const;
  /// Smallest integer >= *this.
  Int ceil() const;

  double to_double() const;
  /// Always "p/q" (q >= 1), e.g. "0/1", "-1/2".
  std::string to_string() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws InputError on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  explicit Rational(boost::multiprecision::mpq_rational v) : v_(std::move(v)) {}
  boost::multiprecision::mpq_rational v_;
};

/// n/d in canonical form. Throws InputError when d == 0.
Rational rat(long long n, long long d);

Rational abs(const Rational& r);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);
/// base^exp for exp >= 0.
Rational pow(const Rational& base, unsigned exp);
/// 6^{-n}, the side length of a level-n cell of a ratio-1/6 system.
Rational inverse_power_of_six(unsigned n);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace ifscheck
