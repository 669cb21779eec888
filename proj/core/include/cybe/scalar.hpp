#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cybe {

using Rational = boost::multiprecision::cpp_rational;

// Element of Q(i): re + i*im with arbitrary-precision rational parts.
// boost::cpp_rational keeps values in lowest terms with positive
// denominator, so equality is plain component comparison.
struct Scalar {
  Rational re{0};
  Rational im{0};

  Scalar() = default;
  Scalar(long n) : re(n) {}  // NOLINT: implicit by design, mirrors int literals
  Scalar(Rational r) : re(std::move(r)) {}
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Scalar i() { return Scalar{Rational(0), Rational(1)}; }
  static Scalar of(long num, long den) { return Scalar{Rational(num, den)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  Scalar conj() const { return Scalar{re, -im}; }

  friend Scalar operator+(const Scalar& x, const Scalar& y) {
    return Scalar{Rational(x.re + y.re), Rational(x.im + y.im)};
  }
  friend Scalar operator-(const Scalar& x, const Scalar& y) {
    return Scalar{Rational(x.re - y.re), Rational(x.im - y.im)};
  }
  friend Scalar operator-(const Scalar& x) {
    return Scalar{Rational(-x.re), Rational(-x.im)};
  }
  friend Scalar operator*(const Scalar& x, const Scalar& y) {
    return Scalar{Rational(x.re * y.re - x.im * y.im),
                  Rational(x.re * y.im + x.im * y.re)};
  }
  friend Scalar operator/(const Scalar& x, const Scalar& y) {
    if (y.is_zero()) throw std::domain_error("Scalar: division by zero");
    Rational n = y.re * y.re + y.im * y.im;
    return Scalar{Rational((x.re * y.re + x.im * y.im) / n),
                  Rational((x.im * y.re - x.re * y.im) / n)};
  }
  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

  friend bool operator==(const Scalar& x, const Scalar& y) = default;

  // Total order (lexicographic on re, im); used only for deterministic
  // sorting of reports and weight lists, not for any algebra.
  friend bool operator<(const Scalar& x, const Scalar& y) {
    if (x.re != y.re) return x.re < y.re;
    return x.im < y.im;
  }

  // Integer power; negative exponents require a nonzero base.
  Scalar pow(long e) const;

  // "p/q", "p/q*i", "p/q+r/s*i", with the shorthand "i"/"-i" for units.
  std::string str() const;
};

// Parses the textual form emitted by Scalar::str (and common variants
// such as "3i" or "-2/5i"). Throws std::invalid_argument on bad input.
Scalar scalar_from_string(std::string_view text);

std::string rational_to_string(const Rational& r);

}  // namespace cybe
