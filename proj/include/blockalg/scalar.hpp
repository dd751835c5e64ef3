#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <utility>

namespace blockalg {

/// Exact rational number, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// Builds the canonical rational num/den. Throws std::domain_error if den == 0.
Rational make_rational(const mpz_class& num, const mpz_class& den);
Rational make_rational(long num, long den = 1);

/// Gaussian rational a + b*i: the exact coefficient field of the library.
/// Every operation is exact; equality is decidable.
struct Scalar {
  Rational re{0};
  Rational im{0};

  Scalar() = default;
  Scalar(long n) : re(n) {}  // NOLINT: implicit by design, enables 0/1/-2 literals
  Scalar(Rational r) : re(std::move(r)) {}
  Scalar(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  static Scalar imaginary_unit() { return Scalar(Rational(0), Rational(1)); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  Scalar conjugate() const { return Scalar(re, Rational(-im)); }

  /// re^2 + im^2, the multiplicative norm.
  Rational norm() const { return Rational(re * re + im * im); }

  /// Multiplicative inverse. Throws std::domain_error on zero.
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a) { return Scalar(Rational(-a.re), Rational(-a.im)); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

/// Canonical text form (defined with the expression grammar).
std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace blockalg
