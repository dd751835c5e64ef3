#include "blockalg/scalar.hpp"

namespace blockalg {

Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num);
  q /= Rational(den);  // mpq division canonicalizes
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(mpz_class(num), mpz_class(den));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  const Rational n = norm();
  return Scalar(Rational(re / n), Rational(-im / n));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  *this = *this / o;
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return Scalar(Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

}  // namespace blockalg
