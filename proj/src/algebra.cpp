#include "blockalg/algebra.hpp"

namespace blockalg {

StructureTerm structure_constant(const BasisIndex& a, const BasisIndex& b) {
  // mpz arithmetic: index products stay exact however large the indices get
  mpz_class c = mpz_class(a.alpha - 1) * mpz_class(b.i + 1) -
                mpz_class(b.alpha - 1) * mpz_class(a.i + 1);
  return {Scalar(Rational(c)), index_sum(a, b)};
}

Element bracket(const Element& x, const Element& y) {
  Element r;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      StructureTerm st = structure_constant(a, b);
      if (st.coefficient.is_zero()) continue;
      r.add_term(st.target, Scalar(ca * cb * st.coefficient));
    }
  }
  return r;
}

Scalar cocycle(const BasisIndex& a, const BasisIndex& b) {
  if (a.alpha + b.alpha != 0 || a.i != 0 || b.i != 0) return Scalar(0);
  mpz_class al(a.alpha);
  return Scalar(make_rational(al * al * al - al, mpz_class(6)));
}

Scalar cocycle(const Element& x, const Element& y) {
  Scalar r(0);
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      Scalar psi = cocycle(a, b);
      if (!psi.is_zero()) r += ca * cb * psi;
    }
  }
  return r;
}

}  // namespace blockalg
