#pragma once

#include "blockalg/element.hpp"

namespace blockalg {

/// One bracket of basis vectors: [L_a, L_b] = coefficient * L_target.
struct StructureTerm {
  Scalar coefficient;
  BasisIndex target;
};

/// The defining relations: coefficient ((alpha-1)(j+1) - (beta-1)(i+1)),
/// target (alpha+beta, i+j) for a = (alpha, i), b = (beta, j).
StructureTerm structure_constant(const BasisIndex& a, const BasisIndex& b);

/// Bilinear extension of the defining relations; exact and normalized.
Element bracket(const Element& x, const Element& y);

/// Central-extension 2-cocycle: delta_{alpha+beta,0} delta_{i,0} delta_{j,0} (alpha^3-alpha)/6.
Scalar cocycle(const BasisIndex& a, const BasisIndex& b);

/// Bilinear lift of the cocycle to elements.
Scalar cocycle(const Element& x, const Element& y);

}  // namespace blockalg
