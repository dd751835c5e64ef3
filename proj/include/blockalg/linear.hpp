#pragma once

#include <cstddef>
#include <vector>

#include "blockalg/scalar.hpp"

namespace blockalg {

using ScalarRow = std::vector<Scalar>;
using ScalarMatrix = std::vector<ScalarRow>;

enum class SolveStatus { ok, inconsistent, underdetermined };

/// In-place reduced row echelon form over the exact field; columns are
/// eliminated left to right (unknown order = column order), so the result
/// is canonical for a fixed row set. Returns the pivot column of each
/// pivot row, ascending.
std::vector<std::size_t> reduced_row_echelon(ScalarMatrix& m);

struct LinearSolution {
  SolveStatus status = SolveStatus::ok;
  /// Unknown values when status == ok.
  ScalarRow solution;
  /// Canonical homogeneous basis (one vector per free column, ascending)
  /// when status == underdetermined.
  ScalarMatrix nullspace;
};

/// Solves lhs * x = rhs exactly over `columns` unknowns. lhs may be empty
/// (no constraints); every present row must have `columns` entries.
LinearSolution solve_linear(ScalarMatrix lhs, ScalarRow rhs, std::size_t columns);

/// Canonical basis of {x : lhs * x = 0}.
ScalarMatrix nullspace_basis(ScalarMatrix lhs, std::size_t columns);

}  // namespace blockalg
