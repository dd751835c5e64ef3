#pragma once

// Test-only cross-checks: a deliberately plain dense elimination, written
// separately from the library solver, used to confirm ranks, nullspace
// dimensions and span membership.

#include <optional>
#include <set>
#include <span>
#include <vector>

#include "blockalg/derivation.hpp"

namespace oracle {

using blockalg::BasisIndex;
using blockalg::Element;
using blockalg::InnerOuterDerivation;
using blockalg::Scalar;
using blockalg::Window;

using Matrix = std::vector<std::vector<Scalar>>;

// Row echelon by straightforward forward elimination; returns the rank.
inline std::size_t rank(Matrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && m[pr][c].is_zero()) ++pr;
    if (pr == rows) continue;
    std::swap(m[r], m[pr]);
    for (std::size_t rr = r + 1; rr < rows; ++rr) {
      if (m[rr][c].is_zero()) continue;
      const Scalar f = m[rr][c] / m[r][c];
      for (std::size_t cc = c; cc < cols; ++cc) m[rr][cc] -= f * m[r][cc];
    }
    ++r;
  }
  return r;
}

inline bool in_span(Matrix vectors, const std::vector<Scalar>& v) {
  const std::size_t base = rank(vectors);
  vectors.push_back(v);
  return rank(std::move(vectors)) == base;
}

// Coordinates of (inner, lambda) over (window indices..., lambda); nullopt if
// the support leaks outside the window.
inline std::optional<std::vector<Scalar>> derivation_coords(const InnerOuterDerivation& d,
                                                            const Window& window) {
  std::vector<Scalar> v;
  for (const BasisIndex& b : window.indices()) v.push_back(d.inner.coeff(b));
  for (const auto& [b, unused] : d.inner.terms())
    if (!window.contains(b)) return std::nullopt;
  v.push_back(d.lambda);
  return v;
}

// Dense matrix of the map (a, lambda) -> (ad(a) + lambda*d)(targets), one
// column per window index plus one for lambda, one row per reachable
// coefficient.
inline Matrix annihilation_matrix(std::span<const Element> targets, const Window& search) {
  Matrix m;
  const std::vector<BasisIndex> unknowns = search.indices();
  for (const Element& t : targets) {
    std::vector<Element> images;
    images.reserve(unknowns.size() + 1);
    for (const BasisIndex& u : unknowns)
      images.push_back(blockalg::bracket(Element::basis(u), t));
    images.push_back(blockalg::outer_d(t));

    std::set<BasisIndex> coefficients;
    for (const Element& img : images)
      for (const auto& [b, unused] : img.terms()) coefficients.insert(b);

    for (const BasisIndex& row_index : coefficients) {
      std::vector<Scalar> row;
      row.reserve(images.size());
      for (const Element& img : images) row.push_back(img.coeff(row_index));
      m.push_back(std::move(row));
    }
  }
  return m;
}

inline std::size_t annihilator_nullity(std::span<const Element> targets, const Window& search) {
  return search.size() + 1 - rank(annihilation_matrix(targets, search));
}

}  // namespace oracle
