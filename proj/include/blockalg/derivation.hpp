#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "blockalg/algebra.hpp"
#include "blockalg/linear.hpp"

namespace blockalg {

/// D = ad(inner) + lambda * d, where d(L[b,j]) = b * L[b,j] is the outer
/// derivation. Two of these are equal as maps iff they are equal
/// component-wise (the center is trivial and d is outer).
struct InnerOuterDerivation {
  Element inner;
  Scalar lambda;

  friend bool operator==(const InnerOuterDerivation&, const InnerOuterDerivation&) = default;

  friend InnerOuterDerivation operator+(const InnerOuterDerivation& a,
                                        const InnerOuterDerivation& b) {
    return {a.inner + b.inner, a.lambda + b.lambda};
  }
  friend InnerOuterDerivation operator-(const InnerOuterDerivation& a,
                                        const InnerOuterDerivation& b) {
    return {a.inner - b.inner, a.lambda - b.lambda};
  }
  friend InnerOuterDerivation operator*(const Scalar& c, const InnerOuterDerivation& d) {
    return {c * d.inner, c * d.lambda};
  }
};

/// The outer derivation d: L[b,j] -> b * L[b,j], extended linearly.
Element outer_d(const Element& x);

/// bracket(inner, x) + lambda * d(x).
Element apply(const InnerOuterDerivation& D, const Element& x);

/// ad(L[0,0]) + d, which annihilates L[0,0] and L[1,0] and scales L[b,j] by -j.
InnerOuterDerivation kernel_derivation();

/// Finite presentation of a candidate derivation: one assignment per index
/// of the window. Assignments may have support outside the window.
class DerivationTable {
 public:
  DerivationTable(Window window, std::map<BasisIndex, Element> assignments);

  const Window& window() const { return window_; }
  const std::map<BasisIndex, Element>& assignments() const { return assignments_; }

  const Element& at(const BasisIndex& b) const { return assignments_.at(b); }

  /// Linear extension to elements supported inside the window; nullopt when
  /// the support escapes.
  std::optional<Element> apply(const Element& x) const;

 private:
  Window window_;
  std::map<BasisIndex, Element> assignments_;
};

/// Restriction of D to a window, as a table.
DerivationTable tabulate(const InnerOuterDerivation& D, const Window& window);

using ElementPair = std::pair<Element, Element>;

struct LeibnizFailure {
  Element x, y, residual;  // residual = D([x,y]) - [D(x),y] - [x,D(y)]
};

struct LeibnizSkipped {
  Element x, y;
  std::string reason;
};

struct LeibnizReport {
  std::size_t checked = 0;
  std::vector<LeibnizFailure> failures;
  std::vector<LeibnizSkipped> skipped;

  bool ok() const { return failures.empty(); }
};

LeibnizReport check_leibniz(const InnerOuterDerivation& D, std::span<const ElementPair> pairs);
/// Table form: pairs whose members or bracket escape the window are
/// reported as skipped, not failed.
LeibnizReport check_leibniz(const DerivationTable& table, std::span<const ElementPair> pairs);

struct DecomposeResult {
  SolveStatus status = SolveStatus::ok;
  /// The unique (inner, lambda) when status == ok.
  InnerOuterDerivation derivation;
  /// Directions of the solution space when status == underdetermined.
  std::vector<InnerOuterDerivation> free_directions;

  bool ok() const { return status == SolveStatus::ok; }
};

/// Recovers the unique ad(a) + lambda*d agreeing with the table on its whole
/// window, with supp(a) restricted to the search window. The one-argument
/// form searches the table's own window.
DecomposeResult decompose(const DerivationTable& table, const Window& search);
DecomposeResult decompose(const DerivationTable& table);

/// Canonical basis of {(a, lambda) : supp(a) in search, (ad(a)+lambda*d)(t) = 0
/// for every target t}. Empty means only the zero solution.
std::vector<InnerOuterDerivation> find_annihilators(std::span<const Element> targets,
                                                    const Window& search);

std::ostream& operator<<(std::ostream& os, const InnerOuterDerivation& D);

}  // namespace blockalg
