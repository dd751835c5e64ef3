#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace blockalg {

/// Index (alpha, i) of the basis vector L[alpha,i]; i is never negative.
/// The ordering is lexicographic by (alpha, i) and fixes every canonical
/// iteration and output order in the library.
struct BasisIndex {
  std::int64_t alpha = 0;
  std::int64_t i = 0;

  BasisIndex() = default;
  BasisIndex(std::int64_t alpha_, std::int64_t i_) : alpha(alpha_), i(i_) {
    if (i < 0) throw std::invalid_argument("BasisIndex: second index must be nonnegative");
  }

  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

/// Component-wise sum; the target index of a bracket of basis vectors.
inline BasisIndex index_sum(const BasisIndex& a, const BasisIndex& b) {
  return {a.alpha + b.alpha, a.i + b.i};
}

/// Finite rectangle {(alpha, i) : alpha_min <= alpha <= alpha_max, 0 <= i <= i_max}.
/// Bounds solver search spaces and exhaustive checks; arithmetic never needs one.
struct Window {
  std::int64_t alpha_min;
  std::int64_t alpha_max;
  std::int64_t i_max;

  Window(std::int64_t amin, std::int64_t amax, std::int64_t imax)
      : alpha_min(amin), alpha_max(amax), i_max(imax) {
    if (amin > amax) throw std::invalid_argument("Window: alpha_min > alpha_max");
    if (imax < 0) throw std::invalid_argument("Window: i_max must be nonnegative");
  }

  bool contains(const BasisIndex& b) const {
    return b.alpha >= alpha_min && b.alpha <= alpha_max && b.i <= i_max;
  }

  std::size_t size() const {
    return static_cast<std::size_t>(alpha_max - alpha_min + 1) *
           static_cast<std::size_t>(i_max + 1);
  }

  /// All indices in canonical (alpha, i) order.
  std::vector<BasisIndex> indices() const {
    std::vector<BasisIndex> out;
    out.reserve(size());
    for (std::int64_t a = alpha_min; a <= alpha_max; ++a)
      for (std::int64_t i = 0; i <= i_max; ++i) out.emplace_back(a, i);
    return out;
  }

  friend bool operator==(const Window&, const Window&) = default;
};

std::ostream& operator<<(std::ostream& os, const BasisIndex& b);

}  // namespace blockalg
