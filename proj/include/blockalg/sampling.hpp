#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "blockalg/derivation.hpp"

namespace blockalg {

/// Deterministic generator for all randomized checks: mt19937-64 with
/// explicit range reduction, so a (seed, call sequence) pair yields the same
/// values on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish integer in [lo, hi], inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

 private:
  std::mt19937_64 engine_;
};

/// Small random rational, numerator in [-6,6], denominator in [1,4].
Rational random_rational(SeededRng& rng, bool nonzero);

/// Random scalar; one in four draws gets an imaginary part when allowed.
Scalar random_scalar(SeededRng& rng, bool nonzero, bool allow_imaginary = true);

BasisIndex random_index(SeededRng& rng, const Window& window);

/// Element with up to max_terms random terms inside the window (at least one
/// drawn; cancellation can still produce zero).
Element random_element(SeededRng& rng, const Window& window, std::size_t max_terms);

/// Element supported on about three quarters of the window.
Element random_dense_element(SeededRng& rng, const Window& window);

/// Random ad(a) + lambda*d with supp(a) in the window; lambda is zero one
/// time in four.
InnerOuterDerivation random_derivation(SeededRng& rng, const Window& window,
                                       std::size_t max_terms);

std::vector<ElementPair> random_element_pairs(SeededRng& rng, const Window& window,
                                              std::size_t count, std::size_t max_terms);

/// Default probe set for reconstruction verification: every basis vector of
/// the window plus `random_count` seeded dense elements.
std::vector<Element> make_probes(const Window& window, std::uint64_t seed,
                                 std::size_t random_count = 10);

}  // namespace blockalg
