#include "blockalg/sampling.hpp"

namespace blockalg {

Rational random_rational(SeededRng& rng, bool nonzero) {
  long num = rng.uniform(-6, 6);
  if (nonzero)
    while (num == 0) num = rng.uniform(-6, 6);
  return make_rational(num, rng.uniform(1, 4));
}

Scalar random_scalar(SeededRng& rng, bool nonzero, bool allow_imaginary) {
  const bool imaginary = allow_imaginary && rng.uniform(0, 3) == 0;
  Rational re = random_rational(rng, nonzero && !imaginary);
  if (!imaginary) return Scalar(std::move(re));
  return Scalar(std::move(re), random_rational(rng, nonzero));
}

BasisIndex random_index(SeededRng& rng, const Window& window) {
  return BasisIndex(rng.uniform(window.alpha_min, window.alpha_max),
                    rng.uniform(0, window.i_max));
}

Element random_element(SeededRng& rng, const Window& window, std::size_t max_terms) {
  const std::int64_t terms = rng.uniform(1, static_cast<std::int64_t>(max_terms));
  Element e;
  for (std::int64_t t = 0; t < terms; ++t)
    e.add_term(random_index(rng, window), random_scalar(rng, /*nonzero=*/true));
  return e;
}

Element random_dense_element(SeededRng& rng, const Window& window) {
  Element e;
  for (const BasisIndex& b : window.indices())
    if (rng.uniform(0, 3) != 0) e.add_term(b, random_scalar(rng, /*nonzero=*/true));
  return e;
}

InnerOuterDerivation random_derivation(SeededRng& rng, const Window& window,
                                       std::size_t max_terms) {
  InnerOuterDerivation d;
  d.inner = random_element(rng, window, max_terms);
  d.lambda = rng.uniform(0, 3) == 0 ? Scalar(0) : random_scalar(rng, /*nonzero=*/true);
  return d;
}

std::vector<ElementPair> random_element_pairs(SeededRng& rng, const Window& window,
                                              std::size_t count, std::size_t max_terms) {
  std::vector<ElementPair> pairs;
  pairs.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Element x = random_element(rng, window, max_terms);
    Element y = random_element(rng, window, max_terms);
    pairs.emplace_back(std::move(x), std::move(y));
  }
  return pairs;
}

std::vector<Element> make_probes(const Window& window, std::uint64_t seed,
                                 std::size_t random_count) {
  std::vector<Element> probes;
  for (const BasisIndex& b : window.indices()) probes.push_back(Element::basis(b));
  SeededRng rng(seed);
  for (std::size_t k = 0; k < random_count; ++k)
    probes.push_back(random_dense_element(rng, window));
  return probes;
}

}  // namespace blockalg
