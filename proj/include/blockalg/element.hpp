#pragma once

#include <initializer_list>
#include <iosfwd>
#include <map>
#include <utility>

#include "blockalg/basis.hpp"
#include "blockalg/scalar.hpp"

namespace blockalg {

/// Finitely supported Scalar-valued map on BasisIndex: a vector of the algebra.
/// Invariant: no stored coefficient is zero; iteration follows the canonical
/// (alpha, i) order.
class Element {
 public:
  using Terms = std::map<BasisIndex, Scalar>;

  Element() = default;

  static Element basis(const BasisIndex& b) { return term(1, b); }

  static Element term(const Scalar& c, const BasisIndex& b) {
    Element e;
    e.add_term(b, c);
    return e;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  /// Coefficient at b; exact zero outside the support.
  Scalar coeff(const BasisIndex& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// Accumulates c at index b, dropping the entry if the sum cancels.
  Element& add_term(const BasisIndex& b, const Scalar& c) {
    if (c.is_zero()) return *this;
    auto [it, inserted] = terms_.emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
  }

  Element& operator+=(const Element& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }

  Element& operator-=(const Element& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
  }

  friend Element operator+(Element x, const Element& y) { return x += y; }
  friend Element operator-(Element x, const Element& y) { return x -= y; }

  friend Element operator-(const Element& x) {
    Element r;
    for (const auto& [b, c] : x.terms_) r.terms_.emplace(b, -c);
    return r;
  }

  friend Element operator*(const Scalar& c, const Element& x) {
    Element r;
    if (c.is_zero()) return r;
    for (const auto& [b, v] : x.terms_) r.terms_.emplace(b, Scalar(c * v));
    return r;
  }

  friend bool operator==(const Element& x, const Element& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const Element& x, const Element& y) { return !(x == y); }

 private:
  Terms terms_;
};

/// Canonical text form (defined with the expression grammar).
std::ostream& operator<<(std::ostream& os, const Element& x);

}  // namespace blockalg
