#include "blockalg/derivation.hpp"

#include <stdexcept>

#include "blockalg/errors.hpp"
#include "blockalg/expr.hpp"

namespace blockalg {

Element outer_d(const Element& x) {
  Element r;
  for (const auto& [b, c] : x.terms()) r.add_term(b, Scalar(Rational(b.alpha)) * c);
  return r;
}

Element apply(const InnerOuterDerivation& D, const Element& x) {
  Element r = bracket(D.inner, x);
  if (!D.lambda.is_zero()) r += D.lambda * outer_d(x);
  return r;
}

InnerOuterDerivation kernel_derivation() {
  return {Element::basis(BasisIndex(0, 0)), Scalar(1)};
}

DerivationTable::DerivationTable(Window window, std::map<BasisIndex, Element> assignments)
    : window_(window), assignments_(std::move(assignments)) {
  for (const BasisIndex& b : window_.indices()) {
    if (!assignments_.count(b))
      throw MissingAssignment("derivation table misses an assignment for " + format_basis_index(b),
                              b);
  }
  for (const auto& [b, unused] : assignments_) {
    if (!window_.contains(b))
      throw std::invalid_argument("derivation table assignment outside its window");
  }
}

std::optional<Element> DerivationTable::apply(const Element& x) const {
  Element r;
  for (const auto& [b, c] : x.terms()) {
    auto it = assignments_.find(b);
    if (it == assignments_.end()) return std::nullopt;
    r += c * it->second;
  }
  return r;
}

DerivationTable tabulate(const InnerOuterDerivation& D, const Window& window) {
  std::map<BasisIndex, Element> rows;
  for (const BasisIndex& b : window.indices()) rows.emplace(b, apply(D, Element::basis(b)));
  return DerivationTable(window, std::move(rows));
}

namespace {

template <typename ApplyFn>
LeibnizReport check_leibniz_impl(ApplyFn&& act, std::span<const ElementPair> pairs) {
  LeibnizReport report;
  for (const auto& [x, y] : pairs) {
    const Element xy = bracket(x, y);
    std::optional<Element> dx = act(x);
    std::optional<Element> dy = act(y);
    std::optional<Element> dxy = act(xy);
    if (!dx || !dy || !dxy) {
      const char* which = !dx ? "x" : (!dy ? "y" : "[x,y]");
      report.skipped.push_back({x, y, std::string(which) + " escapes the table window"});
      continue;
    }
    Element residual = *dxy - bracket(*dx, y) - bracket(x, *dy);
    ++report.checked;
    if (!residual.is_zero()) report.failures.push_back({x, y, std::move(residual)});
  }
  return report;
}

}  // namespace

LeibnizReport check_leibniz(const InnerOuterDerivation& D, std::span<const ElementPair> pairs) {
  return check_leibniz_impl(
      [&D](const Element& v) { return std::optional<Element>(apply(D, v)); }, pairs);
}

LeibnizReport check_leibniz(const DerivationTable& table, std::span<const ElementPair> pairs) {
  return check_leibniz_impl([&table](const Element& v) { return table.apply(v); }, pairs);
}

namespace {

// Shared assembly for decompose / find_annihilators: the action of the
// unknown ad(a) + lambda*d on a basis vector b, as rows of coefficients per
// target index. Unknown order: search indices ascending, lambda last.
struct ActionSystem {
  std::vector<BasisIndex> unknowns;  // without lambda
  std::map<BasisIndex, std::size_t> unknown_pos;
  ScalarMatrix rows;
  ScalarRow rhs;

  explicit ActionSystem(const Window& search) : unknowns(search.indices()) {
    for (std::size_t k = 0; k < unknowns.size(); ++k) unknown_pos.emplace(unknowns[k], k);
  }

  std::size_t columns() const { return unknowns.size() + 1; }

  // Adds the coefficient equations of (ad(a) + lambda*d)(x) = rhs_element.
  void add_equations(const Element& x, const Element& rhs_element) {
    std::map<BasisIndex, ScalarRow> per_target;
    auto row_for = [&](const BasisIndex& t) -> ScalarRow& {
      auto it = per_target.find(t);
      if (it == per_target.end())
        it = per_target.emplace(t, ScalarRow(columns(), Scalar(0))).first;
      return it->second;
    };

    for (std::size_t k = 0; k < unknowns.size(); ++k) {
      const Element contribution = bracket(Element::basis(unknowns[k]), x);
      for (const auto& [t, c] : contribution.terms()) row_for(t)[k] += c;
    }
    const Element dx = outer_d(x);
    for (const auto& [t, c] : dx.terms()) row_for(t)[unknowns.size()] += c;
    for (const auto& [t, unused] : rhs_element.terms()) row_for(t);  // force the row

    for (auto& [t, row] : per_target) {
      rows.push_back(std::move(row));
      rhs.push_back(rhs_element.coeff(t));
    }
  }

  InnerOuterDerivation to_derivation(const ScalarRow& coords) const {
    InnerOuterDerivation d;
    for (std::size_t k = 0; k < unknowns.size(); ++k) d.inner.add_term(unknowns[k], coords[k]);
    d.lambda = coords[unknowns.size()];
    return d;
  }
};

}  // namespace

DecomposeResult decompose(const DerivationTable& table, const Window& search) {
  ActionSystem sys(search);
  for (const BasisIndex& b : table.window().indices())
    sys.add_equations(Element::basis(b), table.at(b));

  LinearSolution sol = solve_linear(std::move(sys.rows), std::move(sys.rhs), sys.columns());

  DecomposeResult result;
  result.status = sol.status;
  switch (sol.status) {
    case SolveStatus::ok: {
      result.derivation = sys.to_derivation(sol.solution);
      // the equations already encode agreement on the window; verify anyway
      for (const BasisIndex& b : table.window().indices()) {
        if (apply(result.derivation, Element::basis(b)) != table.at(b))
          throw std::logic_error("decompose: nonzero residual after a unique solve");
      }
      break;
    }
    case SolveStatus::underdetermined:
      for (const ScalarRow& v : sol.nullspace) result.free_directions.push_back(sys.to_derivation(v));
      break;
    case SolveStatus::inconsistent:
      break;
  }
  return result;
}

DecomposeResult decompose(const DerivationTable& table) {
  return decompose(table, table.window());
}

std::vector<InnerOuterDerivation> find_annihilators(std::span<const Element> targets,
                                                    const Window& search) {
  ActionSystem sys(search);
  for (const Element& t : targets) sys.add_equations(t, Element());

  ScalarMatrix basis = nullspace_basis(std::move(sys.rows), sys.columns());
  std::vector<InnerOuterDerivation> out;
  out.reserve(basis.size());
  for (const ScalarRow& v : basis) out.push_back(sys.to_derivation(v));
  return out;
}

}  // namespace blockalg
