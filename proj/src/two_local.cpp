#include "blockalg/two_local.hpp"

#include "blockalg/expr.hpp"

namespace blockalg {

namespace {

const BasisIndex kOrigin{0, 0};

void check_kernel_member(const WitnessPerturbation& p, const Element& member) {
  Element residual = apply(p.kernel, member);
  if (!residual.is_zero())
    throw KernelNotAnnihilating("witness kernel " + format_derivation(p.kernel) +
                                    " does not annihilate " + format_element(member) +
                                    "; residual: " + format_element(residual),
                                member, residual);
}

}  // namespace

void WitnessFamilySpec::validate() const {
  for (const WitnessPerturbation& p : perturbations) {
    check_kernel_member(p, p.x);
    check_kernel_member(p, p.y);
  }
}

TwoLocalMap WitnessFamilySpec::to_map() const {
  WitnessFamilySpec spec = *this;
  return TwoLocalMap{[spec](const Element& x, const Element& y) {
    InnerOuterDerivation d = spec.hidden;
    for (const WitnessPerturbation& p : spec.perturbations)
      if (p.x == x && p.y == y) d = d + p.coeff * p.kernel;
    return d;
  }};
}

AuditReport audit_witnesses(const TwoLocalMap& map, std::span<const ElementPair> pairs) {
  static const Scalar homogeneity_samples[] = {Scalar(0), Scalar(-1), Scalar(2),
                                               Scalar(make_rational(1, 2))};
  AuditReport report;
  for (const auto& [x, y] : pairs) {
    const InnerOuterDerivation witness = map.provider(x, y);
    const Element dx = map.evaluate(x);
    const Element dy = map.evaluate(y);

    Element rx = apply(witness, x) - dx;
    if (!rx.is_zero())
      report.violations.push_back({x, y, "witness disagrees with Delta at x", std::move(rx)});
    Element ry = apply(witness, y) - dy;
    if (!ry.is_zero())
      report.violations.push_back({x, y, "witness disagrees with Delta at y", std::move(ry)});

    for (const Scalar& k : homogeneity_samples) {
      Element rk = map.evaluate(k * x) - k * dx;
      if (!rk.is_zero())
        report.violations.push_back(
            {x, y, "homogeneity fails at k = " + format_scalar(k), std::move(rk)});
    }
    ++report.pairs_checked;
  }
  return report;
}

std::optional<BasisIndex> lemma31_allowed_index(std::int64_t beta, std::int64_t j,
                                                std::int64_t i) {
  const mpz_class num = mpz_class(beta) * i + beta - i + j;
  const mpz_class den = mpz_class(j) + 1;
  if (num % den != 0) return std::nullopt;
  const mpz_class k = num / den;
  if (!k.fits_slong_p()) return std::nullopt;
  return BasisIndex(k.get_si(), i);
}

namespace {

void require_annihilates(const InnerOuterDerivation& D, const Element& target) {
  Element image = apply(D, target);
  if (!image.is_zero())
    throw PreconditionFailed("derivation does not annihilate " + format_element(target) +
                             "; image: " + format_element(image));
}

}  // namespace

ConstraintReport lemma31_constraint_check(std::int64_t beta, std::int64_t j,
                                          const InnerOuterDerivation& D) {
  if (j < 0) throw std::invalid_argument("lemma31_constraint_check: j must be nonnegative");
  require_annihilates(D, Element::basis(BasisIndex(beta, j)));

  ConstraintReport report;
  if (beta + j != 0) {
    const Scalar required_a00 =
        Scalar(make_rational(mpz_class(beta), mpz_class(beta) + j)) * D.lambda;
    bool saw_origin = false;
    for (const auto& [idx, c] : D.inner.terms()) {
      ++report.terms_checked;
      if (idx == kOrigin) {
        saw_origin = true;
        if (c != required_a00)
          report.violations.push_back("coefficient at L[0,0] is " + format_scalar(c) +
                                      " but (beta/(beta+j))*lambda = " +
                                      format_scalar(required_a00));
        continue;
      }
      std::optional<BasisIndex> allowed = lemma31_allowed_index(beta, j, idx.i);
      if (!allowed)
        report.violations.push_back("row i = " + std::to_string(idx.i) +
                                    " admits no support: (j+1) does not divide beta*i+beta-i+j");
      else if (*allowed != idx)
        report.violations.push_back("support at " + format_basis_index(idx) +
                                    " but row i = " + std::to_string(idx.i) +
                                    " allows only " + format_basis_index(*allowed));
    }
    if (!saw_origin && !required_a00.is_zero())
      report.violations.push_back("coefficient at L[0,0] is 0 but (beta/(beta+j))*lambda = " +
                                  format_scalar(required_a00));
  } else {
    if (beta != 0 && !D.lambda.is_zero())
      report.violations.push_back("lambda is " + format_scalar(D.lambda) +
                                  " but must vanish for beta != 0");
    for (const auto& [idx, c] : D.inner.terms()) {
      ++report.terms_checked;
      if (idx.alpha != -idx.i)
        report.violations.push_back("support at " + format_basis_index(idx) +
                                    " lies off the line alpha = -i");
    }
  }
  return report;
}

ConstraintReport lemma34_support_check(std::int64_t p, const InnerOuterDerivation& D) {
  if (p <= 0) throw std::invalid_argument("lemma34_support_check: p must be positive");
  Element target = Element::basis(BasisIndex(p, 0));
  target += Element::basis(BasisIndex(-2 * p, 2 * p));
  require_annihilates(D, target);

  ConstraintReport report;
  if (!D.lambda.is_zero())
    report.violations.push_back("lambda is " + format_scalar(D.lambda) + " but must vanish");
  for (const auto& [idx, c] : D.inner.terms()) {
    ++report.terms_checked;
    if (idx == kOrigin) {
      report.violations.push_back("coefficient at L[0,0] is " + format_scalar(c) +
                                  " but must vanish");
      continue;
    }
    const std::int64_t s = idx.alpha + idx.i;
    if (s < 0 || s % p != 0)
      report.violations.push_back("support at " + format_basis_index(idx) + " has alpha+i = " +
                                  std::to_string(s) + ", not a nonnegative multiple of " +
                                  std::to_string(p));
  }
  return report;
}

namespace {

void require_zero_at_anchors(const TwoLocalMap& map) {
  for (std::int64_t alpha : {0, 1}) {
    Element v = map.evaluate(Element::basis(BasisIndex(alpha, 0)));
    if (!v.is_zero())
      throw PreconditionFailed("Delta(L[" + std::to_string(alpha) +
                               ",0]) = " + format_element(v) + ", expected 0");
  }
}

}  // namespace

Lemma32Report lemma32_form_check(const TwoLocalMap& map, std::span<const BasisIndex> samples) {
  require_zero_at_anchors(map);
  const Element probe_one = Element::basis(BasisIndex(1, 0));

  Lemma32Report report;
  for (const BasisIndex& b : samples) {
    FormCheckSample sample;
    sample.index = b;
    const Element basis_vec = Element::basis(b);
    const Element value = map.evaluate(basis_vec);
    if (b.i == 0) {
      sample.xi = Scalar(0);
      sample.ok = value.is_zero();
      if (!sample.ok) sample.note = "j = 0 forces the zero vector, got " + format_element(value);
    } else {
      sample.xi = -map.provider(probe_one, basis_vec).lambda;
      const Element expected = Scalar(Rational(b.i)) * sample.xi * basis_vec;
      sample.ok = value == expected;
      if (!sample.ok)
        sample.note = "expected j*xi*L = " + format_element(expected) + ", got " +
                      format_element(value);
    }
    report.samples.push_back(std::move(sample));
  }
  return report;
}

Lemma33Report lemma33_form_check(const TwoLocalMap& map, const Element& x) {
  require_zero_at_anchors(map);

  Lemma33Report report;
  for (const auto& [idx, mu] : x.terms())
    report.reference.add_term(idx, Scalar(Rational(idx.i)) * mu);
  report.value = map.evaluate(x);

  if (report.reference.is_zero()) {
    report.xi = Scalar(0);
    report.proportional = report.value.is_zero();
    return report;
  }
  const auto& [first_idx, first_coeff] = *report.reference.terms().begin();
  report.xi = report.value.coeff(first_idx) / first_coeff;
  report.proportional = report.value == report.xi * report.reference;
  return report;
}

ReconstructionResult reconstruct(const TwoLocalMap& map, std::span<const Element> probes) {
  const Element anchor_x = Element::basis(BasisIndex(0, 0));
  const Element anchor_y = Element::basis(BasisIndex(1, 0));
  const Element resolver = Element::basis(BasisIndex(-1, 1));

  const InnerOuterDerivation d0 = map.provider(anchor_x, anchor_y);

  Element rx = apply(d0, anchor_x) - map.evaluate(anchor_x);
  if (!rx.is_zero())
    throw AnchorContractViolation(
        "witness at (L[0,0], L[1,0]) disagrees with Delta at L[0,0]; residual: " +
            format_element(rx),
        rx);
  Element ry = apply(d0, anchor_y) - map.evaluate(anchor_y);
  if (!ry.is_zero())
    throw AnchorContractViolation(
        "witness at (L[0,0], L[1,0]) disagrees with Delta at L[1,0]; residual: " +
            format_element(ry),
        ry);

  const Element r = map.evaluate(resolver) - apply(d0, resolver);
  Scalar xi(0);
  if (!r.is_zero()) {
    if (r.term_count() != 1 || r.terms().begin()->first != BasisIndex(-1, 1))
      throw NotProportional(
          "correction residual at L[-1,1] is not a multiple of L[-1,1]: " + format_element(r),
          r);
    xi = r.terms().begin()->second;
  }

  ReconstructionResult result;
  result.xi = xi;
  result.derivation = d0 - xi * kernel_derivation();

  for (const Element& probe : probes) {
    Element expected = map.evaluate(probe);
    Element actual = apply(result.derivation, probe);
    ++result.verification.probes_checked;
    if (expected != actual)
      result.verification.failures.push_back({probe, std::move(expected), std::move(actual)});
  }
  return result;
}

}  // namespace blockalg
