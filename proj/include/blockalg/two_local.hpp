#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blockalg/derivation.hpp"
#include "blockalg/errors.hpp"

namespace blockalg {

/// Witness family of a 2-local map: every ordered pair (x, y) gets a
/// derivation D_{x,y}. Must be deterministic and side-effect free. The
/// contract D_{x,y}(x) = Delta(x), D_{x,y}(y) = Delta(y) is audited, never
/// assumed.
using WitnessProvider =
    std::function<InnerOuterDerivation(const Element&, const Element&)>;

/// A 2-local map, represented operationally by its witness provider;
/// Delta(x) := D_{x,x}(x). The reconstruction algorithm is the only way to
/// obtain a global description.
struct TwoLocalMap {
  WitnessProvider provider;

  Element evaluate(const Element& x) const { return apply(provider(x, x), x); }
};

/// Witness family test double: the provider returns hidden + coeff*kernel on
/// pairs matching (x, y) exactly, hidden otherwise. Valid only when each
/// kernel annihilates both members of its pair, which makes the induced map
/// a genuine 2-local derivation with a non-constant witness family.
struct WitnessPerturbation {
  Element x;
  Element y;
  InnerOuterDerivation kernel;
  Scalar coeff;
};

struct WitnessFamilySpec {
  InnerOuterDerivation hidden;
  std::vector<WitnessPerturbation> perturbations;

  /// Throws KernelNotAnnihilating on the first kernel that fails either
  /// member of its pair.
  void validate() const;

  TwoLocalMap to_map() const;
};

struct AuditViolation {
  Element x;
  Element y;
  std::string what;
  Element residual;
};

struct AuditReport {
  std::size_t pairs_checked = 0;
  std::vector<AuditViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks D_{x,y}(x) = Delta(x), D_{x,y}(y) = Delta(y) and the homogeneity
/// consequence Delta(kx) = k*Delta(x) for k in {0, -1, 2, 1/2} on every pair.
AuditReport audit_witnesses(const TwoLocalMap& map, std::span<const ElementPair> pairs);

struct ConstraintReport {
  std::size_t terms_checked = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// The allowed inner-support index on row i for a derivation annihilating
/// L[beta,j] with beta + j != 0: (k_i, i) with k_i = (beta*i+beta-i+j)/(j+1),
/// when that quotient is an integer.
std::optional<BasisIndex> lemma31_allowed_index(std::int64_t beta, std::int64_t j,
                                                std::int64_t i);

/// Support constraints satisfied by any D = ad(a) + lambda*d with
/// D(L[beta,j]) = 0 (checked; PreconditionFailed otherwise).
/// For beta + j != 0: supp(a) lies on the allowed rows (k_i, i) plus (0,0),
/// and the (0,0) coefficient equals (beta/(beta+j)) * lambda.
/// For j == -beta: supp(a) lies on {(-i, i)} and lambda = 0 unless beta = 0.
ConstraintReport lemma31_constraint_check(std::int64_t beta, std::int64_t j,
                                          const InnerOuterDerivation& D);

/// Support filter satisfied by any D = ad(a) + lambda*d annihilating
/// L[p,0] + L[-2p,2p] (checked; PreconditionFailed otherwise): lambda = 0,
/// no (0,0) term, and alpha+i a nonnegative multiple of p on the support.
/// Necessity direction only.
ConstraintReport lemma34_support_check(std::int64_t p, const InnerOuterDerivation& D);

struct FormCheckSample {
  BasisIndex index;
  bool ok = false;
  Scalar xi;
  std::string note;
};

struct Lemma32Report {
  std::vector<FormCheckSample> samples;

  bool ok() const {
    for (const auto& s : samples)
      if (!s.ok) return false;
    return true;
  }
};

/// Eigenvalue form Delta(L[b,j]) = j * xi * L[b,j] with
/// xi = -lambda(provider(L[1,0], L[b,j])); j = 0 forces the zero vector and
/// reports xi = 0. Precondition: Delta(L[0,0]) = Delta(L[1,0]) = 0.
Lemma32Report lemma32_form_check(const TwoLocalMap& map, std::span<const BasisIndex> samples);

struct Lemma33Report {
  bool proportional = false;
  Scalar xi;
  Element reference;  // sum of k * mu_{g,k} * L[g,k] over the support of x
  Element value;      // Delta(x)

  bool ok() const { return proportional; }
};

/// General-element form: Delta(x) lies on the line spanned by the reference
/// vector. Precondition: Delta(L[0,0]) = Delta(L[1,0]) = 0.
Lemma33Report lemma33_form_check(const TwoLocalMap& map, const Element& x);

struct ProbeFailure {
  Element probe;
  Element expected;  // Delta(probe)
  Element actual;    // reconstructed derivation at probe
};

struct VerificationReport {
  std::size_t probes_checked = 0;
  std::vector<ProbeFailure> failures;

  bool ok() const { return failures.empty(); }
};

struct ReconstructionResult {
  InnerOuterDerivation derivation;
  Scalar xi;
  VerificationReport verification;
};

/// Reconstructs the global derivation of a 2-local map:
///   1. D0 := provider(L[0,0], L[1,0]);
///   2. assert the witness contract at both anchors
///      (AnchorContractViolation otherwise);
///   3. r := Delta(L[-1,1]) - D0(L[-1,1]);
///   4. require r = xi * L[-1,1] (NotProportional otherwise);
///   5. D := D0 - xi * (ad(L[0,0]) + d);
///   6. verify Delta(x) = D(x) on every probe.
ReconstructionResult reconstruct(const TwoLocalMap& map, std::span<const Element> probes);

}  // namespace blockalg
