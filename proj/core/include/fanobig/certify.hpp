#pragma once

#include <optional>

#include "fanobig/vmrt.hpp"

namespace fanobig {

/// Verifies a Big certificate: Σ coeff·class ≡ m·ζ identically in the
/// parameters with m certified positive (IdentityFails otherwise), every
/// coefficient certified positive (NonPositiveCoefficient), and the term
/// classes spanning the full rank-3 lattice at parameters = 1
/// (SpanDeficient).
Verdict verify_big(const FanoModel& model, const BigInteriorCone& cert);

/// Verifies a NotBig certificate via the repeated-subtraction lemma's
/// hypotheses: Σ dagger classes = kζ + Π*H with k a certified-positive
/// constant (NonPositiveZeta), H equal to the declared residual
/// (IdentityFails), and the residual's coefficients over the effective
/// generators certified nonnegative (ResidualNotEffective; H = 0 allowed).
Verdict verify_not_big(const FanoModel& model, const NotBigLemmaRepeat& cert);

/// Verifies a named rule against the model's contraction data
/// (RuleInapplicable when the conditions fail). Toric → Big; blow-up
/// descent, low-degree del Pezzo fibration, and the three-family argument
/// → NotBig.
Verdict verify_rule(const FanoModel& model, const RuleToric& rule);
Verdict verify_rule(const FanoModel& model, const RuleBlowupDescent& rule);
Verdict verify_rule(const FanoModel& model, const RuleDelPezzoFibration& rule);
Verdict verify_rule(const FanoModel& model, const RuleThreeFamily& rule);

/// Exact nonnegative-combination membership for a constant class over a
/// rank-2 lattice: returns coefficients reproducing cls over the
/// generators, or nullopt when none exist (complete in rank 2 via
/// exhaustive 2-subset solves plus single-generator and zero checks).
std::optional<std::vector<Rational>> cone_membership(const DivisorClass& cls,
                                                     const std::vector<DivisorClass>& generators);

/// Runs the matching verifier for one simple recipe.
Verdict verify_recipe(const FanoModel& model, const SimpleRecipe& recipe);

/// Constructs all classes and runs the matching verifier; a Disjunction
/// verifies every branch and requires identical verdicts.
Verdict evaluate_model(const FanoModel& model);

}  // namespace fanobig
