#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "fanobig/family.hpp"

namespace fanobig {

// ---- class-constructor references -----------------------------------------
//
// A recipe names the classes it combines through these terms; the vmrt
// module materializes each term into a concrete class on ℙ(T_X) using the
// model's contraction data.

/// Dual VMRT of the conic-fiber family of the model's `contraction`-th
/// conic-bundle structure (index into the model's contraction list).
struct TermConicFiber {
    std::size_t contraction = 0;
};

/// Universal-family pushforward class (degree-k family with Chern data fd);
/// dagger status is geometric input documented under `anchor`.
struct TermPushforwardDagger {
    FamilyData fd;
    std::string anchor;
    DaggerSource source = DaggerSource::Assumed;
};

/// Secant-lines family class on a ℙ³ blow-up contraction.
struct TermSecant {
    std::size_t contraction = 0;
};

/// Incident-lines family class on a ℙ³ blow-up contraction, with the named
/// nonnegative slack parameter in its D-coefficient.
struct TermIncidentP3 {
    std::size_t contraction = 0;
    std::string slack_name = "c";
};

/// Ambient-lines family class on a quadric blow-up contraction.
struct TermQuadricLines {
    std::size_t contraction = 0;
};

/// Incident-lines family class on a quadric blow-up contraction;
/// m = number of secant lines of the center through a general center point.
struct TermQuadricIncident {
    std::size_t contraction = 0;
    long m = 0;
};

/// Ambient-lines family class on a V₅ blow-up contraction.
struct TermV5Lines {
    std::size_t contraction = 0;
};

/// Strict transform to ℙ(T_X) of an effective divisor on the ambient
/// projectivized tangent bundle: z_class = kη + Φ*F over ["eta"] ++ basis(X),
/// pushed through the blow-up contraction with the given vanishing order
/// along the center fiber. Effectivity of the ambient divisor is input,
/// documented under `anchor`.
struct TermBlowupTransform {
    std::size_t contraction = 0;
    DivisorClass z_class;
    ParamLin vanishing_order;
    std::string anchor;
};

/// A dagger class taken whole as geometric input (its class and the dagger
/// property), documented under `anchor`.
struct TermAssumedDagger {
    DivisorClass cls;  // over ["zeta"] ++ basis(X); ζ-coefficient a positive constant
    std::string anchor;
};

/// Π* of an effective class on X (a nonnegative combination of the model's
/// effective generators).
struct TermPullback {
    DivisorClass cls;  // over basis(X)
};

using ClassTerm = std::variant<TermConicFiber, TermPushforwardDagger, TermSecant,
                               TermIncidentP3, TermQuadricLines, TermQuadricIncident,
                               TermV5Lines, TermBlowupTransform, TermAssumedDagger,
                               TermPullback>;

const char* class_term_name(const ClassTerm& term);

// ---- recipes ---------------------------------------------------------------

/// Big certificate: Σ coeff·class = m·ζ with every coefficient certified
/// positive and the classes spanning the full rank-3 lattice.
struct BigInteriorCone {
    std::vector<std::pair<ClassTerm, ParamLin>> terms;
};

/// NotBig certificate: Σ (dagger classes) = kζ + Π*(residual) with k a
/// positive constant and the residual a certified-nonnegative combination
/// of the model's effective generators (possibly zero).
struct NotBigLemmaRepeat {
    std::vector<ClassTerm> dagger_terms;
    /// Pairs (effective-generator name, coefficient).
    std::vector<std::pair<std::string, ParamLin>> residual;
};

/// Big by toricness.
struct RuleToric {};

/// NotBig by descent along a blow-up to an ambient rank-1 threefold whose
/// tangent bundle is known not to be big.
struct RuleBlowupDescent {
    std::string ambient;  // "V1" | "V2" | "V3" | "V4"
};

/// NotBig from a del Pezzo fibration of low fiber degree (≤ 4).
struct RuleDelPezzoFibration {
    long fiber_degree = 0;
};

/// One of the two auxiliary curves of the three-family argument.
struct ThreeFamilyCurve {
    long a1 = 0;  // normal bundle O(a1) ⊕ O(a2), a2 ≤ a1 ≤ 0
    long a2 = 0;
    long h1_dot = 0;  // intersection with the first basis divisor
    long h2_dot = 0;  // intersection with the second basis divisor
};

/// Hypotheses of the three-family argument: two free curves whose minimal
/// sections avoid the third family's dual VMRT (geometric input under
/// `vmrt_avoidance_anchor`), with the crossing intersection pattern
/// H₁·ℓ₁ = 0, H₂·ℓ₁ > 0, H₁·ℓ₂ > 0, H₂·ℓ₂ = 0.
struct ThreeFamilyData {
    ThreeFamilyCurve curve1;
    ThreeFamilyCurve curve2;
    std::string vmrt_avoidance_anchor;
};

/// NotBig via the three-family argument.
struct RuleThreeFamily {
    ThreeFamilyData data;
};

using SimpleRecipe = std::variant<BigInteriorCone, NotBigLemmaRepeat, RuleToric,
                                  RuleBlowupDescent, RuleDelPezzoFibration, RuleThreeFamily>;

/// Several independent proofs for the same model; every branch must verify
/// and all branches must yield the same verdict.
struct Disjunction {
    std::vector<SimpleRecipe> branches;
};

using CertificateRecipe = std::variant<SimpleRecipe, Disjunction>;

const char* recipe_kind_name(const SimpleRecipe& recipe);
std::string recipe_kind_name(const CertificateRecipe& recipe);

// ---- verdicts ---------------------------------------------------------------

enum class Bigness { Big, NotBig };

inline const char* bigness_name(Bigness b) { return b == Bigness::Big ? "Big" : "NotBig"; }

/// Result of a successful verifier run.
struct Verdict {
    Bigness value;
    CertificateRecipe certificate;  // the verified recipe instance
    std::string anchor;             // documentation-map label of the argument
    /// The certified summed class on ℙ(T_X) (m·ζ for Big, kζ+Π*H for
    /// NotBig); absent for named rules.
    std::vector<DivisorClass> totals;
};

}  // namespace fanobig
