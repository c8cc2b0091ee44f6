#pragma once

#include <map>
#include <string>

#include "fanobig/lattice.hpp"

namespace fanobig {

/// Numerical data of (the normalized closure of) a universal family of
/// rational curves q̄: Ū → K̄ with evaluation map ē: Ū → X, where
/// Ū₀ ≅ ℙ_{K̄}(V) for a rank-2 bundle V = q̄_* ē* P.
struct FamilyData {
    /// Degree of the evaluation map (number of family curves through a
    /// general point). Positive.
    long k = 0;
    /// c₂(V). Nonnegative.
    long r = 0;
    /// Basis symbol P with V = q̄_* ē* P (so ξ = ē*P); s[P] must be 1.
    std::string polarization;
    /// Relative numerical classes: ē*B ≡ s[B]·ξ in N¹(Ū/K̄), for every
    /// basis symbol B.
    std::map<std::string, long> s;
    /// Pushforward multiplicities of the universal-family blow-up's
    /// exceptional divisor: ē_*E = Σ m[B]·B.
    std::map<std::string, long> m;
};

/// How a dagger class was constructed.
enum class DaggerSource {
    ConicFiberVMRT,   // dual VMRT of the conic-fiber family of a conic bundle
    SecantFamily,     // strict transforms of secant lines on a ℙ³ blow-up
    IncidentLinesP3,  // strict transforms of lines meeting the center on ℙ³
    QuadricLines,     // strict transforms of ambient lines on a quadric blow-up
    QuadricIncident,  // strict transforms of lines meeting the center on a quadric
    V5Lines,          // strict transforms of ambient lines on a V₅ blow-up
    DelPezzoPencil,   // pencils of conics in del Pezzo fibration fibers
    Assumed,          // geometric input carried with a documentation anchor
};

const char* dagger_source_name(DaggerSource source);

/// An effective divisor class on ℙ(T_X) that is dominated by a family of
/// rational curves ℓ̃ with ζ·ℓ̃ = 0 (the dagger property). The property
/// itself is geometric input tied to the construction in `source`; the
/// engine only checks the arithmetic.
///
/// Invariant: the ζ-coefficient of cls is a positive constant.
class DaggerClass {
public:
    DaggerClass(DivisorClass cls, DaggerSource source, std::string anchor = {});

    const DivisorClass& cls() const { return cls_; }
    DaggerSource source() const { return source_; }
    /// Documentation-map label for assumed inputs; empty otherwise.
    const std::string& anchor() const { return anchor_; }

private:
    DivisorClass cls_;
    DaggerSource source_;
    std::string anchor_;
};

}  // namespace fanobig
