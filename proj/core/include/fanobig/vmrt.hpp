#pragma once

#include "fanobig/enumerative.hpp"
#include "fanobig/models.hpp"

namespace fanobig {

/// The canonical blow-up basis ["zeta","H","D"] used by the raw class
/// constructors (H = pullback of the ambient polarization, D = exceptional).
const Basis& canonical_blowup_basis();

// ---- raw constructors (canonical bases) --------------------------------------

/// Secant-lines family class on the blow-up of ℙ³ along a nondegenerate
/// (d,g) curve without quadrisecants:
///   δζ + (d+g−1)Π*H + (m−(d−1))Π*D,  δ = (d−1)(d−2)/2 − g,
/// with m = (d−2)(d−3)/2 − g when the curve has a trisecant and m = 0
/// otherwise. Requires d ≥ 4 (the twisted cubic is excluded).
DaggerClass secant_lines_class(CurveDG c, bool has_trisecant);

/// Incident-lines family class on the blow-up of ℙ³ along a nondegenerate
/// (d,g) curve: kζ − kΠ*H + (k−2+c)Π*D with k = 2d+2g−2 and c the given
/// nonnegative slack parameter (only k−2 is proven as a lower bound).
DaggerClass incident_lines_class_p3(CurveDG c, const PosParam& slack);

/// Ambient-lines family class on the blow-up of a quadric threefold along
/// any smooth curve: 2ζ − 2Π*H + 2Π*D.
DaggerClass quadric_lines_class();

/// Incident-lines family class on the blow-up of a quadric threefold along
/// a degree-d curve without trisecants on Q: dζ + (m−2)Π*D, where m ≥ 0 is
/// the number of secant lines through a general center point.
DaggerClass quadric_incident_class(long d, long m);

/// Ambient-lines family class on the blow-up of V₅ along a smooth curve
/// contained in an intersection of two hyperplane sections and not a line:
/// 3ζ − Π*H + 3Π*D. The guard data comes from the contraction.
DaggerClass v5_lines_class(const BlowupData& blowup);

// ---- model-level constructors -------------------------------------------------

/// Dual VMRT of the conic-fiber family: ζ + Π*(K_X − π*K_{ℙ²}), over the
/// model's ℙ(T_X) basis.
DaggerClass conic_bundle_vmrt(const FanoModel& model, const ContractionData& contraction);

/// Universal-family Chern pushforward: solves
///   Σ_C a_C·(C·P·B) = k·(P·P·B) + s_B·r              (every basis symbol B)
///   Σ_C a_C·(C·B₁·B₂) = 0   (pairs with s_{B₁} = s_{B₂} = 0, entries known)
/// for ē_*q̄*c₁(V) = Σ a_C·C and returns
///   kζ + Π*(−2k·P + Σ a_C·C + Σ m_B·B).
/// The combined system must have a unique solution (SingularSystem).
DivisorClass universal_family_pushforward(const FanoModel& model, const FamilyData& fd);

/// Strict transform to ℙ(T_X) of kη + Φ*F on the ambient ℙ(T_Z) with the
/// given vanishing order along the center fiber:
///   kζ + k·Π*D + Π*f*F − order·Π*D,
/// where z_class lives over ["eta"] ++ basis(X) (F carried through pulled-
/// back model symbols) and D is the contraction's exceptional class.
DivisorClass strict_transform_pullback(const FanoModel& model, const DivisorClass& z_class,
                                       const BlowupData& blowup,
                                       const ParamLin& vanishing_order);

/// Rebases a raw canonical-basis dagger class into the model's ℙ(T_X)
/// lattice, substituting H ↦ blowup.polarization and D ↦ blowup.exceptional.
DaggerClass into_model(const FanoModel& model, const BlowupData& blowup,
                       const DaggerClass& raw);

// ---- term materialization -------------------------------------------------------

/// Materializes a recipe term into a class on the model's ℙ(T_X) lattice.
DivisorClass materialize(const FanoModel& model, const ClassTerm& term);

/// Materializes a term that must be a dagger class (throws PreconditionFailed
/// for non-dagger terms such as pullbacks or parameter-ζ transforms).
DaggerClass materialize_dagger(const FanoModel& model, const ClassTerm& term);

/// The blow-up contraction at `index` in the model's contraction list
/// (throws WrongContractionKind if it is not a blow-up, PreconditionFailed
/// if out of range).
const BlowupData& blowup_at(const FanoModel& model, std::size_t index);
const ConicBundleData& conic_bundle_at(const FanoModel& model, std::size_t index);

}  // namespace fanobig
