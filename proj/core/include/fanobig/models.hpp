#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fanobig/certificate.hpp"

namespace fanobig {

// ---- contractions -----------------------------------------------------------

/// A conic-bundle structure π: X → ℙ² (a ℙ¹-fibration when d_delta = 0,
/// recorded with the fibration flag).
struct ConicBundleData {
    DivisorClass pulled_back_canonical;  // π*K_{ℙ²} on X
    long d_delta = 0;                    // discriminant degree ∈ {0,3,4,5,6,8}
    bool p1_fibration = false;           // true: smooth fibration (forces d_delta = 0)
};

/// A del Pezzo fibration p: X → ℙ¹ with general fiber of the given degree.
struct DelPezzoFibrationData {
    long fiber_degree = 0;  // 1..9
};

/// Rank-1 ambient threefolds appearing as blow-up targets.
enum class AmbientId { P3, Q3, V1, V2, V3, V4, V5, V7 };

const char* ambient_name(AmbientId id);
std::optional<AmbientId> parse_ambient(const std::string& name);
/// (−K_Z)³ of the ambient.
long ambient_degree(AmbientId id);
/// −K_Z·Γ for a curve Γ of polarization degree d (4d on ℙ³, 3d on Q³,
/// 2d on the del Pezzo threefolds V_n).
long ambient_anticanonical_curve_degree(AmbientId id, long d);

/// A blow-up contraction f: X → Z along a smooth curve of degree d, genus g.
struct BlowupData {
    AmbientId ambient = AmbientId::P3;
    long d = 0;
    long g = 0;
    bool nondegenerate = true;
    bool has_trisecant = false;
    bool has_quadrisecant = false;
    /// V₅-specific guards: the center lies in an intersection of two
    /// hyperplane sections / the center is a line.
    bool in_two_hyperplane_sections = false;
    bool center_is_line = false;
    /// f*O_Z(1) expressed in the model basis.
    DivisorClass polarization;
    /// The exceptional divisor expressed in the model basis.
    DivisorClass exceptional;
};

/// A finite double cover f: X → Z (recorded for completeness; recipes read
/// the branch data only through the stored intersection form).
struct DoubleCoverData {
    std::string target;
    std::string branch_note;
};

using ContractionData =
    std::variant<ConicBundleData, DelPezzoFibrationData, BlowupData, DoubleCoverData>;

enum class ContractionKind {
    ConicBundleOverP2,
    P1FibrationOverP2,
    DelPezzoFibrationOverP1,
    BlowupOfThreefold,
    DoubleCover,
};

ContractionKind contraction_kind(const ContractionData& c);
const char* contraction_kind_name(ContractionKind kind);

// ---- models ------------------------------------------------------------------

/// A named effective divisor class on X.
struct EffectiveGenerator {
    std::string name;
    DivisorClass cls;
};

/// One Mori–Mukai rank-2 deformation type (one registry row; subcase rows
/// share id, degree, and verdict).
struct FanoModel {
    std::string id;       // "2-N", N = 1..36
    std::string subcase;  // "", "a", "b"
    long anticanonical_degree = 0;
    std::string description;
    bool is_toric = false;

    Basis basis;                            // N¹(X)
    std::vector<LinearRelation> relations;  // extra symbols in terms of the basis
    DivisorClass canonical_class;           // K_X over the basis
    /// Alternative displayed forms of −K_X (over relation symbols); each
    /// must rewrite to −canonical_class.
    std::vector<DivisorClass> anticanonical_aliases;
    std::vector<EffectiveGenerator> effective_generators;
    TrilinearForm intersection;
    std::vector<ContractionData> contractions;

    CertificateRecipe recipe;
    Bigness expected_verdict = Bigness::NotBig;
    std::string table_anchor;  // documentation-map label

    std::string key() const;  // "2-N" or "2-Na"
    /// −K_X over the basis.
    DivisorClass anticanonical() const;
};

/// The fixed whitelist of rank-1 ambients with known-not-big tangent
/// bundles, each with its source note.
struct KnownNotBigAmbient {
    AmbientId id;
    std::string source;
};

const std::vector<KnownNotBigAmbient>& known_not_big_ambients();
bool is_known_not_big_ambient(AmbientId id);

/// The registry: all 36 deformation types, subcase variants included
/// (40 rows), sorted by id then subcase.
const std::vector<FanoModel>& registry();

/// Looks up a model; with subcase omitted returns the canonical
/// representative (the first row of the id). Throws UnknownModel.
const FanoModel& get(const std::string& id, const std::string& subcase = "");
FanoModel get_from(const std::vector<FanoModel>& models, const std::string& id,
                   const std::string& subcase = "");

/// Checks every FanoModel invariant; returns one message per violation
/// (empty means valid). Violations are data, not errors.
std::vector<std::string> validate(const FanoModel& model);

/// The nine ids with a conic-bundle structure of non-empty discriminant.
std::vector<std::string> conic_discriminant_models();

/// Documentation map: anchor label → one-line description of the argument
/// it names. Every anchor stored in the registry appears here.
const std::map<std::string, std::string>& anchor_documentation();

}  // namespace fanobig
