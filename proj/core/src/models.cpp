#include "fanobig/models.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "fanobig/errors.hpp"

namespace fanobig {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

// ---- ambients ----------------------------------------------------------------

const char* ambient_name(AmbientId id) {
    switch (id) {
        case AmbientId::P3: return "P3";
        case AmbientId::Q3: return "Q3";
        case AmbientId::V1: return "V1";
        case AmbientId::V2: return "V2";
        case AmbientId::V3: return "V3";
        case AmbientId::V4: return "V4";
        case AmbientId::V5: return "V5";
        case AmbientId::V7: return "V7";
    }
    return "?";
}

std::optional<AmbientId> parse_ambient(const std::string& name) {
    for (AmbientId id : {AmbientId::P3, AmbientId::Q3, AmbientId::V1, AmbientId::V2,
                         AmbientId::V3, AmbientId::V4, AmbientId::V5, AmbientId::V7}) {
        if (name == ambient_name(id)) return id;
    }
    return std::nullopt;
}

long ambient_degree(AmbientId id) {
    switch (id) {
        case AmbientId::P3: return 64;
        case AmbientId::Q3: return 54;
        case AmbientId::V1: return 8;
        case AmbientId::V2: return 16;
        case AmbientId::V3: return 24;
        case AmbientId::V4: return 32;
        case AmbientId::V5: return 40;
        case AmbientId::V7: return 56;
    }
    return 0;
}

namespace {

/// Fano index of the ambient (so −K_Z = index·A for the ample generator A).
long ambient_index(AmbientId id) {
    switch (id) {
        case AmbientId::P3: return 4;
        case AmbientId::Q3: return 3;
        default: return 2;
    }
}

/// A³ for the ample generator A of the ambient.
long ambient_generator_cube(AmbientId id) {
    long n = ambient_index(id);
    return ambient_degree(id) / (n * n * n);
}

}  // namespace

long ambient_anticanonical_curve_degree(AmbientId id, long d) {
    return ambient_index(id) * d;
}

// ---- contractions -------------------------------------------------------------

ContractionKind contraction_kind(const ContractionData& c) {
    return std::visit(
        overloaded{
            [](const ConicBundleData& cb) {
                return cb.p1_fibration ? ContractionKind::P1FibrationOverP2
                                       : ContractionKind::ConicBundleOverP2;
            },
            [](const DelPezzoFibrationData&) { return ContractionKind::DelPezzoFibrationOverP1; },
            [](const BlowupData&) { return ContractionKind::BlowupOfThreefold; },
            [](const DoubleCoverData&) { return ContractionKind::DoubleCover; },
        },
        c);
}

const char* contraction_kind_name(ContractionKind kind) {
    switch (kind) {
        case ContractionKind::ConicBundleOverP2: return "conic bundle over P2";
        case ContractionKind::P1FibrationOverP2: return "P1-fibration over P2";
        case ContractionKind::DelPezzoFibrationOverP1: return "del Pezzo fibration over P1";
        case ContractionKind::BlowupOfThreefold: return "blow-up of a threefold";
        case ContractionKind::DoubleCover: return "double cover";
    }
    return "?";
}

// ---- model methods ------------------------------------------------------------

std::string FanoModel::key() const { return id + subcase; }

DivisorClass FanoModel::anticanonical() const { return scale(ParamLin(-1), canonical_class); }

// ---- known-not-big ambients ----------------------------------------------------

const std::vector<KnownNotBigAmbient>& known_not_big_ambients() {
    static const std::vector<KnownNotBigAmbient> kList = {
        {AmbientId::V1, "del Pezzo threefold of degree 1; tangent bundle not big (established input)"},
        {AmbientId::V2, "del Pezzo threefold of degree 2; tangent bundle not big (established input)"},
        {AmbientId::V3, "del Pezzo threefold of degree 3; tangent bundle not big (established input)"},
        {AmbientId::V4, "del Pezzo threefold of degree 4; tangent bundle not big (established input)"},
    };
    return kList;
}

bool is_known_not_big_ambient(AmbientId id) {
    const auto& list = known_not_big_ambients();
    return std::any_of(list.begin(), list.end(),
                       [&](const KnownNotBigAmbient& a) { return a.id == id; });
}

// ---- anchors -------------------------------------------------------------------

const std::map<std::string, std::string>& anchor_documentation() {
    static const std::map<std::string, std::string> kDocs = {
        {"toric",
         "Smooth projective toric varieties have big tangent bundle (torus-equivariant "
         "sections separate directions)."},
        {"del-pezzo-descent",
         "Bigness descends along a blow-up: were T_X big, the blow-down would have big "
         "tangent bundle, contradicting its known non-bigness on del Pezzo threefolds of "
         "degree at most 4."},
        {"del-pezzo-fibration",
         "A del Pezzo fibration over P1 with fiber degree at most 4 forces the tangent "
         "bundle not to be big (restriction to a general fiber)."},
        {"three-family",
         "Two free curve families whose minimal sections avoid the dual VMRT of the third "
         "family, with intersection pattern H1.l1 = 0, H2.l1 > 0, H1.l2 > 0, H2.l2 = 0 and "
         "semi-negative normal bundles; repeated restriction rules out bigness."},
        {"conic-fiber-sum",
         "The dual VMRTs of the conic-fiber families are dagger classes; their sum realizes "
         "kZ plus an effective pullback, which rules out bigness of Z."},
        {"secant-family",
         "Strict transforms of the secant lines of the blow-up center dominate a dagger "
         "class on P(T_X)."},
        {"space-curve-combination",
         "Lines meeting the center plus twice the secant lines of the center realize "
         "d(d-1)Z plus an effective pullback."},
        {"quadric-lines",
         "Strict transforms of the ambient lines of the quadric dominate the dagger class "
         "2Z - 2H + 2D."},
        {"quadric-incident",
         "Lines of the quadric meeting the blow-up center dominate a dagger class whose "
         "D-coefficient is m - 2, with m the secant count through a general center point."},
        {"v5-lines",
         "Strict transforms of the ambient lines of V5 dominate the dagger class "
         "3Z - H + 3D (center inside two hyperplane sections)."},
        {"bitangent-family",
         "A dominating family of rational curves of evaluation degree 12 over the "
         "bitangent lines of the branch data; its universal-family pushforward is a "
         "dagger class."},
        {"quadric-fiber-rules",
         "The rules of the two quadric-surface fibers through a general point form a "
         "degree-2 dominating family living in del Pezzo pencils; its pushforward is a "
         "dagger class."},
        {"elliptic-conic-family",
         "Conics meeting the blow-up center in a single point dominate a dagger class "
         "with unit Z-coefficient and effective residual."},
        {"ambient-v5-lines",
         "On P(T_V5) the divisor swept by lifted ambient lines is effective of class "
         "3*eta - Phi*H."},
        {"symmetric-power-sections",
         "Twisted symmetric powers Sym^k T_P3(-k) are globally generated, so the classes "
         "k*eta - k*Phi*H are effective on the pulled-back projectivized tangent bundle."},
        {"interior-cone",
         "A strictly positive combination of effective classes equal to a multiple of Z "
         "and spanning the full lattice places Z in the interior of the pseudoeffective "
         "cone."},
    };
    return kDocs;
}

// ---- registry ------------------------------------------------------------------

namespace {

DivisorClass cc(const Basis& basis, long x, long y) {
    return DivisorClass(basis, {ParamLin(x), ParamLin(y)});
}

/// Symmetric rank-2 form from the four distinct triples (aaa, aab, abb, bbb).
TrilinearForm form2(const Basis& basis, long aaa, long aab, long abb, long bbb) {
    const std::string& a = basis.symbol(0);
    const std::string& b = basis.symbol(1);
    TrilinearForm f;
    f.set(a, a, a, Rational(aaa));
    f.set(a, a, b, Rational(aab));
    f.set(a, b, b, Rational(abb));
    f.set(b, b, b, Rational(bbb));
    return f;
}

/// Shared frame of a blow-up X → Z along a (d, g) curve with the standard
/// basis [H, D]: H = f*A for the ample generator, D the exceptional divisor.
struct CurveBlowupFrame {
    Basis basis;
    DivisorClass H;
    DivisorClass D;
    DivisorClass canonical;
    TrilinearForm form;
    BlowupData contraction;
};

CurveBlowupFrame curve_blowup_frame(AmbientId ambient, long d, long g) {
    Basis basis({"H", "D"});
    long index = ambient_index(ambient);
    long cube = ambient_generator_cube(ambient);
    long d3 = 2 - 2 * g - ambient_anticanonical_curve_degree(ambient, d);
    return CurveBlowupFrame{
        basis,
        cc(basis, 1, 0),
        cc(basis, 0, 1),
        cc(basis, -index, 1),
        form2(basis, cube, 0, -d, d3),
        BlowupData{.ambient = ambient,
                   .d = d,
                   .g = g,
                   .polarization = cc(basis, 1, 0),
                   .exceptional = cc(basis, 0, 1)},
    };
}

/// The combination "lines meeting the center + 2 x secant lines" on a P3
/// blow-up: sums to d(d-1)Z + ((d-1)(d-4) + c) D with c the slack of the
/// incident-lines class.
NotBigLemmaRepeat space_curve_combination(long d, std::size_t contraction) {
    PosParam c = PosParam::nonnegative("c");
    ParamLin residual = ParamLin((d - 1) * (d - 4)) + ParamLin::param(c);
    return NotBigLemmaRepeat{
        {TermIncidentP3{contraction, "c"}, TermSecant{contraction}, TermSecant{contraction}},
        {{"D", residual}},
    };
}

std::vector<EffectiveGenerator> gens(std::initializer_list<EffectiveGenerator> list) {
    return std::vector<EffectiveGenerator>(list);
}

FanoModel with_subcase(FanoModel m, const char* subcase, std::string description) {
    m.subcase = subcase;
    m.description = std::move(description);
    return m;
}

/// Blow-up of a low-degree del Pezzo threefold: NotBig by descent.
FanoModel descent_row(const char* id, long degree, AmbientId ambient, long d, long g,
                      std::string description) {
    CurveBlowupFrame fr = curve_blowup_frame(ambient, d, g);
    fr.contraction.nondegenerate = false;
    fr.contraction.center_is_line = (d == 1 && g == 0);
    return FanoModel{
        .id = id,
        .anticanonical_degree = degree,
        .description = std::move(description),
        .basis = fr.basis,
        .canonical_class = fr.canonical,
        .effective_generators = gens({{"H", fr.H}, {"D", fr.D}}),
        .intersection = fr.form,
        .contractions = {fr.contraction},
        .recipe = SimpleRecipe{RuleBlowupDescent{ambient_name(ambient)}},
        .expected_verdict = Bigness::NotBig,
        .table_anchor = "del-pezzo-descent",
    };
}

/// Blow-up of P3 along a nondegenerate (d, g) curve without quadrisecants:
/// NotBig via the incident + secant combination.
FanoModel space_curve_row(const char* id, long degree, long d, long g, bool has_trisecant,
                          std::string description,
                          std::vector<ContractionData> extra_contractions = {}) {
    CurveBlowupFrame fr = curve_blowup_frame(AmbientId::P3, d, g);
    fr.contraction.nondegenerate = true;
    fr.contraction.has_trisecant = has_trisecant;
    fr.contraction.has_quadrisecant = false;
    std::vector<ContractionData> contractions = {fr.contraction};
    for (auto& c : extra_contractions) contractions.push_back(std::move(c));
    return FanoModel{
        .id = id,
        .anticanonical_degree = degree,
        .description = std::move(description),
        .basis = fr.basis,
        .canonical_class = fr.canonical,
        .effective_generators = gens({{"H", fr.H}, {"D", fr.D}}),
        .intersection = fr.form,
        .contractions = std::move(contractions),
        .recipe = SimpleRecipe{space_curve_combination(d, 0)},
        .expected_verdict = Bigness::NotBig,
        .table_anchor = "space-curve-combination",
    };
}

std::vector<FanoModel> build_registry() {
    std::vector<FanoModel> rows;

    // -- 2-1, 2-3, 2-5, 2-10, 2-16: descent to V1..V4 --------------------------
    rows.push_back(descent_row("2-1", 4, AmbientId::V1, 1, 1,
                               "blow-up of the del Pezzo threefold V1 along an elliptic curve "
                               "of degree 1"));
    rows.push_back(descent_row("2-3", 8, AmbientId::V2, 2, 1,
                               "blow-up of the del Pezzo threefold V2 along an elliptic curve "
                               "of degree 2"));
    rows.push_back(descent_row("2-5", 12, AmbientId::V3, 3, 1,
                               "blow-up of the cubic threefold V3 along an elliptic curve of "
                               "degree 3"));
    rows.push_back(descent_row("2-10", 16, AmbientId::V4, 4, 1,
                               "blow-up of the quartic del Pezzo threefold V4 along an "
                               "elliptic curve of degree 4"));
    rows.push_back(descent_row("2-16", 22, AmbientId::V4, 2, 0,
                               "blow-up of the quartic del Pezzo threefold V4 along a conic"));

    // -- 2-2: double cover of P2 x P1, conic bundle with octic discriminant ----
    {
        Basis basis({"H", "h"});  // H from the P1 factor, h from the P2 factor
        DivisorClass H = cc(basis, 1, 0);
        DivisorClass h = cc(basis, 0, 1);
        ThreeFamilyData tf{
            .curve1 = {.a1 = 0, .a2 = 0, .h1_dot = 0, .h2_dot = 2},
            .curve2 = {.a1 = 0, .a2 = 0, .h1_dot = 2, .h2_dot = 0},
            .vmrt_avoidance_anchor = "three-family",
        };
        rows.push_back(FanoModel{
            .id = "2-2",
            .anticanonical_degree = 6,
            .description = "double cover of P2 x P1 branched in a divisor of bidegree (4,2)",
            .basis = basis,
            .canonical_class = cc(basis, -1, -1),
            .effective_generators = gens({{"H", H}, {"h", h}}),
            .intersection = form2(basis, 0, 0, 2, 0),
            .contractions = {ConicBundleData{cc(basis, 0, -3), 8, false},
                             DelPezzoFibrationData{2}},
            .recipe = Disjunction{{SimpleRecipe{RuleThreeFamily{tf}},
                                   SimpleRecipe{RuleDelPezzoFibration{2}}}},
            .expected_verdict = Bigness::NotBig,
            .table_anchor = "three-family",
        });
    }

    // -- 2-4: P3 along an intersection of two cubics ---------------------------
    rows.push_back(space_curve_row("2-4", 10, 9, 10, true,
                                   "blow-up of P3 along a curve of degree 9 and genus 10, the "
                                   "intersection of two cubics",
                                   {DelPezzoFibrationData{3}}));

    // -- 2-6: (2,2) divisor on P2 x P2 / double cover of the flag threefold ----
    {
        Basis basis({"h1", "h2"});
        DivisorClass h1 = cc(basis, 1, 0);
        DivisorClass h2 = cc(basis, 0, 1);
        NotBigLemmaRepeat lemma{{TermConicFiber{0}, TermConicFiber{1}},
                                {{"h1", ParamLin(1)}, {"h2", ParamLin(1)}}};
        FanoModel base{
            .id = "2-6",
            .subcase = "a",
            .anticanonical_degree = 12,
            .description = "smooth divisor of bidegree (2,2) in P2 x P2",
            .basis = basis,
            .canonical_class = cc(basis, -1, -1),
            .effective_generators = gens({{"h1", h1}, {"h2", h2}}),
            .intersection = form2(basis, 0, 2, 2, 0),
            .contractions = {ConicBundleData{cc(basis, -3, 0), 6, false},
                             ConicBundleData{cc(basis, 0, -3), 6, false}},
            .recipe = SimpleRecipe{lemma},
            .expected_verdict = Bigness::NotBig,
            .table_anchor = "conic-fiber-sum",
        };
        rows.push_back(base);
        rows.push_back(with_subcase(base, "b",
                                    "double cover of the flag threefold W branched in an "
                                    "anticanonical member"));
    }

    // -- 2-7: Q3 along a (8,5) complete intersection curve ---------------------
    {
        CurveBlowupFrame fr = curve_blowup_frame(AmbientId::Q3, 8, 5);
        fr.contraction.nondegenerate = true;
        fr.contraction.has_trisecant = true;  // conservative guard
        rows.push_back(FanoModel{
            .id = "2-7",
            .anticanonical_degree = 14,
            .description = "blow-up of the quadric Q3 along a curve of degree 8 and genus 5, "
                           "the intersection of two quadric sections",
            .basis = fr.basis,
            .canonical_class = fr.canonical,
            .effective_generators = gens({{"H", fr.H}, {"D", fr.D}}),
            .intersection = fr.form,
            .contractions = {fr.contraction, DelPezzoFibrationData{4}},
            .recipe = SimpleRecipe{RuleDelPezzoFibration{4}},
            .expected_verdict = Bigness::NotBig,
            .table_anchor = "del-pezzo-fibration",
        });
    }

    // -- 2-8: double cover of V7, conic bundle with sextic discriminant --------
    {
        Basis basis({"H", "D"});
        DivisorClass H = cc(basis, 1, 0);
        DivisorClass D = cc(basis, 0, 1);
        DivisorClass h = cc(basis, 1, -1);
        FamilyData fd{.k = 12, .r = 56, .polarization = "H", .s = {{"H", 1}, {"D", 0}}};
        NotBigLemmaRepeat lemma{
            {TermPushforwardDagger{fd, "bitangent-family", DaggerSource::Assumed}},
            {{"H", ParamLin(16)}}};
        FanoModel base{
            .id = "2-8",
            .subcase = "a",
            .anticanonical_degree = 14,
            .description = "double cover of V7 branched in an anticanonical member meeting "
                           "the exceptional plane in a smooth curve",
            .basis = basis,
            .relations = {LinearRelation("h", h)},
            .canonical_class = cc(basis, -2, 1),
            .anticanonical_aliases = {DivisorClass(Basis({"H", "h"}),
                                                   {ParamLin(1), ParamLin(1)})},
            .effective_generators = gens({{"H", H}, {"D", D}, {"h", h}}),
            .intersection = form2(basis, 2, 0, 0, 2),
            .contractions = {DoubleCoverData{"V7", "anticanonical branch divisor"},
                             ConicBundleData{cc(basis, -3, 3), 6, false}},
            .recipe = SimpleRecipe{lemma},
            .expected_verdict = Bigness::NotBig,
            .table_anchor = "bitangent-family",
        };
        rows.push_back(base);
        rows.push_back(with_subcase(base, "b",
                                    "double cover of V7 branched in an anticanonical member "
                                    "meeting the exceptional plane in a reduced but singular "
                                    "curve"));
    }

    // -- 2-9: P3 along a (7,5) curve, conic bundle with quintic discriminant ---
    {
        CurveBlowupFrame fr = curve_blowup_frame(AmbientId::P3, 7, 5);
        fr.contraction.nondegenerate = true;
        fr.contraction.has_trisecant = true;
        fr.contraction.has_quadrisecant = false;
        DivisorClass h = cc(fr.basis, 3, -1);
        NotBigLemmaRepeat secant_only{{TermSecant{0}},
                                      {{"H", ParamLin(8)}, {"h", ParamLin(1)}}};
        rows.push_back(FanoModel{
            .id = "2-9",
            .anticanonical_degree = 16,
            .description = "blow-up of P3 along a curve of degree 7 and genus 5, a conic "
                           "bundle via the cubics through the center",
            .basis = fr.basis,
            .relations = {LinearRelation("h", h)},
            .canonical_class = fr.canonical,
            .anticanonical_aliases = {DivisorClass(Basis({"H", "h"}),
                                                   {ParamLin(1), ParamLin(1)})},
            .effective_generators = gens({{"H", fr.H}, {"D", fr.D}, {"h", h}}),
            .intersection = fr.form,
            .contractions = {fr.contraction, ConicBundleData{cc(fr.basis, -9, 3), 5, false}},
            .recipe = Disjunction{{SimpleRecipe{secant_only},
                                   SimpleRecipe{space_curve_combination(7, 0)}}},
            .expected_verdict = Bigness::NotBig,
            .table_anchor = "secant-family",
        });
    }

    // -- 2-11: V3 along a line, conic bundle with quintic discriminant ---------
    {
        CurveBlowupFrame fr = curve_blowup_frame(AmbientId::V3, 1, 0);
        fr.contraction.nondegenerate = false;
        fr.contraction.center_is_line = true;
        DivisorClass h = cc(fr.basis, 1, -1);
        rows.push_back(FanoModel{
            .id = "2-11",
            .anticanonical_degree = 18,
            .description = "blow-up of the cubic threefold V3 along a line",
            .basis = fr.basis,
            .relations = {LinearRelation("h", h)},
            .canonical_class = fr.canonical,
            .anticanonical_aliases = {DivisorClass(Basis({"H", "h"}),
                                                   {ParamLin(1), ParamLin(1)})},
            .effective_generators = gens({{"H", fr.H}, {"D", fr.D}, {"h", h}}),
            .intersection = fr.form,
            .contractions = {fr.contraction, ConicBundleData{cc(fr.basis, -3, 3), 5, false}},
            .recipe = SimpleRecipe{RuleBlowupDescent{"V3"}},
            .expected_verdict = Bigness::NotBig,
            .table_anchor = "del-pezzo-descent",
        });
    }

    // -- 2-12: P3 along a (6,3) curve -------------------------------------------
    rows.push_back(space_curve_row("2-12", 20, 6, 3, true,
                                   "blow-up of P3 along a curve of degree 6 and genus 3"));

    // -- 2-13: Q3 along a (6,2) curve, conic bundle with quartic discriminant --
    {
        CurveBlowupFrame fr = curve_blowup_frame(AmbientId::Q3, 6, 2);
        fr.contraction.nondegenerate = true;
        fr.contraction.has_trisecant = true;  // conservative guard
        DivisorClass h = cc(fr.basis, 2, -1);
        NotBigLemmaRepeat lemma{{TermQuadricLines{0}, TermConicFiber{1}},
                                {{"H", ParamLin(1)}}};
        rows.push_back(FanoModel{
            .id = "2-13",
            .anticanonical_degree = 20,
            .description = "blow-up of the quadric Q3 along a curve of degree 6 and genus 2",
            .basis = fr.basis,
            .relations = {LinearRelation("h", h)},
            .canonical_class = fr.canonical,
            .anticanonical_aliases = {DivisorClass(Basis({"H", "h"}),
                                                   {ParamLin(1), ParamLin(1)})},
            .effective_generators = gens({{"H", fr.H}, {"D", fr.D}, {"h", h}}),
            .intersection = fr.form,
            .contractions = {fr.contraction, ConicBundleData{cc(fr.basis, -6, 3), 4, false}},
            .recipe = SimpleRecipe{lemma},
            .expected_verdict = Bigness::NotBig,
            .table_anchor = "quadric-lines",
        });
    }

    // -- 2-14: V5 along a (5,1) curve / del Pezzo fibration of degree 5 --------
    {
        Basis basis({"H1", "H2"});
        DivisorClass D1 = cc(basis, 1, -1);
        DivisorClass H2 = cc(basis, 0, 1);
        PosParam b1 = PosParam::nonnegative("b1");
        PosParam b2 = PosParam::nonnegative("b2");
        Basis zb = basis.with_zeta();
        DivisorClass dagger(
            zb, {ParamLin(1), ParamLin::param(b1),
                 ParamLin::param(b2) - ParamLin::param(b1)});
        NotBigLemmaRepeat lemma{{TermAssumedDagger{dagger, "elliptic-conic-family"}},
                                {{"D1", ParamLin::param(b1)}, {"H2", ParamLin::param(b2)}}};
        BlowupData bl{.ambient = AmbientId::V5,
                      .d = 5,
                      .g = 1,
                      .nondegenerate = false,
                      .in_two_hyperplane_sections = true,
                      .polarization = cc(basis, 1, 0),
                      .exceptional = D1};
        rows.push_back(FanoModel{
            .id = "2-14",
            .anticanonical_degree = 20,
            .description = "blow-up of the quintic del Pezzo threefold V5 along an elliptic "
                           "curve of degree 5 cut by two hyperplane sections",
            .basis = basis,
            .relations = {LinearRelation("D1", D1)},
            .canonical_class = cc(basis, -1, -1),
            .anticanonical_aliases = {DivisorClass(Basis({"H1", "D1"}),
                                                   {ParamLin(2), ParamLin(-1)})},
            .effective_generators = gens({{"D1", D1}, {"H2", H2}}),
            .intersection = form2(basis, 5, 5, 0, 0),
            .contractions = {bl, DelPezzoFibrationData{5}},
            .recipe = SimpleRecipe{lemma},
            .expected_verdict = Bigness::NotBig,
            .table_anchor = "elliptic-conic-family",
        });
    }

    // -- 2-15: P3 along a (6,4) curve cut by a quadric and a cubic -------------
    {
        FanoModel base = space_curve_row("2-15", 22, 6, 4, true,
                                         "blow-up of P3 along a curve of degree 6 and genus "
                                         "4 cut by a quadric A and a cubic, A smooth");
        base.subcase = "a";
        rows.push_back(base);
        rows.push_back(with_subcase(base, "b",
                                    "blow-up of P3 along a curve of degree 6 and genus 4 cut "
                                    "by a quadric A and a cubic, A reduced but singular"));
    }

    // -- 2-17: P3 along an elliptic quintic (equally a Q3 blow-up) -------------
    {
        FanoModel row = space_curve_row("2-17", 24, 5, 1, true,
                                        "blow-up of P3 along an elliptic curve of degree 5 "
                                        "(equally a blow-up of Q3 along an elliptic curve of "
                                        "degree 5)");
        BlowupData quadric_side{.ambient = AmbientId::Q3,
                                .d = 5,
                                .g = 1,
                                .nondegenerate = true,
                                .has_trisecant = true,  // conservative guard
                                .polarization = cc(row.basis, 3, -1),
                                .exceptional = cc(row.basis, 5, -2)};
        row.contractions.push_back(quadric_side);
        rows.push_back(std::move(row));
    }

    // -- 2-18: double cover of P2 x P1, conic bundle with quartic discriminant -
    {
        Basis basis({"H", "h"});  // H from the P1 factor, h from the P2 factor
        DivisorClass H = cc(basis, 1, 0);
        DivisorClass h = cc(basis, 0, 1);
        ThreeFamilyData tf{
            .curve1 = {.a1 = 0, .a2 = 0, .h1_dot = 0, .h2_dot = 1},
            .curve2 = {.a1 = 0, .a2 = 0, .h1_dot = 2, .h2_dot = 0},
            .vmrt_avoidance_anchor = "three-family",
        };
        FamilyData fd{.k = 2, .r = 8, .polarization = "h", .s = {{"H", 0}, {"h", 1}}};
        NotBigLemmaRepeat lemma{
            {TermConicFiber{0}, TermConicFiber{0},
             TermPushforwardDagger{fd, "quadric-fiber-rules", DaggerSource::DelPezzoPencil}},
            {{"H", ParamLin(2)}}};
        rows.push_back(FanoModel{
            .id = "2-18",
            .anticanonical_degree = 24,
            .description = "double cover of P2 x P1 branched in a divisor of bidegree (2,2)",
            .basis = basis,
            .canonical_class = cc(basis, -1, -2),
            .effective_generators = gens({{"H", H}, {"h", h}}),
            .intersection = form2(basis, 0, 0, 2, 0),
            .contractions = {ConicBundleData{cc(basis, 0, -3), 4, false},
                             DelPezzoFibrationData{8}},
            .recipe = Disjunction{{SimpleRecipe{RuleThreeFamily{tf}}, SimpleRecipe{lemma}}},
            .expected_verdict = Bigness::NotBig,
            .table_anchor = "three-family",
        });
    }

    // -- 2-19: P3 along a (5,2) curve (equally a V4 blow-up along a line) ------
    {
        CurveBlowupFrame fr = curve_blowup_frame(AmbientId::P3, 5, 2);
        fr.contraction.nondegenerate = true;
        fr.contraction.has_trisecant = true;
        fr.contraction.has_quadrisecant = false;
        BlowupData v4_side{.ambient = AmbientId::V4,
                           .d = 1,
                           .g = 0,
                           .nondegenerate = false,
                           .center_is_line = true,
                           .polarization = cc(fr.basis, 3, -1),
                           .exceptional = cc(fr.basis, 2, -1)};
        rows.push_back(FanoModel{
            .id = "2-19",
            .anticanonical_degree = 26,
            .description = "blow-up of P3 along a curve of degree 5 and genus 2 (equally a "
                           "blow-up of the quartic del Pezzo threefold V4 along a line)",
            .basis = fr.basis,
            .canonical_class = fr.canonical,
            .effective_generators = gens({{"H", fr.H}, {"D", fr.D}}),
            .intersection = fr.form,
            .contractions = {fr.contraction, v4_side},
            .recipe = Disjunction{{SimpleRecipe{RuleBlowupDescent{"V4"}},
                                   SimpleRecipe{space_curve_combination(5, 0)}}},
            .expected_verdict = Bigness::NotBig,
            .table_anchor = "del-pezzo-descent",
        });
    }

    // -- 2-20: V5 along a twisted cubic -----------------------------------------
    {
        CurveBlowupFrame fr = curve_blowup_frame(AmbientId::V5, 3, 0);
        fr.contraction.nondegenerate = false;
        fr.contraction.in_two_hyperplane_sections = true;
        DivisorClass h = cc(fr.basis, 1, -1);
        NotBigLemmaRepeat lemma{{TermV5Lines{0}, TermConicFiber{1}, TermConicFiber{1}},
                                {{"h", ParamLin(1)}}};
        rows.push_back(FanoModel{
            .id = "2-20",
            .anticanonical_degree = 26,
            .description = "blow-up of the quintic del Pezzo threefold V5 along a twisted "
                           "cubic",
            .basis = fr.basis,
            .relations = {LinearRelation("h", h)},
            .canonical_class = fr.canonical,
            .anticanonical_aliases = {DivisorClass(Basis({"H", "h"}),
                                                   {ParamLin(1), ParamLin(1)})},
            .effective_generators = gens({{"H", fr.H}, {"D", fr.D}, {"h", h}}),
            .intersection = fr.form,
            .contractions = {fr.contraction, ConicBundleData{cc(fr.basis, -3, 3), 3, false}},
            .recipe = SimpleRecipe{lemma},
            .expected_verdict = Bigness::NotBig,
            .table_anchor = "v5-lines",
        });
    }

    // -- 2-21: two quadric realizations, center a rational normal quartic ------
    {
        Basis basis({"H1", "H2"});
        DivisorClass D1 = cc(basis, 2, -1);
        DivisorClass D2 = cc(basis, -1, 2);
        BlowupData f1{.ambient = AmbientId::Q3,
                      .d = 4,
                      .g = 0,
                      .nondegenerate = true,
                      .polarization = cc(basis, 1, 0),
                      .exceptional = D1};
        BlowupData f2{.ambient = AmbientId::Q3,
                      .d = 4,
                      .g = 0,
                      .nondegenerate = true,
                      .polarization = cc(basis, 0, 1),
                      .exceptional = D2};
        NotBigLemmaRepeat lemma{{TermQuadricLines{0}, TermQuadricLines{1}}, {}};
        Basis a1({"H1", "D1"});
        Basis a2({"H2", "D2"});
        rows.push_back(FanoModel{
            .id = "2-21",
            .anticanonical_degree = 28,
            .description = "blow-up of the quadric Q3 along a rational normal quartic (in "
                           "two ways)",
            .basis = basis,
            .relations = {LinearRelation("D1", D1), LinearRelation("D2", D2)},
            .canonical_class = cc(basis, -1, -1),
            .anticanonical_aliases = {DivisorClass(a1, {ParamLin(3), ParamLin(-1)}),
                                      DivisorClass(a2, {ParamLin(3), ParamLin(-1)})},
            .effective_generators = gens({{"H1", cc(basis, 1, 0)},
                                          {"H2", cc(basis, 0, 1)},
                                          {"D1", D1},
                                          {"D2", D2}}),
            .intersection = form2(basis, 2, 4, 4, 2),
            .contractions = {f1, f2},
            .recipe = SimpleRecipe{lemma},
            .expected_verdict = Bigness::NotBig,
            .table_anchor = "quadric-lines",
        });
    }

    // -- 2-22: P3 along a rational normal quartic (equally Bl_conic V5) --------
    {
        FanoModel row = space_curve_row("2-22", 30, 4, 0, true,
                                        "blow-up of P3 along a rational normal quartic "
                                        "(equally a blow-up of V5 along a conic)");
        BlowupData v5_side{.ambient = AmbientId::V5,
                           .d = 2,
                           .g = 0,
                           .nondegenerate = false,
                           .polarization = cc(row.basis, 3, -1),
                           .exceptional = cc(row.basis, 2, -1)};
        row.contractions.push_back(v5_side);
        rows.push_back(std::move(row));
    }

    // -- 2-23: Q3 along an elliptic quartic -------------------------------------
    {
        CurveBlowupFrame fr = curve_blowup_frame(AmbientId::Q3, 4, 1);
        fr.contraction.nondegenerate = false;  // the center spans a hyperplane
        fr.contraction.has_trisecant = false;
        NotBigLemmaRepeat lemma{{TermQuadricIncident{0, 2}}, {}};
        FanoModel base{
            .id = "2-23",
            .subcase = "a",
            .anticanonical_degree = 30,
            .description = "blow-up of Q3 along an elliptic quartic cut by a hyperplane "
                           "section A and a quadric section, A smooth",
            .basis = fr.basis,
            .canonical_class = fr.canonical,
            .effective_generators = gens({{"H", fr.H}, {"D", fr.D}}),
            .intersection = fr.form,
            .contractions = {fr.contraction},
            .recipe = SimpleRecipe{lemma},
            .expected_verdict = Bigness::NotBig,
            .table_anchor = "quadric-incident",
        };
        rows.push_back(base);
        rows.push_back(with_subcase(base, "b",
                                    "blow-up of Q3 along an elliptic quartic cut by a "
                                    "hyperplane section A and a quadric section, A reduced "
                                    "but singular"));
    }

    // -- 2-24: (1,2) divisor on P2 x P2: two conic structures -------------------
    {
        Basis basis({"h1", "h2"});
        NotBigLemmaRepeat lemma{{TermConicFiber{0}, TermConicFiber{0}, TermConicFiber{1}},
                                {}};
        rows.push_back(FanoModel{
            .id = "2-24",
            .anticanonical_degree = 30,
            .description = "smooth divisor of bidegree (1,2) in P2 x P2",
            .basis = basis,
            .canonical_class = cc(basis, -2, -1),
            .effective_generators = gens({{"h1", cc(basis, 1, 0)}, {"h2", cc(basis, 0, 1)}}),
            .intersection = form2(basis, 0, 2, 1, 0),
            .contractions = {ConicBundleData{cc(basis, -3, 0), 3, false},
                             ConicBundleData{cc(basis, 0, -3), 0, true}},
            .recipe = SimpleRecipe{lemma},
            .expected_verdict = Bigness::NotBig,
            .table_anchor = "conic-fiber-sum",
        });
    }

    // -- 2-25: P3 along an elliptic quartic, quadric pencil ---------------------
    rows.push_back(space_curve_row("2-25", 32, 4, 1, false,
                                   "blow-up of P3 along an elliptic quartic, the "
                                   "intersection of two quadrics",
                                   {DelPezzoFibrationData{8}}));

    // -- 2-26: Bl_twisted-cubic Q3 = Bl_line V5 ---------------------------------
    {
        Basis basis({"H1", "H2"});
        DivisorClass D1 = cc(basis, 2, -1);
        DivisorClass D2 = cc(basis, -1, 1);
        BlowupData f1{.ambient = AmbientId::Q3,
                      .d = 3,
                      .g = 0,
                      .nondegenerate = false,
                      .polarization = cc(basis, 1, 0),
                      .exceptional = D1};
        BlowupData f2{.ambient = AmbientId::V5,
                      .d = 1,
                      .g = 0,
                      .nondegenerate = false,
                      .center_is_line = true,
                      .polarization = cc(basis, 0, 1),
                      .exceptional = D2};
        Basis eb({"eta", "H1", "H2"});
        DivisorClass z(eb, {ParamLin(3), ParamLin(0), ParamLin(-1)});
        BigInteriorCone cone{{
            {TermQuadricLines{0}, ParamLin(1)},
            {TermBlowupTransform{1, z, ParamLin(0), "ambient-v5-lines"}, ParamLin(1)},
            {TermPullback{cc(basis, 1, 0)}, ParamLin(1)},
        }};
        Basis a1({"H1", "D1"});
        Basis a2({"H2", "D2"});
        rows.push_back(FanoModel{
            .id = "2-26",
            .anticanonical_degree = 34,
            .description = "blow-up of Q3 along a twisted cubic (equally a blow-up of V5 "
                           "along a line)",
            .basis = basis,
            .relations = {LinearRelation("D1", D1), LinearRelation("D2", D2)},
            .canonical_class = cc(basis, -1, -1),
            .anticanonical_aliases = {DivisorClass(a1, {ParamLin(3), ParamLin(-1)}),
                                      DivisorClass(a2, {ParamLin(2), ParamLin(-1)})},
            .effective_generators = gens({{"H1", cc(basis, 1, 0)},
                                          {"H2", cc(basis, 0, 1)},
                                          {"D1", D1},
                                          {"D2", D2}}),
            .intersection = form2(basis, 2, 4, 5, 5),
            .contractions = {f1, f2},
            .recipe = SimpleRecipe{cone},
            .expected_verdict = Bigness::Big,
            .table_anchor = "interior-cone",
        });
    }

    // -- 2-27: P3 along a twisted cubic: conic bundle with empty discriminant --
    {
        CurveBlowupFrame fr = curve_blowup_frame(AmbientId::P3, 3, 0);
        fr.contraction.nondegenerate = true;
        DivisorClass h = cc(fr.basis, 2, -1);
        PosParam k = PosParam::positive("k");
        PosParam m = PosParam::positive("m");
        Basis eb({"eta", "H", "D"});
        DivisorClass z(eb, {ParamLin::param(k), -ParamLin::param(k), ParamLin(0)});
        BigInteriorCone cone{{
            {TermConicFiber{1}, ParamLin::param(k)},
            {TermBlowupTransform{0, z, ParamLin::param(m), "symmetric-power-sections"},
             ParamLin(2)},
            {TermPullback{fr.D}, ParamLin::param(m, Rational(2))},
        }};
        rows.push_back(FanoModel{
            .id = "2-27",
            .anticanonical_degree = 38,
            .description = "blow-up of P3 along a twisted cubic",
            .basis = fr.basis,
            .relations = {LinearRelation("h", h)},
            .canonical_class = fr.canonical,
            .anticanonical_aliases = {DivisorClass(Basis({"H", "h"}),
                                                   {ParamLin(2), ParamLin(1)})},
            .effective_generators = gens({{"H", fr.H}, {"D", fr.D}, {"h", h}}),
            .intersection = fr.form,
            .contractions = {fr.contraction, ConicBundleData{cc(fr.basis, -6, 3), 0, true}},
            .recipe = SimpleRecipe{cone},
            .expected_verdict = Bigness::Big,
            .table_anchor = "interior-cone",
        });
    }

    // -- 2-28 / 2-30: P3 along a degenerate center ------------------------------
    {
        auto planar_center_row = [&](const char* id, long degree, long d, long g,
                                     std::string description) {
            CurveBlowupFrame fr = curve_blowup_frame(AmbientId::P3, d, g);
            fr.contraction.nondegenerate = false;
            DivisorClass plane = cc(fr.basis, 1, -1);
            PosParam k = PosParam::positive("k");
            PosParam m = PosParam::positive("m");
            Basis eb({"eta", "H", "D"});
            DivisorClass z(eb, {ParamLin::param(k), -ParamLin::param(k), ParamLin(0)});
            BigInteriorCone cone{{
                {TermBlowupTransform{0, z, ParamLin::param(m), "symmetric-power-sections"},
                 ParamLin(1)},
                {TermPullback{plane}, ParamLin::param(k)},
                {TermPullback{fr.D}, ParamLin::param(m)},
            }};
            return FanoModel{
                .id = id,
                .anticanonical_degree = degree,
                .description = std::move(description),
                .basis = fr.basis,
                .canonical_class = fr.canonical,
                .effective_generators = gens({{"H", fr.H}, {"D", fr.D}, {"H-D", plane}}),
                .intersection = fr.form,
                .contractions = {fr.contraction},
                .recipe = SimpleRecipe{cone},
                .expected_verdict = Bigness::Big,
                .table_anchor = "interior-cone",
            };
        };
        rows.push_back(planar_center_row("2-28", 40, 3, 1,
                                         "blow-up of P3 along a plane cubic"));
        rows.push_back(planar_center_row("2-30", 46, 2, 0,
                                         "blow-up of P3 along a conic"));
    }

    // -- 2-29: Q3 along a conic --------------------------------------------------
    {
        CurveBlowupFrame fr = curve_blowup_frame(AmbientId::Q3, 2, 0);
        fr.contraction.nondegenerate = false;
        fr.contraction.has_trisecant = false;
        BigInteriorCone cone{{
            {TermQuadricIncident{0, 0}, ParamLin(1)},
            {TermQuadricLines{0}, ParamLin(1)},
            {TermPullback{fr.H}, ParamLin(2)},
        }};
        rows.push_back(FanoModel{
            .id = "2-29",
            .anticanonical_degree = 40,
            .description = "blow-up of the quadric Q3 along a conic",
            .basis = fr.basis,
            .canonical_class = fr.canonical,
            .effective_generators = gens({{"H", fr.H}, {"D", fr.D}}),
            .intersection = fr.form,
            .contractions = {fr.contraction},
            .recipe = SimpleRecipe{cone},
            .expected_verdict = Bigness::Big,
            .table_anchor = "interior-cone",
        });
    }

    // -- 2-31: Q3 along a line, P1-fibration over P2 ----------------------------
    {
        CurveBlowupFrame fr = curve_blowup_frame(AmbientId::Q3, 1, 0);
        fr.contraction.nondegenerate = false;
        fr.contraction.has_trisecant = false;
        fr.contraction.center_is_line = true;
        DivisorClass h = cc(fr.basis, 1, -1);
        BigInteriorCone cone{{
            {TermConicFiber{1}, ParamLin(1)},
            {TermQuadricLines{0}, ParamLin(1)},
            {TermPullback{fr.H}, ParamLin(2)},
        }};
        rows.push_back(FanoModel{
            .id = "2-31",
            .anticanonical_degree = 46,
            .description = "blow-up of the quadric Q3 along a line",
            .basis = fr.basis,
            .relations = {LinearRelation("h", h)},
            .canonical_class = fr.canonical,
            .anticanonical_aliases = {DivisorClass(Basis({"H", "h"}),
                                                   {ParamLin(2), ParamLin(1)})},
            .effective_generators = gens({{"H", fr.H}, {"D", fr.D}, {"h", h}}),
            .intersection = fr.form,
            .contractions = {fr.contraction, ConicBundleData{cc(fr.basis, -3, 3), 0, true}},
            .recipe = SimpleRecipe{cone},
            .expected_verdict = Bigness::Big,
            .table_anchor = "interior-cone",
        });
    }

    // -- 2-32: the flag threefold W ----------------------------------------------
    {
        Basis basis({"h1", "h2"});
        BigInteriorCone cone{{
            {TermConicFiber{0}, ParamLin(1)},
            {TermConicFiber{1}, ParamLin(1)},
            {TermPullback{cc(basis, 1, 1)}, ParamLin(1)},
        }};
        rows.push_back(FanoModel{
            .id = "2-32",
            .anticanonical_degree = 48,
            .description = "the flag threefold W, a smooth divisor of bidegree (1,1) in "
                           "P2 x P2",
            .basis = basis,
            .canonical_class = cc(basis, -2, -2),
            .effective_generators = gens({{"h1", cc(basis, 1, 0)}, {"h2", cc(basis, 0, 1)}}),
            .intersection = form2(basis, 0, 1, 1, 0),
            .contractions = {ConicBundleData{cc(basis, -3, 0), 0, true},
                             ConicBundleData{cc(basis, 0, -3), 0, true}},
            .recipe = SimpleRecipe{cone},
            .expected_verdict = Bigness::Big,
            .table_anchor = "interior-cone",
        });
    }

    // -- 2-33: P3 along a line (toric) -------------------------------------------
    {
        CurveBlowupFrame fr = curve_blowup_frame(AmbientId::P3, 1, 0);
        fr.contraction.nondegenerate = false;
        fr.contraction.center_is_line = true;
        rows.push_back(FanoModel{
            .id = "2-33",
            .anticanonical_degree = 54,
            .description = "blow-up of P3 along a line (toric; also a P2-bundle over P1)",
            .is_toric = true,
            .basis = fr.basis,
            .canonical_class = fr.canonical,
            .effective_generators = gens({{"H", fr.H}, {"D", fr.D}}),
            .intersection = fr.form,
            .contractions = {fr.contraction},
            .recipe = SimpleRecipe{RuleToric{}},
            .expected_verdict = Bigness::Big,
            .table_anchor = "toric",
        });
    }

    // -- 2-34: P2 x P1 (toric) ----------------------------------------------------
    {
        Basis basis({"h", "H"});  // h from the P2 factor, H from the P1 factor
        rows.push_back(FanoModel{
            .id = "2-34",
            .anticanonical_degree = 54,
            .description = "P2 x P1 (toric)",
            .is_toric = true,
            .basis = basis,
            .canonical_class = cc(basis, -3, -2),
            .effective_generators = gens({{"h", cc(basis, 1, 0)}, {"H", cc(basis, 0, 1)}}),
            .intersection = form2(basis, 0, 1, 0, 0),
            .contractions = {ConicBundleData{cc(basis, -3, 0), 0, true},
                             DelPezzoFibrationData{9}},
            .recipe = SimpleRecipe{RuleToric{}},
            .expected_verdict = Bigness::Big,
            .table_anchor = "toric",
        });
    }

    // -- 2-35: V7 = Bl_point P3 (toric) -------------------------------------------
    {
        Basis basis({"H", "D"});
        DivisorClass h = cc(basis, 1, -1);
        rows.push_back(FanoModel{
            .id = "2-35",
            .anticanonical_degree = 56,
            .description = "V7, the blow-up of P3 at a point (toric; a P1-bundle over P2)",
            .is_toric = true,
            .basis = basis,
            .relations = {LinearRelation("h", h)},
            .canonical_class = cc(basis, -4, 2),
            .effective_generators = gens({{"H", cc(basis, 1, 0)},
                                          {"D", cc(basis, 0, 1)},
                                          {"h", h}}),
            .intersection = form2(basis, 1, 0, 0, 1),
            .contractions = {ConicBundleData{cc(basis, -3, 3), 0, true}},
            .recipe = SimpleRecipe{RuleToric{}},
            .expected_verdict = Bigness::Big,
            .table_anchor = "toric",
        });
    }

    // -- 2-36: P(O + O(2)) over P2 (toric) ----------------------------------------
    {
        Basis basis({"H", "h"});  // H tautological, h from the base P2
        rows.push_back(FanoModel{
            .id = "2-36",
            .anticanonical_degree = 62,
            .description = "P(O + O(2)) over P2 (toric)",
            .is_toric = true,
            .basis = basis,
            .canonical_class = cc(basis, -2, -1),
            .effective_generators = gens({{"H", cc(basis, 1, 0)}, {"h", cc(basis, 0, 1)}}),
            .intersection = form2(basis, 4, 2, 1, 0),
            .contractions = {ConicBundleData{cc(basis, 0, -3), 0, true}},
            .recipe = SimpleRecipe{RuleToric{}},
            .expected_verdict = Bigness::Big,
            .table_anchor = "toric",
        });
    }

    // Sort by numeric id, then subcase (the build order above is already
    // numeric except for the grouped helpers).
    std::stable_sort(rows.begin(), rows.end(), [](const FanoModel& a, const FanoModel& b) {
        auto num = [](const FanoModel& m) {
            return std::stol(m.id.substr(m.id.find('-') + 1));
        };
        long na = num(a);
        long nb = num(b);
        if (na != nb) return na < nb;
        return a.subcase < b.subcase;
    });
    return rows;
}

}  // namespace

const std::vector<FanoModel>& registry() {
    static const std::vector<FanoModel> kRegistry = build_registry();
    return kRegistry;
}

const FanoModel& get(const std::string& id, const std::string& subcase) {
    for (const FanoModel& m : registry()) {
        if (m.id != id) continue;
        if (subcase.empty() || m.subcase == subcase) return m;
    }
    throw UnknownModel(subcase.empty() ? id : id + subcase);
}

FanoModel get_from(const std::vector<FanoModel>& models, const std::string& id,
                   const std::string& subcase) {
    for (const FanoModel& m : models) {
        if (m.id != id) continue;
        if (subcase.empty() || m.subcase == subcase) return m;
    }
    throw UnknownModel(subcase.empty() ? id : id + subcase);
}

// ---- validation ----------------------------------------------------------------

namespace {

/// The form evaluated on three constant classes over the same basis.
Rational triple_classes(const TrilinearForm& form, const DivisorClass& a,
                        const DivisorClass& b, const DivisorClass& c) {
    const Basis& basis = a.basis();
    Rational total(0);
    for (std::size_t i = 0; i < basis.rank(); ++i) {
        for (std::size_t j = 0; j < basis.rank(); ++j) {
            for (std::size_t k = 0; k < basis.rank(); ++k) {
                Rational coeff = a.coeff(i).constant() * b.coeff(j).constant() *
                                 c.coeff(k).constant();
                if (coeff.is_zero()) continue;
                total += coeff * form.triple(basis.symbol(i), basis.symbol(j),
                                             basis.symbol(k));
            }
        }
    }
    return total;
}

void collect_term_anchors(const ClassTerm& term, std::vector<std::string>& out) {
    std::visit(overloaded{
                   [&](const TermPushforwardDagger& t) { out.push_back(t.anchor); },
                   [&](const TermBlowupTransform& t) { out.push_back(t.anchor); },
                   [&](const TermAssumedDagger& t) { out.push_back(t.anchor); },
                   [](const auto&) {},
               },
               term);
}

std::vector<std::string> collect_anchors(const CertificateRecipe& recipe) {
    std::vector<std::string> anchors;
    auto simple = [&](const SimpleRecipe& r) {
        std::visit(overloaded{
                       [&](const BigInteriorCone& c) {
                           for (const auto& [term, coeff] : c.terms)
                               collect_term_anchors(term, anchors);
                       },
                       [&](const NotBigLemmaRepeat& l) {
                           for (const auto& term : l.dagger_terms)
                               collect_term_anchors(term, anchors);
                       },
                       [&](const RuleThreeFamily& t) {
                           anchors.push_back(t.data.vmrt_avoidance_anchor);
                       },
                       [](const auto&) {},
                   },
                   r);
    };
    std::visit(overloaded{
                   simple,
                   [&](const Disjunction& d) {
                       for (const auto& branch : d.branches) simple(branch);
                   },
               },
               recipe);
    return anchors;
}

}  // namespace

std::vector<std::string> validate(const FanoModel& model) {
    std::vector<std::string> issues;
    auto flag = [&](const std::string& msg) { issues.push_back(model.key() + ": " + msg); };

    // Identity.
    if (model.id.rfind("2-", 0) != 0) flag("id must start with \"2-\"");
    if (model.subcase != "" && model.subcase != "a" && model.subcase != "b")
        flag("subcase must be empty, \"a\", or \"b\"");

    // Lattice shape.
    if (model.basis.rank() != 2) flag("basis must have rank 2");
    if (model.basis.has(kZeta)) flag("model basis must not contain zeta");
    if (model.canonical_class.basis() != model.basis)
        flag("canonical class is not expressed in the model basis");
    if (!model.canonical_class.is_constant()) flag("canonical class must be constant");

    // Anticanonical degree from the intersection form.
    DivisorClass mk = model.anticanonical();
    try {
        Rational cube = triple_classes(model.intersection, mk, mk, mk);
        if (cube != Rational(model.anticanonical_degree))
            flag("(-K)^3 = " + cube.str() + " disagrees with the declared degree " +
                 std::to_string(model.anticanonical_degree));
    } catch (const UnknownEntry& e) {
        flag(std::string("intersection form incomplete: ") + e.what());
    }

    // Aliases rewrite to -K.
    for (const DivisorClass& alias : model.anticanonical_aliases) {
        try {
            if (change_basis(alias, model.relations, model.basis) != mk)
                flag("anticanonical alias " + alias.str() + " does not rewrite to " + mk.str());
        } catch (const Error& e) {
            flag(std::string("anticanonical alias rejected: ") + e.what());
        }
    }

    // Relations land in the basis.
    for (const LinearRelation& rel : model.relations) {
        if (rel.rhs.basis() != model.basis)
            flag("relation for " + rel.lhs + " is not expressed in the model basis");
    }

    // Effective generators.
    std::set<std::string> names;
    for (const EffectiveGenerator& gen : model.effective_generators) {
        if (!names.insert(gen.name).second) flag("duplicate effective generator " + gen.name);
        if (gen.cls.basis() != model.basis)
            flag("effective generator " + gen.name + " is not expressed in the model basis");
        else if (!gen.cls.is_constant() || gen.cls.is_zero())
            flag("effective generator " + gen.name + " must be a nonzero constant class");
    }

    // Contractions.
    for (const ContractionData& contraction : model.contractions) {
        std::visit(
            overloaded{
                [&](const ConicBundleData& cb) {
                    if (cb.pulled_back_canonical.basis() != model.basis ||
                        !cb.pulled_back_canonical.is_constant()) {
                        flag("conic bundle pullback class malformed");
                        return;
                    }
                    if (cb.d_delta < 0 || cb.d_delta == 1 || cb.d_delta == 2)
                        flag("conic bundle discriminant degree " +
                             std::to_string(cb.d_delta) + " is not realizable");
                    if (cb.p1_fibration && cb.d_delta != 0)
                        flag("a P1-fibration must have empty discriminant");
                    try {
                        // (pi*K)^3 = 0 and (pi*K)^2.(-K_X) = K_{P2}^2 . (-K_X)|_fiber = 18.
                        Rational c3 = triple_classes(model.intersection,
                                                     cb.pulled_back_canonical,
                                                     cb.pulled_back_canonical,
                                                     cb.pulled_back_canonical);
                        Rational c2 = triple_classes(model.intersection,
                                                     cb.pulled_back_canonical,
                                                     cb.pulled_back_canonical, mk);
                        if (!c3.is_zero())
                            flag("conic bundle pullback class has nonzero cube");
                        if (c2 != Rational(18))
                            flag("conic bundle pullback class fails (pi*K)^2.(-K) = 18, got " +
                                 c2.str());
                    } catch (const UnknownEntry& e) {
                        flag(std::string("conic bundle check needs missing entry: ") +
                             e.what());
                    }
                },
                [&](const DelPezzoFibrationData& dp) {
                    if (dp.fiber_degree < 1 || dp.fiber_degree > 9)
                        flag("del Pezzo fiber degree out of range");
                },
                [&](const BlowupData& bl) {
                    if (bl.d < 1 || bl.g < 0) flag("blow-up center with invalid (d, g)");
                    if (bl.polarization.basis() != model.basis ||
                        bl.exceptional.basis() != model.basis ||
                        !bl.polarization.is_constant() || !bl.exceptional.is_constant()) {
                        flag("blow-up polarization/exceptional classes malformed");
                        return;
                    }
                    long expected = ambient_degree(bl.ambient) -
                                    2 * ambient_anticanonical_curve_degree(bl.ambient, bl.d) +
                                    2 * bl.g - 2;
                    if (expected != model.anticanonical_degree)
                        flag("blow-up of " + std::string(ambient_name(bl.ambient)) +
                             " along a (" + std::to_string(bl.d) + "," + std::to_string(bl.g) +
                             ") curve would have degree " + std::to_string(expected));
                    try {
                        const DivisorClass& p = bl.polarization;
                        const DivisorClass& e = bl.exceptional;
                        Rational p3 = triple_classes(model.intersection, p, p, p);
                        Rational p2e = triple_classes(model.intersection, p, p, e);
                        Rational pe2 = triple_classes(model.intersection, p, e, e);
                        Rational e3 = triple_classes(model.intersection, e, e, e);
                        if (p3 != Rational(ambient_generator_cube(bl.ambient)))
                            flag("blow-up polarization cube " + p3.str() +
                                 " disagrees with the ambient");
                        if (!p2e.is_zero()) flag("blow-up requires p^2.e = 0");
                        if (pe2 != Rational(-bl.d))
                            flag("blow-up requires p.e^2 = -d, got " + pe2.str());
                        long expected_e3 =
                            2 - 2 * bl.g -
                            ambient_anticanonical_curve_degree(bl.ambient, bl.d);
                        if (e3 != Rational(expected_e3))
                            flag("blow-up requires e^3 = " + std::to_string(expected_e3) +
                                 ", got " + e3.str());
                    } catch (const UnknownEntry& err) {
                        flag(std::string("blow-up check needs missing entry: ") + err.what());
                    }
                },
                [&](const DoubleCoverData& dc) {
                    if (!parse_ambient(dc.target)) flag("double cover of unknown target");
                },
            },
            contraction);
    }

    // Anchors.
    const auto& docs = anchor_documentation();
    if (!docs.count(model.table_anchor)) flag("table anchor not documented");
    for (const std::string& anchor : collect_anchors(model.recipe)) {
        if (!docs.count(anchor)) flag("recipe anchor \"" + anchor + "\" not documented");
    }

    return issues;
}

std::vector<std::string> conic_discriminant_models() {
    std::vector<std::string> ids;
    for (const FanoModel& m : registry()) {
        if (!ids.empty() && ids.back() == m.id) continue;  // skip subcase duplicates
        for (const ContractionData& c : m.contractions) {
            if (const auto* cb = std::get_if<ConicBundleData>(&c); cb && cb->d_delta > 0) {
                ids.push_back(m.id);
                break;
            }
        }
    }
    return ids;
}

}  // namespace fanobig
