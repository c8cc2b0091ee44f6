#include <doctest.h>

#include <vector>

#include "fanobig/vmrt.hpp"
#include "helpers.hpp"

using namespace fanobig;
using fanobig::test::constant_class;
using fanobig::test::generator;

namespace {

/// Minimal blow-up-of-ℙ³ model for solver cross-checks: basis [H, D],
/// H³ = 1, H²D = 0, HD² = −d, D³ = 2 − 2g − 4d.
FanoModel p3_scratch(long d, long g) {
    Basis basis({"H", "D"});
    TrilinearForm form;
    form.set("H", "H", "H", Rational(1));
    form.set("H", "H", "D", Rational(0));
    form.set("H", "D", "D", Rational(-d));
    form.set("D", "D", "D", Rational(2 - 2 * g - 4 * d));
    return FanoModel{
        .id = "scratch",
        .basis = basis,
        .canonical_class = constant_class(basis, {-4, 1}),
        .intersection = form,
        .recipe = SimpleRecipe{RuleToric{}},
        .table_anchor = "toric",
    };
}

/// Same for a quadric blow-up: H³ = 2, H²D = 0, HD² = −d, D³ = 2 − 2g − 3d.
FanoModel q3_scratch(long d, long g) {
    Basis basis({"H", "D"});
    TrilinearForm form;
    form.set("H", "H", "H", Rational(2));
    form.set("H", "H", "D", Rational(0));
    form.set("H", "D", "D", Rational(-d));
    form.set("D", "D", "D", Rational(2 - 2 * g - 3 * d));
    return FanoModel{
        .id = "scratch",
        .basis = basis,
        .canonical_class = constant_class(basis, {-3, 1}),
        .intersection = form,
        .recipe = SimpleRecipe{RuleToric{}},
        .table_anchor = "toric",
    };
}

}  // namespace

TEST_CASE("conic-fiber dual classes match the displayed formulas") {
    // Flag threefold, first fibration: ζ + h₁ − 2h₂.
    const FanoModel& w = get("2-32");
    Basis zw = w.basis.with_zeta();
    CHECK(conic_bundle_vmrt(w, w.contractions[0]).cls() == constant_class(zw, {1, 1, -2}));
    CHECK(conic_bundle_vmrt(w, w.contractions[1]).cls() == constant_class(zw, {1, -2, 1}));
    // Both fibrations together: C̆₁ + C̆₂ + Π*(h₁+h₂) = 2ζ.
    DivisorClass total = add(conic_bundle_vmrt(w, w.contractions[0]).cls(),
                             conic_bundle_vmrt(w, w.contractions[1]).cls());
    total = add(total, pullback_to_pt(constant_class(w.basis, {1, 1})));
    CHECK(total == scale(ParamLin(2), zeta_unit(w.basis)));

    // Quadric blow-up 2-13: ζ + 3H − 2D, i.e. ζ − H + 2h after D = 2H − h.
    const FanoModel& m13 = get("2-13");
    Basis z13 = m13.basis.with_zeta();
    DivisorClass conic13 = conic_bundle_vmrt(m13, m13.contractions[1]).cls();
    CHECK(conic13 == constant_class(z13, {1, 3, -2}));
    Basis zhh = Basis({"H", "h"}).with_zeta();
    LinearRelation d_rel("D", constant_class(zhh, {0, 2, -1}));
    CHECK(change_basis(conic13, {d_rel}, zhh) == constant_class(zhh, {1, -1, 2}));

    // Divisor of bidegree (1,2) in ℙ²×ℙ², second projection: ζ − 2h₁ + 2h₂.
    const FanoModel& m24 = get("2-24");
    CHECK(conic_bundle_vmrt(m24, m24.contractions[1]).cls() ==
          constant_class(m24.basis.with_zeta(), {1, -2, 2}));

    CHECK_THROWS_AS(conic_bundle_vmrt(m13, m13.contractions[0]), WrongContractionKind);
    CHECK(conic_bundle_vmrt(w, w.contractions[0]).source() == DaggerSource::ConicFiberVMRT);
}

TEST_CASE("universal-family pushforward reproduces the displayed classes") {
    // Double cover of V₇ (2-8): the degree-12 bitangent-plane family.
    const FanoModel& m8 = get("2-8");
    FamilyData bitangent;
    bitangent.k = 12;
    bitangent.r = 56;
    bitangent.polarization = "H";
    bitangent.s = {{"H", 1}, {"D", 0}};
    CHECK(universal_family_pushforward(m8, bitangent) ==
          constant_class(m8.basis.with_zeta(), {12, 16, 0}));

    // Double cover of ℙ²×ℙ¹ (2-18): the fiber-pencil family.
    const FanoModel& m18 = get("2-18");
    FamilyData pencil;
    pencil.k = 2;
    pencil.r = 8;
    pencil.polarization = "h";
    pencil.s = {{"H", 0}, {"h", 1}};
    CHECK(universal_family_pushforward(m18, pencil) ==
          constant_class(m18.basis.with_zeta(), {2, 4, -2}));

    // Blow-up of ℙ³ along the (7,5) curve (2-9): the secant family.
    const FanoModel& m9 = get("2-9");
    FamilyData secants;
    secants.k = 10;
    secants.r = 21;
    secants.polarization = "H";
    secants.s = {{"H", 1}, {"D", 2}};
    secants.m = {{"D", 5}};
    CHECK(universal_family_pushforward(m9, secants) ==
          constant_class(m9.basis.with_zeta(), {10, 11, -1}));
}

TEST_CASE("secant-lines classes") {
    Basis zhd = canonical_blowup_basis();
    CHECK(secant_lines_class({7, 5}, true).cls() == constant_class(zhd, {10, 11, -1}));
    CHECK(secant_lines_class({4, 1}, false).cls() == constant_class(zhd, {2, 4, -3}));
    CHECK(secant_lines_class({6, 3}, true).cls() == constant_class(zhd, {7, 8, -2}));
    CHECK(secant_lines_class({7, 5}, true).source() == DaggerSource::SecantFamily);
    // The twisted cubic has no secant family of this shape.
    CHECK_THROWS_AS(secant_lines_class({3, 0}, false), Error);
}

TEST_CASE("incident-lines classes carry the slack parameter") {
    Basis zhd = canonical_blowup_basis();
    PosParam c = PosParam::nonnegative("c");
    auto expected = [&](long k) {
        return DivisorClass(zhd, {ParamLin(k), ParamLin(-k),
                                  ParamLin(k - 2) + ParamLin::param(c)});
    };
    CHECK(incident_lines_class_p3({7, 5}, c).cls() == expected(22));
    CHECK(incident_lines_class_p3({4, 1}, c).cls() == expected(8));
    CHECK(incident_lines_class_p3({3, 0}, c).cls() == expected(4));
}

TEST_CASE("quadric ambient- and incident-lines classes") {
    Basis zhd = canonical_blowup_basis();
    CHECK(quadric_lines_class().cls() == constant_class(zhd, {2, -2, 2}));

    // On 2-21 the two quadric realizations give mirror classes.
    const FanoModel& m21 = get("2-21");
    Basis z21 = m21.basis.with_zeta();
    CHECK(materialize(m21, TermQuadricLines{0}) == constant_class(z21, {2, 2, -2}));
    CHECK(materialize(m21, TermQuadricLines{1}) == constant_class(z21, {2, -2, 2}));

    CHECK(quadric_incident_class(4, 2).cls() == constant_class(zhd, {4, 0, 0}));
    CHECK(quadric_incident_class(2, 0).cls() == constant_class(zhd, {2, 0, -2}));
    CHECK(quadric_incident_class(6, 5).cls() == constant_class(zhd, {6, 0, 3}));
}

TEST_CASE("V5 ambient-lines class and its guards") {
    Basis zhd = canonical_blowup_basis();
    // 2-14's center (elliptic quintic in two hyperplane sections) qualifies.
    const FanoModel& m14 = get("2-14");
    const BlowupData& b14 = blowup_at(m14, 0);
    CHECK(v5_lines_class(b14).cls() == constant_class(zhd, {3, -1, 3}));
    CHECK(into_model(m14, b14, v5_lines_class(b14)).cls() ==
          constant_class(m14.basis.with_zeta(), {3, 2, -3}));

    // 2-20 (twisted cubic center): 3ζ − H + 3D = 3ζ + 2H − 3h after D = H − h.
    const FanoModel& m20 = get("2-20");
    DivisorClass v5_20 = materialize(m20, TermV5Lines{0});
    CHECK(v5_20 == constant_class(m20.basis.with_zeta(), {3, -1, 3}));
    Basis zhh = Basis({"H", "h"}).with_zeta();
    LinearRelation d_rel("D", constant_class(zhh, {0, 1, -1}));
    CHECK(change_basis(v5_20, {d_rel}, zhh) == constant_class(zhh, {3, 2, -3}));

    // A line center is excluded (2-26's V₅ realization).
    const FanoModel& m26 = get("2-26");
    CHECK_THROWS_AS(v5_lines_class(blowup_at(m26, 1)), PreconditionFailed);
}

TEST_CASE("strict-transform pullbacks through a blow-up") {
    const FanoModel& m26 = get("2-26");
    // The ambient ℙ(T_Z) basis: η followed by the model's own symbols.
    std::vector<std::string> symbols = {"eta"};
    for (const std::string& s : m26.basis.symbols()) symbols.push_back(s);
    Basis ambient(symbols);

    // 2η − 2H_Q on the quadric side, order 0 → 2ζ + 2H₁ − 2H₂.
    DivisorClass z_quadric = constant_class(ambient, {2, -2, 0});
    CHECK(strict_transform_pullback(m26, z_quadric, blowup_at(m26, 0), ParamLin(0)) ==
          constant_class(m26.basis.with_zeta(), {2, 2, -2}));

    // 3η − H₅ on the V₅ side, order 0 → 3ζ − 3H₁ + 2H₂.
    DivisorClass z_v5 = constant_class(ambient, {3, 0, -1});
    CHECK(strict_transform_pullback(m26, z_v5, blowup_at(m26, 1), ParamLin(0)) ==
          constant_class(m26.basis.with_zeta(), {3, -3, 2}));

    // kη with F = 0 and vanishing order m → kζ + (k−m)Π*D.
    const FanoModel& m30 = get("2-30");
    std::vector<std::string> sym30 = {"eta"};
    for (const std::string& s : m30.basis.symbols()) sym30.push_back(s);
    PosParam k = PosParam::positive("k");
    PosParam m = PosParam::positive("m");
    DivisorClass z_pure = DivisorClass::make(Basis(sym30), {{"eta", ParamLin::param(k)}});
    DivisorClass lifted =
        strict_transform_pullback(m30, z_pure, blowup_at(m30, 0), ParamLin::param(m));
    CHECK(lifted.coeff("zeta") == ParamLin::param(k));
    CHECK(lifted.coeff("H") == ParamLin(0));
    CHECK(lifted.coeff("D") == ParamLin::param(k) - ParamLin::param(m));
}

TEST_CASE("contraction accessors enforce kinds and ranges") {
    const FanoModel& m13 = get("2-13");
    CHECK(blowup_at(m13, 0).d == 6);
    CHECK_THROWS_AS(blowup_at(m13, 1), WrongContractionKind);
    CHECK_THROWS_AS(blowup_at(m13, 7), PreconditionFailed);
    CHECK(conic_bundle_at(m13, 1).d_delta == 4);
    CHECK_THROWS_AS(conic_bundle_at(m13, 0), WrongContractionKind);
}

TEST_CASE("materialize handles every term kind; dagger terms stay daggers") {
    const FanoModel& m13 = get("2-13");
    DivisorClass h_pullback = materialize(m13, TermPullback{generator(m13, "H")});
    CHECK(h_pullback == pullback_to_pt(generator(m13, "H")));
    CHECK_THROWS_AS(materialize_dagger(m13, TermPullback{generator(m13, "H")}),
                    PreconditionFailed);

    const FanoModel& m27 = get("2-27");
    const auto* cone = std::get_if<BigInteriorCone>(std::get_if<SimpleRecipe>(&m27.recipe));
    REQUIRE(cone != nullptr);
    for (const auto& [term, coeff] : cone->terms) {
        if (std::holds_alternative<TermBlowupTransform>(term))
            CHECK_THROWS_AS(materialize_dagger(m27, term), PreconditionFailed);
    }

    // Dagger sources survive materialization.
    CHECK(materialize_dagger(m13, TermQuadricLines{0}).source() == DaggerSource::QuadricLines);
    CHECK(materialize_dagger(m13, TermConicFiber{1}).source() ==
          DaggerSource::ConicFiberVMRT);
}

TEST_CASE("solver route equals the closed forms (spot checks)") {
    for (long d = 4; d <= 6; ++d) {
        for (long g : {0L, 2L}) {
            CurveDG c{d, g};
            long delta = nodes_general_projection(c);
            FanoModel scratch = p3_scratch(d, g);
            for (bool tri : {false, true}) {
                long m = 0;
                if (tri) {
                    try {
                        m = nodes_projection_from_point_on_curve(c);
                    } catch (const NegativeCount&) {
                        continue;
                    }
                }
                FamilyData fd;
                fd.k = delta;
                fd.r = secant_pairs_in_hyperplane(d);
                fd.polarization = "H";
                fd.s = {{"H", 1}, {"D", 2}};
                if (m > 0) fd.m = {{"D", m}};
                CHECK(secant_lines_class(c, tri).cls() ==
                      universal_family_pushforward(scratch, fd));
            }
        }
    }
    for (long d = 2; d <= 6; ++d) {
        for (long m : {0L, 2L, 7L}) {
            FanoModel scratch = q3_scratch(d, 0);
            FamilyData fd;
            fd.k = d;
            fd.r = 2 * d;
            fd.polarization = "H";
            fd.s = {{"H", 1}, {"D", 1}};
            if (m > 0) fd.m = {{"D", m}};
            CHECK(quadric_incident_class(d, m).cls() ==
                  universal_family_pushforward(scratch, fd));
        }
    }
}
