#include <doctest.h>

#include <map>
#include <set>
#include <variant>

#include "helpers.hpp"

using namespace fanobig;
using fanobig::test::constant_class;

TEST_CASE("registry shape: 36 deformation types over 40 rows") {
    const std::vector<FanoModel>& models = registry();
    CHECK(models.size() == 40);

    std::set<std::string> ids;
    std::map<std::string, int> rows_per_id;
    for (const FanoModel& m : models) {
        ids.insert(m.id);
        rows_per_id[m.id]++;
    }
    CHECK(ids.size() == 36);
    for (long n = 1; n <= 36; ++n) CHECK(ids.count("2-" + std::to_string(n)) == 1);
    // Exactly these four types split into sub-rows.
    for (const auto& [id, count] : rows_per_id) {
        bool split = id == "2-6" || id == "2-8" || id == "2-15" || id == "2-23";
        CHECK(count == (split ? 2 : 1));
    }
}

TEST_CASE("registry rows are sorted and keyed") {
    const std::vector<FanoModel>& models = registry();
    for (std::size_t i = 1; i < models.size(); ++i) {
        long a = std::stol(models[i - 1].id.substr(2));
        long b = std::stol(models[i].id.substr(2));
        CHECK(a <= b);
        if (a == b) CHECK(models[i - 1].subcase < models[i].subcase);
    }
    CHECK(get("2-6").key() == "2-6a");
    CHECK(get("2-6", "b").key() == "2-6b");
    CHECK(get("2-13").key() == "2-13");
}

TEST_CASE("every registry row satisfies the data invariants") {
    for (const FanoModel& m : registry()) {
        CAPTURE(m.key());
        for (const std::string& issue : validate(m)) {
            CAPTURE(issue);
            CHECK(false);
        }
    }
}

TEST_CASE("anticanonical degree is the cube of the anticanonical class") {
    for (const FanoModel& m : registry()) {
        CAPTURE(m.key());
        DivisorClass antik = m.anticanonical();
        Rational cube(0);
        const std::vector<std::string>& symbols = m.basis.symbols();
        for (std::size_t i = 0; i < symbols.size(); ++i)
            for (std::size_t j = 0; j < symbols.size(); ++j)
                for (std::size_t k = 0; k < symbols.size(); ++k) {
                    Rational product = antik.coeff(i).constant() * antik.coeff(j).constant() *
                                       antik.coeff(k).constant();
                    if (!product.is_zero())
                        product *= triple(m.intersection, symbols[i], symbols[j], symbols[k]);
                    cube += product;
                }
        CHECK(cube == Rational(m.anticanonical_degree));
    }
}

TEST_CASE("expected verdicts split exactly at degree 34") {
    for (const FanoModel& m : registry()) {
        CAPTURE(m.key());
        CHECK((m.expected_verdict == Bigness::Big) == (m.anticanonical_degree >= 34));
    }
}

TEST_CASE("model lookup") {
    CHECK(get("2-27").anticanonical_degree == 38);
    CHECK(get("2-8", "b").subcase == "b");
    CHECK_THROWS_AS(get("2-37"), UnknownModel);
    CHECK_THROWS_AS(get("3-1"), UnknownModel);
    CHECK_THROWS_AS(get("2-13", "a"), UnknownModel);
    CHECK(get_from(registry(), "2-15", "b").description.find("singular") != std::string::npos);
}

TEST_CASE("ambient helpers") {
    CHECK(ambient_name(AmbientId::P3) == std::string("P3"));
    CHECK(ambient_name(AmbientId::V5) == std::string("V5"));
    for (AmbientId id : {AmbientId::P3, AmbientId::Q3, AmbientId::V1, AmbientId::V2,
                         AmbientId::V3, AmbientId::V4, AmbientId::V5, AmbientId::V7}) {
        auto parsed = parse_ambient(ambient_name(id));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == id);
    }
    CHECK_FALSE(parse_ambient("V6").has_value());
    CHECK(ambient_degree(AmbientId::P3) == 64);
    CHECK(ambient_degree(AmbientId::Q3) == 54);
    CHECK(ambient_degree(AmbientId::V5) == 40);
    CHECK(ambient_degree(AmbientId::V7) == 56);
    CHECK(ambient_anticanonical_curve_degree(AmbientId::P3, 3) == 12);
    CHECK(ambient_anticanonical_curve_degree(AmbientId::Q3, 6) == 18);
    CHECK(ambient_anticanonical_curve_degree(AmbientId::V5, 5) == 10);
}

TEST_CASE("known not-big ambients are the four low-degree del Pezzo threefolds") {
    std::set<AmbientId> listed;
    for (const KnownNotBigAmbient& a : known_not_big_ambients()) listed.insert(a.id);
    CHECK(listed ==
          std::set<AmbientId>{AmbientId::V1, AmbientId::V2, AmbientId::V3, AmbientId::V4});
    CHECK(is_known_not_big_ambient(AmbientId::V3));
    CHECK_FALSE(is_known_not_big_ambient(AmbientId::V5));
    CHECK_FALSE(is_known_not_big_ambient(AmbientId::P3));
}

TEST_CASE("contraction kinds") {
    const FanoModel& m13 = get("2-13");
    REQUIRE(m13.contractions.size() == 2);
    CHECK(contraction_kind(m13.contractions[0]) == ContractionKind::BlowupOfThreefold);
    CHECK(contraction_kind(m13.contractions[1]) == ContractionKind::ConicBundleOverP2);
    const FanoModel& m27 = get("2-27");
    CHECK(contraction_kind(m27.contractions[1]) == ContractionKind::P1FibrationOverP2);
    const FanoModel& m7 = get("2-7");
    bool has_dp = false;
    for (const ContractionData& c : m7.contractions)
        has_dp |= contraction_kind(c) == ContractionKind::DelPezzoFibrationOverP1;
    CHECK(has_dp);
    const FanoModel& m8 = get("2-8");
    bool has_cover = false;
    for (const ContractionData& c : m8.contractions)
        has_cover |= contraction_kind(c) == ContractionKind::DoubleCover;
    CHECK(has_cover);
    CHECK(contraction_kind_name(ContractionKind::ConicBundleOverP2) != nullptr);
}

TEST_CASE("conic discriminant models are the nine with non-empty discriminant") {
    std::vector<std::string> expected = {"2-2",  "2-6",  "2-8",  "2-9", "2-11",
                                         "2-13", "2-18", "2-20", "2-24"};
    CHECK(conic_discriminant_models() == expected);
}

TEST_CASE("spot checks against the displayed lattice data") {
    // 2-32, the flag threefold: K = −2h₁−2h₂, degree 48, two fibrations.
    const FanoModel& w = get("2-32");
    CHECK(w.basis == Basis({"h1", "h2"}));
    CHECK(w.canonical_class == constant_class(w.basis, {-2, -2}));
    CHECK_FALSE(w.is_toric);
    // 2-8: the H + h alias rewrites to −K through h = H − D.
    const FanoModel& m8 = get("2-8");
    REQUIRE(m8.anticanonical_aliases.size() == 1);
    CHECK(change_basis(m8.anticanonical_aliases[0], m8.relations, m8.basis) ==
          m8.anticanonical());
    // 2-36: P(O ⊕ O(2)) over ℙ², toric, degree 62.
    const FanoModel& m36 = get("2-36");
    CHECK(m36.is_toric);
    CHECK(m36.anticanonical_degree == 62);
    // Toric rows are exactly 2-33..2-36.
    for (const FanoModel& m : registry()) {
        bool late = std::stol(m.id.substr(2)) >= 33;
        CHECK(m.is_toric == late);
    }
}

TEST_CASE("validate flags corrupted data") {
    FanoModel broken = get("2-13");
    broken.anticanonical_degree = 21;  // (−K)³ is really 20
    CHECK_FALSE(validate(broken).empty());

    FanoModel bad_anchor = get("2-13");
    bad_anchor.table_anchor = "no-such-anchor";
    CHECK_FALSE(validate(bad_anchor).empty());

    FanoModel bad_gen = get("2-13");
    bad_gen.effective_generators.push_back(
        EffectiveGenerator{"Z", DivisorClass::zero(bad_gen.basis)});
    CHECK_FALSE(validate(bad_gen).empty());
}

TEST_CASE("every stored anchor is documented") {
    const std::map<std::string, std::string>& docs = anchor_documentation();
    CHECK_FALSE(docs.empty());
    for (const FanoModel& m : registry()) {
        CAPTURE(m.key());
        CHECK(docs.count(m.table_anchor) == 1);
    }
    CHECK(docs.count("interior-cone") == 1);
    CHECK(docs.count("space-curve-combination") == 1);
}
