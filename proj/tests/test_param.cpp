#include <doctest.h>

#include "fanobig/param.hpp"

using namespace fanobig;

namespace {
const PosParam k = PosParam::positive("k");
const PosParam m = PosParam::positive("m");
const PosParam c = PosParam::nonnegative("c");
}  // namespace

TEST_CASE("parameter expressions are affine-linear") {
    ParamLin e = ParamLin::param(k, 2) + ParamLin(3);
    CHECK(e.constant() == Rational(3));
    CHECK(e.terms().at("k").coeff == Rational(2));
    CHECK_FALSE(e.is_constant());
    CHECK(ParamLin(5).is_constant());
    CHECK(ParamLin(0).is_zero());
    CHECK((ParamLin::param(k) - ParamLin::param(k)).is_zero());
}

TEST_CASE("certified positivity distinguishes parameter flavors") {
    // A strictly positive parameter alone is positive.
    CHECK(ParamLin::param(k).certified_positive());
    // A nonnegative (slack) parameter alone is not.
    CHECK_FALSE(ParamLin::param(c).certified_positive());
    CHECK(ParamLin::param(c).certified_nonnegative());
    // Constant offsets rescue slack-only expressions.
    CHECK((ParamLin(1) + ParamLin::param(c)).certified_positive());
    // Zero is nonnegative but not positive.
    CHECK(ParamLin(0).certified_nonnegative());
    CHECK_FALSE(ParamLin(0).certified_positive());
    // Any negative piece disqualifies both certificates.
    CHECK_FALSE((ParamLin::param(k) - ParamLin(1)).certified_positive());
    CHECK_FALSE((ParamLin::param(k) - ParamLin(1)).certified_nonnegative());
    CHECK_FALSE((ParamLin::param(k, -1) + ParamLin(5)).certified_positive());
    CHECK_FALSE((ParamLin::param(k, -1) + ParamLin(5)).certified_nonnegative());
    // Mixed: 2k + c is positive, 3 + 2k + c too.
    CHECK((ParamLin::param(k, 2) + ParamLin::param(c)).certified_positive());
    CHECK((ParamLin(3) + ParamLin::param(k, 2) + ParamLin::param(c)).certified_positive());
}

TEST_CASE("parameter products stay linear or throw") {
    ParamLin e = ParamLin::param(k, 2) + ParamLin(1);
    ParamLin tripled = e * ParamLin(3);
    CHECK(tripled.constant() == Rational(3));
    CHECK(tripled.terms().at("k").coeff == Rational(6));
    CHECK((ParamLin(0) * e).is_zero());
    CHECK_THROWS_AS(e * ParamLin::param(m), NonlinearParameterProduct);
    CHECK_THROWS_AS(ParamLin::param(k) * ParamLin::param(k), NonlinearParameterProduct);
}

TEST_CASE("evaluation substitutes every parameter") {
    ParamLin e = ParamLin::param(k, 2) + ParamLin::param(c, -1) + ParamLin(3);
    CHECK(e.evaluate({{"k", Rational(5)}, {"c", Rational(1, 2)}}) == Rational(25, 2));
    CHECK_THROWS_AS(e.evaluate({{"k", Rational(5)}}), Error);
}

TEST_CASE("conflicting positivity declarations are rejected") {
    ParamLin a = ParamLin::param(PosParam::positive("t"));
    ParamLin b = ParamLin::param(PosParam::nonnegative("t"));
    CHECK_THROWS_AS(a + b, Error);
}

TEST_CASE("parameter expression display") {
    CHECK(ParamLin(0).str() == "0");
    CHECK(ParamLin(-2).str() == "-2");
    CHECK(ParamLin::param(k).str() == "k");
    CHECK(ParamLin::param(k, -1).str() == "-k");
    CHECK((ParamLin::param(k, 2) + ParamLin(1)).str() == "1+2k");
    CHECK((ParamLin(20) + ParamLin::param(c)).str() == "20+c");
    CHECK((ParamLin::param(k, -2) + ParamLin::param(m, 3)).str() == "-2k+3m");
}

TEST_CASE("zero coefficients vanish from the term map") {
    ParamLin e = ParamLin::param(k, 2);
    e += ParamLin::param(k, -2);
    CHECK(e.is_constant());
    CHECK(e.terms().empty());
    CHECK(ParamLin::param(k, 0).is_constant());
}
