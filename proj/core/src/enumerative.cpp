#include "fanobig/enumerative.hpp"

#include <string>

#include "fanobig/errors.hpp"

namespace fanobig {

namespace {

void require_curve(CurveDG c, long min_degree, const char* where) {
    if (c.d < min_degree || c.g < 0)
        throw PreconditionFailed(std::string(where) + " needs d ≥ " +
                                 std::to_string(min_degree) + ", g ≥ 0; got (d,g)=(" +
                                 std::to_string(c.d) + "," + std::to_string(c.g) + ")");
}

}  // namespace

long nodes_general_projection(CurveDG c) {
    require_curve(c, 1, "nodes_general_projection");
    const long n = (c.d - 1) * (c.d - 2) / 2 - c.g;
    if (n < 0)
        throw NegativeCount("(d−1)(d−2)/2 − g = " + std::to_string(n) + " at (d,g)=(" +
                            std::to_string(c.d) + "," + std::to_string(c.g) + ")");
    return n;
}

long nodes_projection_from_point_on_curve(CurveDG c) {
    require_curve(c, 1, "nodes_projection_from_point_on_curve");
    const long n = (c.d - 2) * (c.d - 3) / 2 - c.g;
    if (n < 0)
        throw NegativeCount("(d−2)(d−3)/2 − g = " + std::to_string(n) + " at (d,g)=(" +
                            std::to_string(c.d) + "," + std::to_string(c.g) + ")");
    return n;
}

long secant_pairs_in_hyperplane(long d) {
    if (d < 2) throw PreconditionFailed("secant_pairs_in_hyperplane needs d ≥ 2");
    return d * (d - 1) / 2;
}

long dual_plane_curve_degree(CurveDG c) {
    require_curve(c, 3, "dual_plane_curve_degree");
    return 2 * c.d + 2 * c.g - 2;
}

long tangential_surface_degree(CurveDG c) {
    require_curve(c, 3, "tangential_surface_degree");
    return 2 * (c.d + c.g - 1);
}

long edge_surface_degree(CurveDG c) {
    require_curve(c, 3, "edge_surface_degree");
    return 2 * (c.d - 3) * (c.d + c.g - 1);
}

long edges_through_point(CurveDG c) {
    require_curve(c, 3, "edges_through_point");
    return 2 * (c.d + c.g - 3);
}

long conic_bundle_b3(long d_delta) {
    if (d_delta != 0 && d_delta < 3)
        throw PreconditionFailed("conic_bundle_b3 needs d_Δ = 0 or d_Δ ≥ 3");
    return d_delta * d_delta - 3 * d_delta;
}

DivisorClass expectation_crosscheck() {
    const CurveDG c{7, 5};
    const Basis pt(std::vector<std::string>{kZeta, "H", "D"});
    const Basis x(std::vector<std::string>{"H", "D"});
    auto cls = [&x](long h, long d) {
        return DivisorClass(x, {ParamLin(h), ParamLin(d)});
    };

    const long k = nodes_general_projection(c);                // 10 = deg ē
    const long canonical_chain = 2 * c.g - 2;                  // 8, from K over the family base
    const long cone_degree = c.d - 1;                          // 6, cone over the curve
    const long tangential = tangential_surface_degree(c);      // 22
    const long edge = edge_surface_degree(c);                  // 88
    const long edges_pt = edges_through_point(c);              // 18

    const DivisorClass canonical = cls(-4, 1);                 // K_X on the blow-up of ℙ³
    // kζ + k·Π*K_X − (2g−2)·Π*(cone) + ½·Π*(tangential surface) + Π*(edge surface)
    DivisorClass total = scale(ParamLin(k), zeta_unit(x));
    total = add(total, scale(ParamLin(k), pullback_to_pt(canonical)));
    total = add(total, scale(ParamLin(-canonical_chain), pullback_to_pt(cls(cone_degree, -1))));
    total = add(total, scale(ParamLin(Rational(1, 2)), pullback_to_pt(cls(tangential, -2))));
    total = add(total, pullback_to_pt(cls(edge, -edges_pt)));

    const DivisorClass expected(pt, {ParamLin(10), ParamLin(11), ParamLin(-1)});
    if (total != expected)
        throw InternalMismatch("expectation chain gives " + total.str() + ", secant class is " +
                               expected.str());
    return total;
}

}  // namespace fanobig
