#pragma once

#include "fanobig/lattice.hpp"

namespace fanobig {

/// A smooth space curve's degree and genus.
/// d ≥ 1, g ≥ 0; formulas that need nondegeneracy require d ≥ 3.
struct CurveDG {
    long d = 0;
    long g = 0;
};

/// Number of nodes of a general plane projection: (d−1)(d−2)/2 − g.
/// Equals the number of secant lines through a general point of ℙ³.
long nodes_general_projection(CurveDG c);

/// Number of nodes of the projection from a general point of the curve
/// itself: (d−2)(d−3)/2 − g. Equals the trisecant-flavored count m.
long nodes_projection_from_point_on_curve(CurveDG c);

/// Number of point pairs among the d hyperplane-section points: d(d−1)/2.
long secant_pairs_in_hyperplane(long d);

/// Degree of the dual curve of a general plane projection:
/// d(d−1) − 2·nodes = 2d+2g−2.
long dual_plane_curve_degree(CurveDG c);

/// Degree of the tangential surface: 2(d+g−1).
long tangential_surface_degree(CurveDG c);

/// Degree of the edge surface: 2(d−3)(d+g−1).
long edge_surface_degree(CurveDG c);

/// Number of edges through a general point of the curve: 2(d+g−3).
long edges_through_point(CurveDG c);

/// Third Betti number of a standard conic bundle over ℙ² with discriminant
/// degree d_Δ: d_Δ² − 3·d_Δ. Valid for d_Δ = 0 or d_Δ ≥ 3.
long conic_bundle_b3(long d_delta);

/// Cross-checks the degree-(7,5) secant class against the independent
/// canonical-bundle expectation chain
///   10ζ + 10Π*K_X − 8Π*(6H−D) + ½Π*(22H−2D) + Π*(88H−18D),   K_X = −4H+D,
/// over the basis ["zeta","H","D"]; both routes must give 10ζ+11Π*H−Π*D.
/// Throws InternalMismatch if the identity fails.
DivisorClass expectation_crosscheck();

}  // namespace fanobig
