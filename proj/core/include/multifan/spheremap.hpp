#ifndef MULTIFAN_SPHEREMAP_HPP
#define MULTIFAN_SPHEREMAP_HPP

#include <cstdint>

#include "multifan/fan.hpp"
#include "multifan/rng.hpp"

namespace multifan {

// The piecewise map from the realization of the fan's complex to the unit
// sphere sends a barycentric point of simplex I to the direction of the
// weighted ray sum.  Sphere values are represented by nonzero rational
// vectors up to positive scaling; every identity we need is expressible in
// squared, hence rational, form.

/// Point of |Sigma| in barycentric coordinates over a simplex.
struct BarycentricPoint {
  Simplex simplex;
  std::vector<Rat> coefficients;  // nonnegative, summing to 1
};

BarycentricPoint make_barycentric(const SimplicialComplex& k, Simplex simplex,
                                  std::vector<Rat> coefficients);

/// Drops zero coefficients, yielding the carrier simplex of the point.
BarycentricPoint canonical_support(const BarycentricPoint& p);

/// Geometric equality of points (independent of the ambient simplex chosen).
bool same_point(const BarycentricPoint& a, const BarycentricPoint& b);

/// Point of the open star of `center` written as x = (1-t) e_center + t y
/// with 0 <= t < 1 and y in the link.
struct StarPoint {
  VertexId center;
  Rat t;
  BarycentricPoint y;
};

StarPoint make_star_point(const SimplicialComplex& k, VertexId center, Rat t,
                          BarycentricPoint y);

/// Rewrites a star point in plain barycentric coordinates on {center} union
/// carrier(y), with weight 1-t on the center.
BarycentricPoint to_barycentric(const StarPoint& p);

/// The unnormalized image direction sum_i a_i ray_i, exact.  Normalization is
/// a positive scalar, so directions compare by positive proportionality.
/// Throws "map undefined at x" if the sum vanishes (impossible for valid
/// simplicial cone data; guarded anyway).
RatVec eval_direction(const MultiFan& f, const BarycentricPoint& x);
RatVec eval_direction(const MultiFan& f, const StarPoint& p);

/// u = c * v for some c > 0.
bool same_direction(const RatVec& u, const RatVec& v);

struct GhParts {
  Rat g_squared;
  Rat h_squared;
  int h_sign = 0;  // sign of 1 - t + t * sum_j a_j c_j
};

/// Splits the image of a star point into the component along the projected
/// link directions (g) and the component along ray(center) (h), with the
/// standard dot product.  c_j = <ray_j, ray_i> / <ray_i, ray_i> and the
/// projection of ray_j is ray_j - c_j ray_i, all exact.
GhParts gh_decompose(const MultiFan& f, const StarPoint& p);

/// g^2 + h^2 == 1, checked in exact rational arithmetic.  The denominator is
/// expanded directly from the image direction, so this genuinely exercises
/// the orthogonality of the decomposition.
bool pythagoras_check(const MultiFan& f, const StarPoint& p);

/// Combinatorial homeomorphism criterion: the map is a homeomorphism exactly
/// when the weighted cone count is 1, so the verdict is todd == 1 together
/// with v-independence of the sampled count.  No point-set topology is
/// performed.  Requires a valid fan, connected for dim >= 2.
bool homeomorphism_verdict(const MultiFan& f, int sample_count, std::uint64_t seed);

/// Seeded random star point: random center, random face of its link, strictly
/// positive random coefficients, t rational in [0, 1).
StarPoint sample_star_point(const MultiFan& f, Rng& rng);

}  // namespace multifan

#endif  // MULTIFAN_SPHEREMAP_HPP
