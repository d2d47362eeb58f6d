#ifndef MULTIFAN_FAN_HPP
#define MULTIFAN_FAN_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "multifan/exact.hpp"
#include "multifan/simplicial.hpp"

namespace multifan {

/**
 * A multi-fan: a pure simplicial complex on ray labels, a primitive integer
 * ray for each vertex, and a positive weight for each top simplex.  The cone
 * of a simplex I is the positive hull of its rays; unlike an ordinary fan,
 * cones of different simplices may overlap.
 */
struct MultiFan {
  int dim = 0;                            // ambient rank n; facets have n vertices
  SimplicialComplex complex;              // pure of dimension n-1
  std::map<VertexId, IntVec> rays;        // vertex -> primitive ray in Z^n
  std::map<Simplex, long long> weights;   // facet -> weight >= 1
  std::map<VertexId, std::string> labels; // display names (optional)

  std::string label(VertexId v) const;
  std::string label(const Simplex& s) const;  // "{a,b}"

  bool operator==(const MultiFan& o) const {
    return dim == o.dim && complex == o.complex && rays == o.rays && weights == o.weights;
  }
};

struct ClassificationReport {
  bool nonsingular = false;
  bool ordinary_fan = false;
  bool complete = false;
  bool unit_weights = false;
  long long todd = 0;
  int samples_used = 0;
  bool v_independent = false;

  bool operator==(const ClassificationReport&) const = default;
};

/// Checks every structural invariant; returns one message per violation,
/// each naming the offending ray or simplex.  Empty result means valid.
std::vector<std::string> validate(const MultiFan& f);

/// Throws Error if validate(f) is nonempty.
void require_valid(const MultiFan& f);

/// Membership of v in the positive hull of the rays of I (boundary counts as
/// inside; the cone of the empty simplex is the origin, so the result is
/// false for v != 0).  Throws if I is not a simplex or v is zero.
bool cone_contains(const MultiFan& f, const Simplex& i, const RatVec& v);

/// True iff v avoids the cone of every non-top simplex, which is exactly the
/// hypothesis under which the weighted cone count below is well defined.
/// Tested exactly, never by perturbation.
bool is_generic(const MultiFan& f, const RatVec& v);

/// Seeded rejection sampling of integer vectors in a growing box until one is
/// generic.  Deterministic for a fixed seed; throws "no generic vector found"
/// when the retry budget is exhausted.
RatVec sample_generic(const MultiFan& f, std::uint64_t seed);

/// Todd genus at a generic vector: the sum of the weights of the top
/// simplices whose cone contains v.  Throws "vector not generic" otherwise.
long long todd_genus(const MultiFan& f, const RatVec& v);

struct ToddSample {
  long long todd = 0;        // value at the first sample
  bool v_independent = false;  // whether all samples agreed
};

/// Evaluates todd_genus at sample_count independently seeded generic vectors.
ToddSample todd_v_independence(const MultiFan& f, int sample_count, std::uint64_t seed);

/// |det| = 1 for the rays of every top simplex.
bool is_nonsingular(const MultiFan& f);

/// True iff any two cones meet in the cone of the shared face, i.e. the cone
/// assignment is an honest fan.  Exact pairwise intersection of the top
/// cones via double description on their coefficient systems; faces follow
/// because the cones are simplicial.
bool is_ordinary_fan(const MultiFan& f);

/// Completeness of an ordinary fan: every ridge lies in exactly two facets,
/// the facet adjacency graph is connected, and a generic sample vector is
/// covered by some top cone.  Throws "not an ordinary fan" otherwise.
bool is_complete(const MultiFan& f);

/// Runs the full battery.  For multi-fans of complex torus manifolds,
/// todd == 1 exactly when all four flags hold.
ClassificationReport classify(const MultiFan& f, int sample_count, std::uint64_t seed);

/// Restriction to the characteristic submanifold of vertex i: the complex
/// becomes link({i}), each neighboring ray is replaced by its primitive class
/// in Z^n / Z*ray(i) (coordinates from unimodular_extension), and every
/// weight becomes 1.  Throws "restriction degenerate" if some restricted
/// facet loses independence.
MultiFan restrict_at(const MultiFan& f, VertexId i);

struct Subdivision {
  MultiFan fan;
  VertexId new_vertex;
};

/// Stellar subdivision at an interior ray r of the cone of I (|I| >= 2):
/// every facet containing I is replaced by the facets obtained by swapping
/// one element of I for the new vertex; weights are inherited unchanged.
Subdivision stellar_subdivide(const MultiFan& f, const Simplex& i, const IntVec& ray);

/// Transforms every ray by a unimodular matrix.  Classification data is
/// invariant under this action.
MultiFan apply_unimodular(const MultiFan& f, const IntMatrix& u);

struct Chamber {
  IntVec representative;  // interior point of the chamber
  long long todd = 0;
};

/// Exact chamber decomposition for dim == 2: rays (plus the four axis
/// directions as cutting walls) are sorted by angle with exact sign tests and
/// each open sector between consecutive walls is counted.  Cross-check
/// oracle for the sampling path; the count is constant across chambers
/// exactly when the fan is v-independent.
std::vector<Chamber> enumerate_chambers_2d(const MultiFan& f);

}  // namespace multifan

#endif  // MULTIFAN_FAN_HPP
