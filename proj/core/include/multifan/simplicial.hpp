#ifndef MULTIFAN_SIMPLICIAL_HPP
#define MULTIFAN_SIMPLICIAL_HPP

#include <map>
#include <vector>

#include "multifan/exact.hpp"

namespace multifan {

using VertexId = int;

/// A simplex is a strictly increasing list of vertex ids.  The empty simplex
/// is a face of every complex.
using Simplex = std::vector<VertexId>;

/// Sorts and validates a vertex list (repeated vertices are rejected).
Simplex make_simplex(std::vector<VertexId> vertices);

/**
 * Abstract simplicial complex, stored by its maximal simplices.  All lower
 * faces are implied by downward closure.  A complex with no facets represents
 * {empty simplex}; it arises as the link of a facet.
 */
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Builds a complex from generating simplices.  Each list is sorted,
  /// duplicates are removed, and non-maximal generators are dropped.
  static SimplicialComplex from_facets(std::vector<Simplex> facets);

  const std::vector<Simplex>& facets() const { return facets_; }
  bool empty() const { return facets_.empty(); }
  int dimension() const;  // -1 for the empty complex

  std::vector<VertexId> vertices() const;
  bool has_vertex(VertexId v) const;

  /// Face test; the empty simplex is always a face.
  bool contains(const Simplex& s) const;

  /// All nonempty faces, deduplicated and sorted.
  std::vector<Simplex> all_faces() const;

  /// link(J) = { I : I disjoint from J, I union J a face }.  Throws if J is
  /// not a face.
  SimplicialComplex link(const Simplex& j) const;

  /// True iff every facet has dim+1 vertices.
  bool is_pure(int dim) const;

  /// Connectivity of the vertex-edge graph.
  bool is_connected() const;

  /// Counts, for each facet, its codimension-one faces.  For a pure complex
  /// with facets of size s these are the (s-1)-subsets; for s = 1 the single
  /// ridge is the empty simplex.
  std::map<Simplex, int> ridge_degrees() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::vector<Simplex> facets_;  // canonical: sorted list of sorted simplices
};

/// H_k described by its free rank and torsion coefficients (each > 1, each
/// dividing the next).
struct HomologyGroup {
  long long rank = 0;
  std::vector<Int> torsion;

  bool operator==(const HomologyGroup&) const = default;
};

/// Unreduced integral simplicial homology in degrees 0..dim, via Smith normal
/// form of the boundary matrices (orientation from the sorted vertex order).
std::vector<HomologyGroup> homology(const SimplicialComplex& k);

/// True iff the homology profile matches the d-sphere: H_0 = Z, H_d = Z and
/// nothing else (H_0 = Z^2 for d = 0).  Unreduced throughout.
bool is_homology_sphere(const SimplicialComplex& k, int d);

/// Open star of a vertex, described by its center and link.  Points of the
/// open star are x = (1-t) e_center + t y with 0 <= t < 1 and y a point of
/// the link's realization.
struct OpenStar {
  VertexId center;
  SimplicialComplex link;
};

OpenStar open_star(const SimplicialComplex& k, VertexId center);

}  // namespace multifan

#endif  // MULTIFAN_SIMPLICIAL_HPP
