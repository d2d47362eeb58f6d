#ifndef MULTIFAN_QUASITORIC_HPP
#define MULTIFAN_QUASITORIC_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "multifan/fan.hpp"

namespace multifan {

/**
 * Characteristic pair of a quasitoric manifold: the boundary complex of the
 * simplicial polytope dual to the (simple) orbit polytope, together with a
 * primitive ray for each facet of the polytope.  The polytope itself is never
 * ingested; its face structure and the rays determine everything we compute.
 */
struct CharacteristicPair {
  int dim = 0;                             // n
  SimplicialComplex dual_complex;          // pure (n-1)-dim homology sphere
  std::map<VertexId, IntVec> rays;
  std::map<VertexId, std::string> labels;
};

/// Structural invariants: purity, connectivity, homology-sphere shape of the
/// dual complex, primitive rays of the right dimension.  One message per
/// violation.
std::vector<std::string> validate_pair(const CharacteristicPair& p);

/// Davis-Januszkiewicz nondegeneracy: at each vertex of the polytope (top
/// simplex of the dual complex) the rays form a lattice basis, |det| = 1.
/// Requires the pair invariants to hold.
bool validate_dj(const CharacteristicPair& p);

/// The multi-fan of the pair: same complex and rays, all weights 1 (each top
/// intersection of characteristic submanifolds is a single fixed point).
/// Throws if the pair is invalid or fails the nondegeneracy condition.
MultiFan to_multifan(const CharacteristicPair& p);

/// Subtorus attached to a face: the face together with its generator rays.
struct FaceSubgroup {
  Simplex face;
  std::vector<IntVec> generators;  // empty for the empty face (trivial subgroup)
};

FaceSubgroup face_subgroup(const CharacteristicPair& p, const Simplex& face);

/// Fixed points of the torus action = vertices of the polytope = top
/// simplices of the dual complex.
long long fixed_point_count(const CharacteristicPair& p);

struct ToricityReport {
  ClassificationReport classification;
  bool toric = false;
  std::string verdict;  // "toric" or "not realizable by an invariant complex structure"
};

/// Classifies the associated multi-fan.  Verdict "toric" iff todd == 1 with
/// all flags set: an invariant complex structure forces the multi-fan to be
/// an ordinary complete nonsingular fan, i.e. the fan of a toric manifold.
/// A negative verdict cannot distinguish "no invariant complex structure"
/// from "data not arising from a quasitoric manifold at all".
ToricityReport toricity_report(const CharacteristicPair& p, int sample_count,
                               std::uint64_t seed);

}  // namespace multifan

#endif  // MULTIFAN_QUASITORIC_HPP
