#ifndef MULTIFAN_SURFACES_HPP
#define MULTIFAN_SURFACES_HPP

#include <optional>
#include <utility>
#include <vector>

#include "multifan/exact.hpp"

namespace multifan {

/// Oriented connected sum of cp2 copies of CP^2, conj_cp2 copies of CP^2 with
/// reversed orientation, and s2xs2 copies of S^2 x S^2.  The empty sum (the
/// 4-sphere) is rejected.
struct ConnectedSum {
  long long cp2 = 0;
  long long conj_cp2 = 0;
  long long s2xs2 = 0;

  bool operator==(const ConnectedSum&) const = default;
};

ConnectedSum make_connected_sum(long long cp2, long long conj_cp2, long long s2xs2);

struct SurfaceInvariants {
  long long euler = 0;      // k + l + 2m + 2
  long long signature = 0;  // k - l
  Rat todd;                 // (k + m + 1) / 2, exact
};

SurfaceInvariants invariants(const ConnectedSum& c);

/// Cup-product form: diagonal +-1 entries plus hyperbolic blocks.
struct IntersectionForm {
  std::vector<int> diagonal;        // entries +1 or -1
  long long hyperbolic_blocks = 0;

  long long rank() const { return static_cast<long long>(diagonal.size()) + 2 * hyperbolic_blocks; }
};

IntersectionForm form_of(const ConnectedSum& c);

/// Negative definite iff the diagonal is nonempty, all -1, and there are no
/// hyperbolic blocks (those are indefinite).
bool is_negative_definite(const IntersectionForm& q);

struct DonaldsonVerdict {
  bool admissible = false;
  // Present exactly when inadmissible: a split of the sum into two halves,
  // neither of which has a negative definite form.
  std::optional<std::pair<ConnectedSum, ConnectedSum>> witness;
};

/// Admissibility of a connected sum as a projective surface: splits off a
/// CP^2 when cp2 >= 2, an S^2 x S^2 when s2xs2 >= 2, and handles the mixed
/// (1,1) case, leaving only (cp2, s2xs2) in {(1,0), (0,1)} admissible.  The
/// remaining case (0,0) has half-integral Todd genus and is rejected with
/// "Todd not integral" since no almost complex structure is compatible.
DonaldsonVerdict donaldson_filter(const ConnectedSum& c);

/// All admissible sums within the bounds; equals {(1,l,0)} union {(0,l,1)}.
std::vector<ConnectedSum> enumerate_admissible(long long cp2_max, long long conj_max,
                                               long long s2xs2_max);

}  // namespace multifan

#endif  // MULTIFAN_SURFACES_HPP
