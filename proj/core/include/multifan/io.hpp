#ifndef MULTIFAN_IO_HPP
#define MULTIFAN_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "multifan/fan.hpp"
#include "multifan/quasitoric.hpp"

namespace multifan {

// JSON document format for a multi-fan:
//
//   {
//     "dim": 2,
//     "rays": [ { "id": "a", "vector": [1, 0] }, ... ],
//     "facets": [ { "vertices": ["a", "b"], "weight": 1 }, ... ],
//     "metadata": { ... }            // optional, passed through
//   }
//
// Ray ids are unique nonempty strings; vector entries are integers (or
// decimal strings, for values beyond 64 bits); weight defaults to 1.
// Serialization is normalized: rays sorted by id, facet vertex lists sorted,
// facets sorted, weights explicit, keys in a fixed order.  Normalized output
// is byte-stable under reparsing.

struct ParseResult {
  std::optional<MultiFan> fan;       // present iff errors is empty
  std::vector<std::string> errors;   // path-addressed messages
  std::string metadata_json;         // normalized "metadata" value, "" if absent
};

ParseResult parse_multifan(const std::string& text);

std::string serialize_multifan(const MultiFan& f, const std::string& metadata_json = "");

/// Reads a characteristic pair from the same document format.  Weights must
/// be absent or 1: a pair carries no weight data.
struct PairParseResult {
  std::optional<CharacteristicPair> pair;
  std::vector<std::string> errors;
  std::string metadata_json;
};

PairParseResult parse_characteristic_pair(const std::string& text);

std::string classification_text(const ClassificationReport& r);
std::string classification_json(const ClassificationReport& r);

std::string homology_text(const std::vector<HomologyGroup>& groups);
std::string group_text(const HomologyGroup& g);  // "0", "Z", "Z^2 + Z/2", ...

}  // namespace multifan

#endif  // MULTIFAN_IO_HPP
