#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "arcdiag/diagram.hpp"

namespace arcdiag {

// All diagrams of one profile in canonical-key order, with an ordinal index.
struct DiagramSet {
  ValenceProfile profile;
  std::vector<ArcDiagram> elements;
  std::vector<std::string> keys;  // keys[i] == canonical_key(elements[i])
  std::unordered_map<std::string, std::size_t> index;

  std::size_t size() const { return elements.size(); }
  std::optional<std::size_t> ordinal_of(const ArcDiagram& d) const;
};

// Every non-crossing chord multiset realizing the given valence sequence over
// positions 0..N-1. Deterministic ascending order.
std::vector<ChordMap> enumerate_structures(const std::vector<int>& valences_by_position);

// Structure count for one valence sequence, by interval DP over the stub line.
std::uint64_t count_structures(const std::vector<int>& valences_by_position);

// X(profile): all label arrangements (infinity pinned at position 0) crossed
// with all structures. Equal-valence labels still give distinct elements.
// Empty when the valence sum is odd. `jobs` > 1 splits the work by
// arrangement; the result is independent of the split.
DiagramSet enumerate_diagrams(const ValenceProfile& profile, int jobs = 1);

// |X(profile)| without materializing elements.
std::uint64_t count_diagrams(const ValenceProfile& profile);

// Independent re-derivation of X(profile): walk every perfect matching of the
// stubs, keep the non-crossing ones without same-position pairs, collapse.
// Refuses profiles whose stub count exceeds max_stubs.
DiagramSet brute_force_oracle(const ValenceProfile& profile, int max_stubs = 16);

}  // namespace arcdiag
