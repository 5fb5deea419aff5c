#pragma once

#include <optional>
#include <vector>

#include "arcdiag/diagram.hpp"

#include "json.hpp"

namespace arcdiag {

// Values preserved by every generator. gcd and the component fields are
// only defined on part of the domain, hence optional.
struct InvariantRecord {
  int border = 0;
  std::optional<int> gcd;                       // no arcs -> nullopt
  std::optional<int> components;                // odd valence -> nullopt
  std::optional<std::vector<int>> component_sizes;  // sorted ascending

  bool operator==(const InvariantRecord&) const = default;
};

// Minimum multiplicity over the n+1 circularly adjacent position pairs,
// counting {0,n} as adjacent. Absent chords count as multiplicity 0.
int border_thickness(const ArcDiagram& d);

// gcd of all chord multiplicities, nullopt for the arcless diagram.
std::optional<int> gcd_multiplicity(const ArcDiagram& d);

// Closed loops traced by the right-hand rule: at each point the stub slots
// pair up adjacently (slot 2t with 2t+1), and a loop alternates between
// following an arc and hopping to the paired slot. Every valence must be
// even or no such pairing exists (throws std::invalid_argument).
// Each loop lists its stubs in traversal order starting from its least stub;
// loops are ordered by least stub. Every stub appears in exactly one loop.
std::vector<std::vector<Stub>> component_decomposition(const ArcDiagram& d);

int component_count(const ArcDiagram& d);

// Distinct positions per loop, sorted ascending.
std::vector<int> component_sizes(const ArcDiagram& d);

InvariantRecord invariant_record(const ArcDiagram& d);

nlohmann::ordered_json record_to_json(const InvariantRecord& rec);

}  // namespace arcdiag
