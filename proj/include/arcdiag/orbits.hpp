#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arcdiag/enumerate.hpp"
#include "arcdiag/invariants.hpp"

#include "json.hpp"

namespace arcdiag {

struct OrbitSummary {
  std::vector<std::size_t> members;  // ordinals into the ambient set, ascending
  InvariantRecord invariants;        // of the least member
  bool invariants_constant = true;   // border, gcd, component count across members
};

struct StructureCheckResult {
  bool applicable = false;
  bool pass = false;
  std::string detail;
};

struct OrbitReport {
  ValenceProfile profile;
  std::size_t set_size = 0;
  std::vector<OrbitSummary> orbits;  // ordered by least member
  std::map<std::string, StructureCheckResult> checks;
};

// Partition of the whole set under the generator action, found by breadth
// first search seeded in ordinal order, plus the structural checks that
// apply to this profile:
//   invariant_constancy       every profile
//   n3_border_classification  n == 3: orbits are exactly the border fibers
//   valence_one_transitivity  all valences 1: a single orbit
//   all_two_components        all valences 2: orbits are the component-count
//                             fibers and the counts run 1..max contiguously
OrbitReport orbit_report(const DiagramSet& set);

// Closure of one diagram under every generator, sorted by canonical key.
std::vector<ArcDiagram> orbit_of(const ArcDiagram& d);

// The two candidate formulas for the orbit count of the all-2 profile:
// n/2 and (n+1)/2, both rounded down. Breadth first search sides with the
// second; both are reported so the discrepancy stays visible.
std::pair<int, int> all_two_count_readings(int n);

nlohmann::ordered_json report_to_json(const OrbitReport& report);

}  // namespace arcdiag
