#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace arcdiag {

using Chord = std::pair<int, int>;      // position pair, first < second
using ChordMap = std::map<Chord, int>;  // chord -> multiplicity (> 0)

// Valences indexed by label: entry 0 is the point at infinity, entry i is z_i.
struct ValenceProfile {
  int n = 0;
  std::vector<int> valences;

  static ValenceProfile make(const std::vector<int>& finite, int infinity);
  static ValenceProfile parse(const std::string& text);  // "l1,...,ln:linf"

  int valence_of_label(int label) const;
  int total() const;
  bool even_sum() const { return total() % 2 == 0; }
  bool all_even() const;
  bool all_equal() const;
  bool any_equals(int v) const;
  std::string to_string() const;

  friend bool operator==(const ValenceProfile&, const ValenceProfile&) = default;
};

nlohmann::ordered_json profile_to_json(const ValenceProfile& p);  // [l1,...,ln,linf]

// A complete arc diagram: labels arranged clockwise at circle positions 0..n
// with the infinity label (0) pinned at position 0, plus a non-crossing chord
// multiset keyed by position pairs. Values are immutable once built; the
// operations below are pure functions returning fresh values.
struct ArcDiagram {
  ValenceProfile profile;
  std::vector<int> arrangement;  // arrangement[p] = label at position p
  ChordMap chords;

  int point_count() const { return profile.n + 1; }
  int valence_at(int position) const;
  int multiplicity(int a, int b) const;
  int position_of_label(int label) const;

  friend bool operator==(const ArcDiagram&, const ArcDiagram&) = default;
};

enum class DiagramFault {
  none,
  shape,
  infinity_unpinned,
  label_set,
  chord_range,
  self_chord,
  bad_multiplicity,
  endpoint_count,
  crossing,
};

struct Validity {
  DiagramFault fault = DiagramFault::none;
  std::string detail;
  bool ok() const { return fault == DiagramFault::none; }
};

const char* fault_name(DiagramFault f);

// Total check of every diagram invariant. Never throws; rejects with the
// violated invariant and a witness in `detail`.
Validity validate(const ArcDiagram& d);

// Canonical serialization; doubles as the equality and dedup key. Byte layout
// is {"n":...,"arrangement":[...],"chords":[[a,b,m],...]} with chords sorted
// ascending by (a, b). Rejects invalid diagrams.
std::string canonical_key(const ArcDiagram& d);
nlohmann::ordered_json diagram_to_json(const ArcDiagram& d);
ArcDiagram diagram_from_json(const nlohmann::json& j);

// One arc endpoint on the boundary. Slots count a point's endpoints clockwise,
// so (position, slot) orders all stubs clockwise starting at position 0.
struct Stub {
  int position = 0;
  int slot = 0;
  friend auto operator<=>(const Stub&, const Stub&) = default;
};

using StubPair = std::pair<Stub, Stub>;

// A non-crossing perfect matching of the boundary stubs, with no pair joining
// two stubs of the same position.
struct SlotMatching {
  std::vector<int> stub_counts;  // stubs per position
  std::vector<StubPair> pairs;   // each pair ordered, list sorted by first stub

  int total_stubs() const;
  friend bool operator==(const SlotMatching&, const SlotMatching&) = default;
};

bool chords_cross(const Chord& x, const Chord& y);
bool stub_pairs_cross(const StubPair& x, const StubPair& y);

// Far endpoints of the strands leaving a position, in clockwise slot order.
// Strands sort by the counterclockwise sweep distance to their far endpoint;
// that is the only per-point order a non-crossing refinement can use.
std::vector<int> slot_targets(const ArcDiagram& d, int position);

// Refines the chord multiset into the unique non-crossing stub matching.
// Parallel strands nest: the t-th slot of one endpoint block meets the
// (m-1-t)-th slot of the other. A crossing in the result would contradict
// diagram validity and raises an internal-consistency error.
SlotMatching expand_to_slots(const ArcDiagram& d);

// Inverse of expand_to_slots: forgets slots and counts multiplicities.
ArcDiagram collapse_from_slots(const SlotMatching& m,
                               const std::vector<int>& arrangement,
                               const ValenceProfile& profile);

}  // namespace arcdiag
