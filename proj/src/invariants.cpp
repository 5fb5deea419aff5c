#include "arcdiag/invariants.hpp"

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace arcdiag {

int border_thickness(const ArcDiagram& d) {
  const int points = d.point_count();
  int best = -1;
  for (int i = 0; i < points; ++i) {
    int a = i, b = (i + 1) % points;
    if (a > b) std::swap(a, b);
    int m = d.multiplicity(a, b);
    if (best < 0 || m < best) best = m;
  }
  return best;
}

std::optional<int> gcd_multiplicity(const ArcDiagram& d) {
  if (d.chords.empty()) return std::nullopt;
  int g = 0;
  for (const auto& [chord, mult] : d.chords) {
    (void)chord;
    g = std::gcd(g, mult);
  }
  return g;
}

std::vector<std::vector<Stub>> component_decomposition(const ArcDiagram& d) {
  const int points = d.point_count();
  for (int i = 0; i < points; ++i) {
    if (d.valence_at(i) % 2 != 0) {
      throw std::invalid_argument("component_decomposition: odd valence at position " +
                                  std::to_string(i));
    }
  }

  SlotMatching m = expand_to_slots(d);
  std::map<Stub, Stub> arc_partner;
  for (const auto& [x, y] : m.pairs) {
    arc_partner[x] = y;
    arc_partner[y] = x;
  }

  std::vector<std::vector<Stub>> loops;
  std::set<Stub> visited;
  for (const auto& [start, ignored] : arc_partner) {
    (void)ignored;
    if (visited.count(start)) continue;
    std::vector<Stub> loop;
    Stub cur = start;
    do {
      visited.insert(cur);
      loop.push_back(cur);
      Stub across = arc_partner.at(cur);
      visited.insert(across);
      loop.push_back(across);
      cur = Stub{across.position, across.slot ^ 1};
    } while (!(cur == start));
    loops.push_back(std::move(loop));
  }
  return loops;
}

int component_count(const ArcDiagram& d) {
  return static_cast<int>(component_decomposition(d).size());
}

std::vector<int> component_sizes(const ArcDiagram& d) {
  std::vector<int> sizes;
  for (const auto& loop : component_decomposition(d)) {
    std::set<int> positions;
    for (const Stub& s : loop) positions.insert(s.position);
    sizes.push_back(static_cast<int>(positions.size()));
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

InvariantRecord invariant_record(const ArcDiagram& d) {
  InvariantRecord rec;
  rec.border = border_thickness(d);
  rec.gcd = gcd_multiplicity(d);
  if (d.profile.all_even()) {
    auto sizes = component_sizes(d);
    rec.components = static_cast<int>(sizes.size());
    rec.component_sizes = std::move(sizes);
  }
  return rec;
}

nlohmann::ordered_json record_to_json(const InvariantRecord& rec) {
  nlohmann::ordered_json j;
  j["border"] = rec.border;
  j["gcd"] = rec.gcd ? nlohmann::ordered_json(*rec.gcd) : nlohmann::ordered_json(nullptr);
  j["components"] =
      rec.components ? nlohmann::ordered_json(*rec.components) : nlohmann::ordered_json(nullptr);
  j["component_sizes"] = rec.component_sizes
                             ? nlohmann::ordered_json(*rec.component_sizes)
                             : nlohmann::ordered_json(nullptr);
  return j;
}

}  // namespace arcdiag
