#include "arcdiag/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace arcdiag {

namespace {

std::string chord_text(const Chord& c) {
  return "{" + std::to_string(c.first) + "," + std::to_string(c.second) + "}";
}

}  // namespace

ValenceProfile ValenceProfile::make(const std::vector<int>& finite, int infinity) {
  if (finite.empty()) {
    throw std::invalid_argument("profile needs at least one finite point");
  }
  if (infinity < 0) {
    throw std::invalid_argument("profile valences must be non-negative");
  }
  for (int v : finite) {
    if (v < 0) throw std::invalid_argument("profile valences must be non-negative");
  }
  ValenceProfile p;
  p.n = static_cast<int>(finite.size());
  p.valences.reserve(finite.size() + 1);
  p.valences.push_back(infinity);
  p.valences.insert(p.valences.end(), finite.begin(), finite.end());
  return p;
}

ValenceProfile ValenceProfile::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos || text.find(':', colon + 1) != std::string::npos) {
    throw std::invalid_argument("profile must look like \"l1,...,ln:linf\": " + text);
  }
  auto parse_int = [&](const std::string& tok) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad valence \"" + tok + "\" in profile: " + text);
    }
    return std::stoi(tok);
  };
  std::vector<int> finite;
  std::stringstream left(text.substr(0, colon));
  std::string tok;
  while (std::getline(left, tok, ',')) finite.push_back(parse_int(tok));
  if (finite.empty() || text[colon - 1] == ',') {
    throw std::invalid_argument("profile must list at least one finite valence: " + text);
  }
  int infinity = parse_int(text.substr(colon + 1));
  return make(finite, infinity);
}

int ValenceProfile::valence_of_label(int label) const {
  if (label < 0 || label > n) {
    throw std::invalid_argument("label out of range: " + std::to_string(label));
  }
  return valences[static_cast<std::size_t>(label)];
}

int ValenceProfile::total() const {
  return std::accumulate(valences.begin(), valences.end(), 0);
}

bool ValenceProfile::all_even() const {
  return std::all_of(valences.begin(), valences.end(), [](int v) { return v % 2 == 0; });
}

bool ValenceProfile::all_equal() const {
  return std::all_of(valences.begin(), valences.end(),
                     [&](int v) { return v == valences.front(); });
}

bool ValenceProfile::any_equals(int v) const {
  return std::find(valences.begin(), valences.end(), v) != valences.end();
}

std::string ValenceProfile::to_string() const {
  std::string out;
  for (int i = 1; i <= n; ++i) {
    if (i > 1) out += ',';
    out += std::to_string(valences[static_cast<std::size_t>(i)]);
  }
  out += ':';
  out += std::to_string(valences[0]);
  return out;
}

nlohmann::ordered_json profile_to_json(const ValenceProfile& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (int i = 1; i <= p.n; ++i) arr.push_back(p.valences[static_cast<std::size_t>(i)]);
  arr.push_back(p.valences[0]);
  return arr;
}

int ArcDiagram::valence_at(int position) const {
  if (position < 0 || position >= point_count()) {
    throw std::invalid_argument("position out of range: " + std::to_string(position));
  }
  return profile.valence_of_label(arrangement[static_cast<std::size_t>(position)]);
}

int ArcDiagram::multiplicity(int a, int b) const {
  if (a > b) std::swap(a, b);
  auto it = chords.find({a, b});
  return it == chords.end() ? 0 : it->second;
}

int ArcDiagram::position_of_label(int label) const {
  for (int p = 0; p < point_count(); ++p) {
    if (arrangement[static_cast<std::size_t>(p)] == label) return p;
  }
  throw std::invalid_argument("label not present: " + std::to_string(label));
}

const char* fault_name(DiagramFault f) {
  switch (f) {
    case DiagramFault::none: return "none";
    case DiagramFault::shape: return "shape";
    case DiagramFault::infinity_unpinned: return "infinity_unpinned";
    case DiagramFault::label_set: return "label_set";
    case DiagramFault::chord_range: return "chord_range";
    case DiagramFault::self_chord: return "self_chord";
    case DiagramFault::bad_multiplicity: return "bad_multiplicity";
    case DiagramFault::endpoint_count: return "endpoint_count";
    case DiagramFault::crossing: return "crossing";
  }
  return "?";
}

Validity validate(const ArcDiagram& d) {
  const int n = d.profile.n;
  if (n < 1) return {DiagramFault::shape, "profile needs n >= 1"};
  if (d.profile.valences.size() != static_cast<std::size_t>(n + 1)) {
    return {DiagramFault::shape, "profile stores n+1 valences"};
  }
  for (int v : d.profile.valences) {
    if (v < 0) return {DiagramFault::shape, "negative valence in profile"};
  }
  if (d.arrangement.size() != static_cast<std::size_t>(n + 1)) {
    return {DiagramFault::shape, "arrangement must hold n+1 labels"};
  }
  if (d.arrangement[0] != 0) {
    return {DiagramFault::infinity_unpinned,
            "position 0 must hold the infinity label, found " +
                std::to_string(d.arrangement[0])};
  }
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  for (int label : d.arrangement) {
    if (label < 0 || label > n || seen[static_cast<std::size_t>(label)]) {
      return {DiagramFault::label_set,
              "arrangement must be a permutation of labels 0..n"};
    }
    seen[static_cast<std::size_t>(label)] = true;
  }
  for (const auto& [chord, mult] : d.chords) {
    if (chord.first == chord.second) {
      return {DiagramFault::self_chord, "self chord at position " +
                                            std::to_string(chord.first)};
    }
    if (chord.first < 0 || chord.second > n || chord.first > chord.second) {
      return {DiagramFault::chord_range, "chord " + chord_text(chord) +
                                             " outside positions 0.." +
                                             std::to_string(n)};
    }
    if (mult <= 0) {
      return {DiagramFault::bad_multiplicity,
              "chord " + chord_text(chord) + " has multiplicity " +
                  std::to_string(mult)};
    }
  }
  for (int p = 0; p <= n; ++p) {
    int sum = 0;
    for (const auto& [chord, mult] : d.chords) {
      if (chord.first == p || chord.second == p) sum += mult;
    }
    int want = d.valence_at(p);
    if (sum != want) {
      return {DiagramFault::endpoint_count,
              "position " + std::to_string(p) + " carries " + std::to_string(sum) +
                  " endpoints, valence requires " + std::to_string(want)};
    }
  }
  for (auto it = d.chords.begin(); it != d.chords.end(); ++it) {
    for (auto jt = std::next(it); jt != d.chords.end(); ++jt) {
      if (chords_cross(it->first, jt->first)) {
        return {DiagramFault::crossing, "chords " + chord_text(it->first) +
                                            " and " + chord_text(jt->first) +
                                            " interleave"};
      }
    }
  }
  return {};
}

std::string canonical_key(const ArcDiagram& d) {
  auto v = validate(d);
  if (!v.ok()) {
    throw std::invalid_argument(std::string("canonical_key: invalid diagram (") +
                                fault_name(v.fault) + "): " + v.detail);
  }
  return diagram_to_json(d).dump();
}

nlohmann::ordered_json diagram_to_json(const ArcDiagram& d) {
  nlohmann::ordered_json j;
  j["n"] = d.profile.n;
  j["arrangement"] = d.arrangement;
  nlohmann::ordered_json chords = nlohmann::ordered_json::array();
  for (const auto& [chord, mult] : d.chords) {
    chords.push_back({chord.first, chord.second, mult});
  }
  j["chords"] = std::move(chords);
  return j;
}

ArcDiagram diagram_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("arrangement") ||
      !j.contains("chords")) {
    throw std::invalid_argument("diagram JSON needs n, arrangement and chords");
  }
  int n = j.at("n").get<int>();
  if (n < 1) throw std::invalid_argument("diagram JSON: n must be >= 1");
  std::vector<int> arrangement = j.at("arrangement").get<std::vector<int>>();
  if (arrangement.size() != static_cast<std::size_t>(n + 1)) {
    throw std::invalid_argument("diagram JSON: arrangement must hold n+1 labels");
  }
  ChordMap chords;
  for (const auto& entry : j.at("chords")) {
    if (!entry.is_array() || entry.size() != 3) {
      throw std::invalid_argument("diagram JSON: chords are [a,b,multiplicity] triples");
    }
    int a = entry[0].get<int>();
    int b = entry[1].get<int>();
    int m = entry[2].get<int>();
    if (a < 0 || b > n || a >= b) {
      throw std::invalid_argument("diagram JSON: chord endpoints need 0 <= a < b <= n");
    }
    if (m <= 0) throw std::invalid_argument("diagram JSON: multiplicities are positive");
    chords[{a, b}] += m;
  }

  // The profile is implied: read each label's valence off its position.
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  for (int label : arrangement) {
    if (label < 0 || label > n || seen[static_cast<std::size_t>(label)]) {
      throw std::invalid_argument("diagram JSON: arrangement must be a permutation of 0..n");
    }
    seen[static_cast<std::size_t>(label)] = true;
  }
  std::vector<int> valences(static_cast<std::size_t>(n + 1), 0);
  for (int p = 0; p <= n; ++p) {
    int sum = 0;
    for (const auto& [chord, mult] : chords) {
      if (chord.first == p || chord.second == p) sum += mult;
    }
    valences[static_cast<std::size_t>(arrangement[static_cast<std::size_t>(p)])] = sum;
  }
  ValenceProfile profile;
  profile.n = n;
  profile.valences = std::move(valences);
  return ArcDiagram{std::move(profile), std::move(arrangement), std::move(chords)};
}

int SlotMatching::total_stubs() const {
  return std::accumulate(stub_counts.begin(), stub_counts.end(), 0);
}

bool chords_cross(const Chord& x, const Chord& y) {
  return (x.first < y.first && y.first < x.second && x.second < y.second) ||
         (y.first < x.first && x.first < y.second && y.second < x.second);
}

bool stub_pairs_cross(const StubPair& x, const StubPair& y) {
  return (x.first < y.first && y.first < x.second && x.second < y.second) ||
         (y.first < x.first && x.first < y.second && y.second < x.second);
}

std::vector<int> slot_targets(const ArcDiagram& d, int position) {
  const int points = d.point_count();
  std::vector<int> targets;
  for (const auto& [chord, mult] : d.chords) {
    int other;
    if (chord.first == position) other = chord.second;
    else if (chord.second == position) other = chord.first;
    else continue;
    targets.insert(targets.end(), static_cast<std::size_t>(mult), other);
  }
  std::sort(targets.begin(), targets.end(), [&](int a, int b) {
    return (position - a + points) % points < (position - b + points) % points;
  });
  return targets;
}

SlotMatching expand_to_slots(const ArcDiagram& d) {
  auto v = validate(d);
  if (!v.ok()) {
    throw std::invalid_argument(std::string("expand_to_slots: invalid diagram (") +
                                fault_name(v.fault) + "): " + v.detail);
  }
  const int points = d.point_count();
  std::vector<std::vector<int>> targets(static_cast<std::size_t>(points));
  std::vector<std::map<int, int>> first_slot(static_cast<std::size_t>(points));
  for (int p = 0; p < points; ++p) {
    targets[static_cast<std::size_t>(p)] = slot_targets(d, p);
    const auto& ts = targets[static_cast<std::size_t>(p)];
    for (int s = static_cast<int>(ts.size()) - 1; s >= 0; --s) {
      first_slot[static_cast<std::size_t>(p)][ts[static_cast<std::size_t>(s)]] = s;
    }
  }

  SlotMatching m;
  m.stub_counts.resize(static_cast<std::size_t>(points));
  for (int p = 0; p < points; ++p) {
    m.stub_counts[static_cast<std::size_t>(p)] =
        static_cast<int>(targets[static_cast<std::size_t>(p)].size());
  }
  for (const auto& [chord, mult] : d.chords) {
    int a = chord.first, b = chord.second;
    int fa = first_slot[static_cast<std::size_t>(a)].at(b);
    int fb = first_slot[static_cast<std::size_t>(b)].at(a);
    for (int t = 0; t < mult; ++t) {
      m.pairs.push_back({Stub{a, fa + t}, Stub{b, fb + mult - 1 - t}});
    }
  }
  std::sort(m.pairs.begin(), m.pairs.end());

  for (std::size_t i = 0; i < m.pairs.size(); ++i) {
    for (std::size_t k = i + 1; k < m.pairs.size(); ++k) {
      if (stub_pairs_cross(m.pairs[i], m.pairs[k])) {
        throw std::logic_error("expand_to_slots: refinement crossed itself");
      }
    }
  }
  return m;
}

ArcDiagram collapse_from_slots(const SlotMatching& m,
                               const std::vector<int>& arrangement,
                               const ValenceProfile& profile) {
  const int points = profile.n + 1;
  if (m.stub_counts.size() != static_cast<std::size_t>(points) ||
      arrangement.size() != static_cast<std::size_t>(points)) {
    throw std::invalid_argument("collapse_from_slots: matching and arrangement sizes disagree");
  }
  std::set<Stub> seen;
  auto touch = [&](const Stub& s) {
    if (s.position < 0 || s.position >= points || s.slot < 0 ||
        s.slot >= m.stub_counts[static_cast<std::size_t>(s.position)]) {
      throw std::invalid_argument("collapse_from_slots: stub out of range");
    }
    if (!seen.insert(s).second) {
      throw std::invalid_argument("collapse_from_slots: stub matched twice");
    }
  };
  ChordMap chords;
  for (const auto& [x, y] : m.pairs) {
    touch(x);
    touch(y);
    if (x.position == y.position) {
      throw std::invalid_argument("collapse_from_slots: pair joins two stubs of position " +
                                  std::to_string(x.position));
    }
    Chord c{std::min(x.position, y.position), std::max(x.position, y.position)};
    chords[c] += 1;
  }
  if (static_cast<int>(seen.size()) != m.total_stubs()) {
    throw std::invalid_argument("collapse_from_slots: matching is not perfect");
  }
  for (std::size_t i = 0; i < m.pairs.size(); ++i) {
    for (std::size_t k = i + 1; k < m.pairs.size(); ++k) {
      if (stub_pairs_cross(m.pairs[i], m.pairs[k])) {
        throw std::invalid_argument("collapse_from_slots: matching crosses itself");
      }
    }
  }
  ArcDiagram d{profile, arrangement, std::move(chords)};
  auto v = validate(d);
  if (!v.ok()) {
    throw std::invalid_argument(std::string("collapse_from_slots: result invalid (") +
                                fault_name(v.fault) + "): " + v.detail);
  }
  return d;
}

}  // namespace arcdiag
