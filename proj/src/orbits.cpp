#include "arcdiag/orbits.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "arcdiag/action.hpp"

namespace arcdiag {

namespace {

// Only border, gcd and the component count are claimed constant on orbits;
// the component size multiset genuinely varies (X(2,2,2,2,2,2) witnesses it).
bool same_invariants(const InvariantRecord& a, const InvariantRecord& b) {
  return a.border == b.border && a.gcd == b.gcd && a.components == b.components;
}

std::vector<Generator> all_generators(int n) {
  std::vector<Generator> gens;
  for (int p = 1; p < n; ++p) {
    for (int q = p + 1; q <= n; ++q) gens.push_back(Generator{p, q});
  }
  return gens;
}

StructureCheckResult check_invariant_constancy(const OrbitReport& report) {
  StructureCheckResult res;
  res.applicable = true;
  res.pass = true;
  for (std::size_t i = 0; i < report.orbits.size(); ++i) {
    if (!report.orbits[i].invariants_constant) {
      res.pass = false;
      res.detail = "orbit with least member " +
                   std::to_string(report.orbits[i].members.front()) +
                   " has non-constant invariants";
      return res;
    }
  }
  res.detail = std::to_string(report.orbits.size()) +
               " orbits, invariants constant on each";
  return res;
}

StructureCheckResult check_n3_border(const DiagramSet& set, const OrbitReport& report) {
  StructureCheckResult res;
  if (set.profile.n != 3) {
    res.detail = "needs n == 3";
    return res;
  }
  res.applicable = true;
  std::map<int, std::set<std::size_t>> orbits_of_border;
  for (std::size_t i = 0; i < report.orbits.size(); ++i) {
    for (std::size_t member : report.orbits[i].members) {
      orbits_of_border[border_thickness(set.elements[member])].insert(i);
    }
  }
  for (const auto& [border, orbit_ids] : orbits_of_border) {
    if (orbit_ids.size() != 1) {
      res.pass = false;
      res.detail = "border " + std::to_string(border) + " spreads over " +
                   std::to_string(orbit_ids.size()) + " orbits";
      return res;
    }
  }
  res.pass = report.orbits.size() == orbits_of_border.size();
  std::string values;
  for (const auto& [border, ignored] : orbits_of_border) {
    (void)ignored;
    if (!values.empty()) values += ",";
    values += std::to_string(border);
  }
  res.detail = res.pass ? "orbits are exactly the border fibers {" + values + "}"
                        : "an orbit mixes border values";
  return res;
}

StructureCheckResult check_valence_one(const DiagramSet& set, const OrbitReport& report) {
  StructureCheckResult res;
  if (!(set.profile.all_equal() && set.profile.any_equals(1))) {
    res.detail = "needs every valence equal to 1";
    return res;
  }
  res.applicable = true;
  res.pass = report.orbits.size() == 1;
  res.detail = res.pass ? "single orbit of size " + std::to_string(set.size())
                        : std::to_string(report.orbits.size()) + " orbits instead of 1";
  return res;
}

StructureCheckResult check_all_two(const DiagramSet& set, const OrbitReport& report) {
  StructureCheckResult res;
  if (!(set.profile.all_equal() && set.profile.any_equals(2))) {
    res.detail = "needs every valence equal to 2";
    return res;
  }
  res.applicable = true;

  std::map<int, std::set<std::size_t>> orbits_of_count;
  for (std::size_t i = 0; i < report.orbits.size(); ++i) {
    for (std::size_t member : report.orbits[i].members) {
      orbits_of_count[component_count(set.elements[member])].insert(i);
    }
  }
  for (const auto& [count, orbit_ids] : orbits_of_count) {
    if (orbit_ids.size() != 1) {
      res.pass = false;
      res.detail = "component count " + std::to_string(count) + " spreads over " +
                   std::to_string(orbit_ids.size()) + " orbits";
      return res;
    }
  }
  if (report.orbits.size() != orbits_of_count.size()) {
    res.pass = false;
    res.detail = "an orbit mixes component counts";
    return res;
  }

  const auto [half_n, half_n1] = all_two_count_readings(set.profile.n);
  const int max_count = orbits_of_count.rbegin()->first;
  bool contiguous = orbits_of_count.begin()->first == 1 &&
                    static_cast<int>(orbits_of_count.size()) == max_count;
  res.pass = contiguous && max_count == half_n1;
  res.detail = "component counts 1.." + std::to_string(max_count) +
               ", one orbit each; (n+1)/2 rounds to " + std::to_string(half_n1) +
               ", n/2 rounds to " + std::to_string(half_n);
  if (!contiguous) res.detail = "component counts not contiguous from 1";
  return res;
}

}  // namespace

OrbitReport orbit_report(const DiagramSet& set) {
  OrbitReport report;
  report.profile = set.profile;
  report.set_size = set.size();

  const auto gens = all_generators(set.profile.n);
  std::vector<bool> seen(set.size(), false);
  for (std::size_t seed = 0; seed < set.size(); ++seed) {
    if (seen[seed]) continue;
    OrbitSummary orbit;
    std::deque<std::size_t> queue{seed};
    seen[seed] = true;
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      orbit.members.push_back(cur);
      for (const auto& g : gens) {
        auto child = set.ordinal_of(apply_generator(set.elements[cur], g));
        if (!child) throw std::logic_error("orbit_report: action left the set");
        if (!seen[*child]) {
          seen[*child] = true;
          queue.push_back(*child);
        }
      }
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    orbit.invariants = invariant_record(set.elements[orbit.members.front()]);
    for (std::size_t member : orbit.members) {
      if (!same_invariants(invariant_record(set.elements[member]), orbit.invariants)) {
        orbit.invariants_constant = false;
        break;
      }
    }
    report.orbits.push_back(std::move(orbit));
  }

  report.checks["invariant_constancy"] = check_invariant_constancy(report);
  report.checks["n3_border_classification"] = check_n3_border(set, report);
  report.checks["valence_one_transitivity"] = check_valence_one(set, report);
  report.checks["all_two_components"] = check_all_two(set, report);
  return report;
}

std::vector<ArcDiagram> orbit_of(const ArcDiagram& d) {
  auto v = validate(d);
  if (!v.ok()) throw std::invalid_argument("orbit_of: invalid diagram: " + v.detail);

  const auto gens = all_generators(d.profile.n);
  std::map<std::string, ArcDiagram> found;
  std::deque<ArcDiagram> queue{d};
  found.emplace(canonical_key(d), d);
  while (!queue.empty()) {
    ArcDiagram cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      ArcDiagram child = apply_generator(cur, g);
      std::string key = canonical_key(child);
      if (found.emplace(key, child).second) queue.push_back(std::move(child));
    }
  }

  std::vector<ArcDiagram> orbit;
  orbit.reserve(found.size());
  for (auto& [key, diagram] : found) {
    (void)key;
    orbit.push_back(std::move(diagram));
  }
  return orbit;
}

std::pair<int, int> all_two_count_readings(int n) {
  return {n / 2, (n + 1) / 2};
}

nlohmann::ordered_json report_to_json(const OrbitReport& report) {
  nlohmann::ordered_json j;
  j["profile"] = profile_to_json(report.profile);
  j["set_size"] = report.set_size;
  j["orbits"] = nlohmann::ordered_json::array();
  for (const auto& orbit : report.orbits) {
    nlohmann::ordered_json o;
    o["size"] = orbit.members.size();
    o["members"] = orbit.members;
    o["invariants"] = record_to_json(orbit.invariants);
    o["invariants_constant"] = orbit.invariants_constant;
    j["orbits"].push_back(std::move(o));
  }
  j["checks"] = nlohmann::ordered_json::object();
  for (const auto& [name, check] : report.checks) {
    nlohmann::ordered_json c;
    c["applicable"] = check.applicable;
    c["pass"] = check.pass;
    c["detail"] = check.detail;
    j["checks"][name] = std::move(c);
  }
  return j;
}

}  // namespace arcdiag
