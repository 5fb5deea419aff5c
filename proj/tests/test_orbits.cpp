#include <set>

#include "arcdiag/orbits.hpp"

#include "doctest.h"
#include "test_support.hpp"

using namespace arcdiag;

TEST_CASE("orbits partition the set") {
  DiagramSet set = enumerate_diagrams(ValenceProfile::parse("2,2,2:2"));
  OrbitReport report = orbit_report(set);
  CHECK(report.set_size == 18);

  std::set<std::size_t> covered;
  for (const auto& orbit : report.orbits) {
    CHECK(std::is_sorted(orbit.members.begin(), orbit.members.end()));
    for (std::size_t m : orbit.members) CHECK(covered.insert(m).second);
  }
  CHECK(covered.size() == set.size());

  // orbits come out ordered by least member, and the first starts at 0
  CHECK(report.orbits.front().members.front() == 0);
}

TEST_CASE("single orbit on the transitive profiles") {
  for (const char* text : {"3,3,1,2:1", "1,2,2:1"}) {
    OrbitReport report = orbit_report(enumerate_diagrams(ValenceProfile::parse(text)));
    CHECK(report.orbits.size() == 1);
    CHECK(report.orbits.front().members.size() == report.set_size);
  }
}

TEST_CASE("valence-one transitivity check") {
  OrbitReport report = orbit_report(enumerate_diagrams(ValenceProfile::parse("1,1,1:1")));
  const auto& check = report.checks.at("valence_one_transitivity");
  CHECK(check.applicable);
  CHECK(check.pass);

  // not applicable elsewhere
  OrbitReport other = orbit_report(enumerate_diagrams(ValenceProfile::parse("1,2,2:1")));
  CHECK_FALSE(other.checks.at("valence_one_transitivity").applicable);
}

TEST_CASE("n=3 orbits are border fibers") {
  for (const char* text : {"1,1,1:1", "2,2,2:2", "1,2,2:1"}) {
    DiagramSet set = enumerate_diagrams(ValenceProfile::parse(text));
    OrbitReport report = orbit_report(set);
    const auto& check = report.checks.at("n3_border_classification");
    CHECK(check.applicable);
    CHECK(check.pass);

    std::set<int> borders;
    for (const auto& d : set.elements) borders.insert(border_thickness(d));
    CHECK(report.orbits.size() == borders.size());
  }
}

TEST_CASE("all-2 orbits are component fibers") {
  OrbitReport report = orbit_report(enumerate_diagrams(ValenceProfile::parse("2,2,2:2")));
  const auto& check = report.checks.at("all_two_components");
  CHECK(check.applicable);
  CHECK(check.pass);
  // both candidate count formulas stay visible in the detail line
  CHECK(check.detail.find("(n+1)/2") != std::string::npos);
  CHECK(check.detail.find("n/2") != std::string::npos);
  CHECK(all_two_count_readings(3) == std::pair<int, int>{1, 2});
  CHECK(all_two_count_readings(4) == std::pair<int, int>{2, 2});

  std::set<std::size_t> sizes;
  for (const auto& orbit : report.orbits) sizes.insert(orbit.members.size());
  CHECK(sizes == std::set<std::size_t>{6, 12});
}

TEST_CASE("invariants constant on orbits") {
  for (const char* text : {"1,1,1:1", "2,2,2:2", "3,3,1,2:1", "2,2,2,2:2"}) {
    OrbitReport report = orbit_report(enumerate_diagrams(ValenceProfile::parse(text)));
    CHECK(report.checks.at("invariant_constancy").pass);
    for (const auto& orbit : report.orbits) CHECK(orbit.invariants_constant);
  }
}

TEST_CASE("closure of a single element matches its orbit") {
  DiagramSet set = enumerate_diagrams(ValenceProfile::parse("2,2,2:2"));
  OrbitReport report = orbit_report(set);
  for (const auto& orbit : report.orbits) {
    std::vector<ArcDiagram> closure = orbit_of(set.elements[orbit.members.front()]);
    CHECK(closure.size() == orbit.members.size());
    for (const auto& d : closure) {
      auto ordinal = set.ordinal_of(d);
      REQUIRE(ordinal.has_value());
      CHECK(std::binary_search(orbit.members.begin(), orbit.members.end(), *ordinal));
    }
  }
}

TEST_CASE("report serialization") {
  OrbitReport report = orbit_report(enumerate_diagrams(ValenceProfile::parse("1,2,2:1")));
  nlohmann::ordered_json j = report_to_json(report);
  CHECK(j["set_size"] == 12);
  CHECK(j["orbits"].size() == 1);
  CHECK(j["orbits"][0]["size"] == 12);
  CHECK(j["orbits"][0]["invariants"]["border"] == 0);
  CHECK(j["checks"].contains("invariant_constancy"));
  CHECK(j["checks"]["n3_border_classification"]["pass"] == true);
}
