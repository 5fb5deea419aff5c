#include "arcdiag/relations.hpp"

#include <numeric>
#include <stdexcept>

namespace arcdiag {

RelationCheck holds_on_set(const Word& lhs, const Word& rhs, const DiagramSet& set) {
  RelationCheck check;
  check.lhs = lhs;
  check.rhs = rhs;
  check.profile = set.profile;
  check.holds = true;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!(apply_word(set.elements[i], lhs) == apply_word(set.elements[i], rhs))) {
      check.holds = false;
      check.witness = i;
      break;
    }
  }
  return check;
}

DefiningRelationReport check_defining_relations(const DiagramSet& set) {
  DefiningRelationReport report;
  report.profile = set.profile;
  const int n = set.profile.n;

  auto run = [&](const Word& lhs, const Word& rhs, std::size_t& counter) {
    ++counter;
    RelationCheck check = holds_on_set(lhs, rhs, set);
    if (!check.holds) report.failures.push_back(std::move(check));
  };

  for (int p = 1; p < n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      Generator g{p, q};
      run(Word{{g, g}}, Word{}, report.involution_instances);
    }
  }

  for (int p = 1; p < n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      for (int p2 = q + 1; p2 < n; ++p2) {
        for (int q2 = p2 + 1; q2 <= n; ++q2) {
          Generator g{p, q}, h{p2, q2};
          run(Word{{g, h}}, Word{{h, g}}, report.commutation_instances);
        }
      }
    }
  }

  for (int p = 1; p < n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      for (int p2 = p; p2 < q; ++p2) {
        for (int q2 = p2 + 1; q2 <= q; ++q2) {
          Generator outer{p, q}, inner{p2, q2};
          Generator image{p + q - q2, p + q - p2};
          run(Word{{outer, inner, outer}}, Word{{image}}, report.nesting_instances);
        }
      }
    }
  }
  return report;
}

RelationCheck check_braid(const DiagramSet& set, int i) {
  const int n = set.profile.n;
  if (!(2 <= i && i <= n - 1)) {
    throw std::invalid_argument("check_braid needs 2 <= i <= n-1");
  }
  Generator lo{i - 1, i}, hi{i, i + 1};
  return holds_on_set(Word{{hi, lo, hi}}, Word{{lo, hi, lo}}, set);
}

std::uint64_t word_order_on_set(const Word& w, const DiagramSet& set) {
  std::vector<std::size_t> to(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    auto image = set.ordinal_of(apply_word(set.elements[i], w));
    if (!image) throw std::logic_error("word_order_on_set: action left the set");
    to[i] = *image;
  }
  std::uint64_t order = 1;
  std::vector<bool> seen(set.size(), false);
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = to[j];
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

Word rotation_word(int n) {
  if (n < 2) throw std::invalid_argument("rotation_word needs n >= 2");
  if (n == 2) return Word{{Generator{1, 2}}};
  return Word{{Generator{1, n}, Generator{1, n - 1}}};
}

RotationReport check_rotation_relation(const DiagramSet& set) {
  if (!set.profile.all_equal()) {
    throw std::invalid_argument("check_rotation_relation needs every valence equal");
  }
  const int n = set.profile.n;
  if (n < 2) throw std::invalid_argument("check_rotation_relation needs n >= 2");

  RotationReport report;
  report.profile = set.profile;
  report.word = rotation_word(n);
  report.bound = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n + 1);
  report.order = word_order_on_set(report.word, set);
  report.divides_bound = report.bound % report.order == 0;
  IntervalPermutation sigma = phi(report.word, n);
  report.phi_order = sigma.order();
  report.phi_full_cycle = sigma.is_full_cycle();
  return report;
}

nlohmann::ordered_json check_to_json(const RelationCheck& check) {
  nlohmann::ordered_json j;
  j["lhs"] = format_word(check.lhs);
  j["rhs"] = format_word(check.rhs);
  j["profile"] = profile_to_json(check.profile);
  j["holds"] = check.holds;
  j["witness"] = check.witness ? nlohmann::ordered_json(*check.witness)
                               : nlohmann::ordered_json(nullptr);
  j["order"] = nullptr;
  return j;
}

nlohmann::ordered_json defining_report_to_json(const DefiningRelationReport& report) {
  nlohmann::ordered_json j;
  j["profile"] = profile_to_json(report.profile);
  j["involution_instances"] = report.involution_instances;
  j["commutation_instances"] = report.commutation_instances;
  j["nesting_instances"] = report.nesting_instances;
  j["holds"] = report.all_hold();
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& failure : report.failures) {
    j["failures"].push_back(check_to_json(failure));
  }
  return j;
}

nlohmann::ordered_json rotation_report_to_json(const RotationReport& report) {
  nlohmann::ordered_json j;
  j["lhs"] = format_word(report.word);
  j["rhs"] = "";
  j["profile"] = profile_to_json(report.profile);
  j["holds"] = report.pass();
  j["witness"] = nullptr;
  j["order"] = report.order;
  j["bound"] = report.bound;
  j["divides_bound"] = report.divides_bound;
  j["phi_order"] = report.phi_order;
  j["phi_full_cycle"] = report.phi_full_cycle;
  return j;
}

}  // namespace arcdiag
