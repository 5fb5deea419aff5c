#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arcdiag/action.hpp"
#include "arcdiag/enumerate.hpp"

#include "json.hpp"

namespace arcdiag {

// Relations are checked extensionally: two words are equal when they act
// identically on every element of the set. No word rewriting happens here.
struct RelationCheck {
  Word lhs;
  Word rhs;
  ValenceProfile profile;
  bool holds = false;
  std::optional<std::size_t> witness;  // least ordinal where the actions differ
};

RelationCheck holds_on_set(const Word& lhs, const Word& rhs, const DiagramSet& set);

struct DefiningRelationReport {
  ValenceProfile profile;
  std::size_t involution_instances = 0;
  std::size_t commutation_instances = 0;
  std::size_t nesting_instances = 0;
  std::vector<RelationCheck> failures;
  bool all_hold() const { return failures.empty(); }
};

// Soundness audit of the action: every involution instance, every disjoint
// commutation instance, and every nesting instance, on every element.
DefiningRelationReport check_defining_relations(const DiagramSet& set);

// s(i,i+1) s(i-1,i) s(i,i+1) against s(i-1,i) s(i,i+1) s(i-1,i); needs
// 2 <= i <= n-1.
RelationCheck check_braid(const DiagramSet& set, int i);

// Least m >= 1 with w^m acting as the identity on every element: the lcm of
// the cycle lengths of the induced permutation. The empty set gives 1.
std::uint64_t word_order_on_set(const Word& w, const DiagramSet& set);

// s(1,n) s(1,n-1), the word whose action rotates the finite labels one
// position clockwise. The degenerate n = 2 drops the trailing trivial factor.
Word rotation_word(int n);

struct RotationReport {
  ValenceProfile profile;
  Word word;
  std::uint64_t order = 1;       // of the action on X(profile)
  std::uint64_t bound = 0;       // n(n+1)
  bool divides_bound = false;
  std::uint64_t phi_order = 0;   // of the induced label permutation
  bool phi_full_cycle = false;   // permutes 1..n in a single cycle
  bool pass() const { return divides_bound && phi_full_cycle; }
};

// Needs every valence equal and n >= 2. Reports the exact order of the
// rotation word on the set, whether it divides n(n+1), and whether the
// induced label permutation is the expected n-cycle.
RotationReport check_rotation_relation(const DiagramSet& set);

nlohmann::ordered_json check_to_json(const RelationCheck& check);
nlohmann::ordered_json defining_report_to_json(const DefiningRelationReport& report);
nlohmann::ordered_json rotation_report_to_json(const RotationReport& report);

}  // namespace arcdiag
