#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arcdiag/action.hpp"
#include "arcdiag/diagram.hpp"
#include "arcdiag/enumerate.hpp"

// Shared builders and golden diagrams. The golden data was transcribed by
// hand and is trusted as-is; tests compare computed results against it.

inline arcdiag::ArcDiagram make_diagram(const std::string& profile,
                                        std::vector<int> arrangement,
                                        arcdiag::ChordMap chords) {
  return arcdiag::ArcDiagram{arcdiag::ValenceProfile::parse(profile),
                             std::move(arrangement), std::move(chords)};
}

// Two-step golden: a word of two generators applied to an element of
// X(3,3,1,2:1), with both intermediate and final diagrams known.
inline arcdiag::ArcDiagram golden_two_step_initial() {
  return make_diagram("3,3,1,2:1", {0, 1, 2, 3, 4},
                      {{{0, 1}, 1}, {{1, 2}, 2}, {{2, 4}, 1}, {{3, 4}, 1}});
}

inline arcdiag::ArcDiagram golden_two_step_middle() {
  return make_diagram("3,3,1,2:1", {0, 1, 4, 3, 2},
                      {{{0, 1}, 1}, {{1, 4}, 2}, {{2, 3}, 1}, {{2, 4}, 1}});
}

inline arcdiag::ArcDiagram golden_two_step_final() {
  return make_diagram("3,3,1,2:1", {0, 4, 1, 3, 2},
                      {{{0, 1}, 1}, {{1, 4}, 1}, {{2, 3}, 1}, {{2, 4}, 2}});
}

// Fissure goldens on n = 6: a valence-1 point attached to its neighbor is
// carried to a target index, once on each side.
inline arcdiag::ArcDiagram golden_fissure_neg_input() {
  return make_diagram("1,3,4,4,1,1:4", {0, 1, 2, 3, 4, 5, 6},
                      {{{0, 1}, 1},
                       {{0, 2}, 2},
                       {{0, 3}, 1},
                       {{2, 3}, 1},
                       {{3, 4}, 2},
                       {{4, 5}, 1},
                       {{4, 6}, 1}});
}

inline arcdiag::ArcDiagram golden_fissure_neg_output() {
  return make_diagram("1,3,4,4,1,1:4", {0, 2, 3, 4, 1, 5, 6},
                      {{{0, 1}, 2},
                       {{0, 2}, 1},
                       {{0, 3}, 1},
                       {{1, 2}, 1},
                       {{2, 3}, 2},
                       {{3, 6}, 1},
                       {{4, 5}, 1}});
}

inline arcdiag::ArcDiagram golden_fissure_pos_input() {
  return make_diagram("1,4,4,4,1,1:3", {0, 1, 2, 3, 4, 5, 6},
                      {{{0, 2}, 2},
                       {{0, 3}, 1},
                       {{1, 2}, 1},
                       {{2, 3}, 1},
                       {{3, 4}, 2},
                       {{4, 5}, 1},
                       {{4, 6}, 1}});
}

inline arcdiag::ArcDiagram golden_fissure_pos_output() {
  return make_diagram("1,4,4,4,1,1:3", {0, 2, 3, 4, 5, 1, 6},
                      {{{0, 1}, 3},
                       {{1, 2}, 1},
                       {{2, 3}, 2},
                       {{2, 6}, 1},
                       {{3, 4}, 1},
                       {{3, 5}, 1}});
}

// Golden component count 4 under the right-hand rule.
inline arcdiag::ArcDiagram golden_four_loops() {
  return make_diagram("2,4,2,6:6", {0, 1, 2, 3, 4},
                      {{{0, 1}, 1},
                       {{0, 2}, 1},
                       {{0, 4}, 4},
                       {{1, 2}, 1},
                       {{2, 3}, 1},
                       {{2, 4}, 1},
                       {{3, 4}, 1}});
}

inline bool positions_adjacent(int a, int b, int points) {
  int diff = (a - b + points) % points;
  return diff == 1 || diff == points - 1;
}

inline std::vector<int> arrangement_without(const arcdiag::ArcDiagram& d, int label) {
  std::vector<int> out;
  for (int lab : d.arrangement) {
    if (lab != label) out.push_back(lab);
  }
  return out;
}

inline std::map<std::pair<int, int>, int> label_chords_excluding(
    const arcdiag::ArcDiagram& d, int label) {
  std::map<std::pair<int, int>, int> out;
  for (const auto& [chord, mult] : d.chords) {
    int la = d.arrangement[static_cast<std::size_t>(chord.first)];
    int lb = d.arrangement[static_cast<std::size_t>(chord.second)];
    if (la == label || lb == label) continue;
    if (la > lb) std::swap(la, lb);
    out[{la, lb}] += mult;
  }
  return out;
}

inline int partner_position(const arcdiag::ArcDiagram& d, int position) {
  int partner = -1;
  for (const auto& [chord, mult] : d.chords) {
    (void)mult;
    if (chord.first == position) partner = chord.second;
    if (chord.second == position) partner = chord.first;
  }
  return partner;
}

// Post-conditions of adjacency_word at a valence-1 position: the moved label
// ends next to its partner, still attached to it, everything else untouched.
inline bool adjacency_post_holds(const arcdiag::ArcDiagram& d, int p) {
  using namespace arcdiag;
  ArcDiagram r = apply_word(d, adjacency_word(d, p));
  int label = d.arrangement[static_cast<std::size_t>(p)];
  int partner = d.arrangement[static_cast<std::size_t>(partner_position(d, p))];
  int rp = r.position_of_label(label), rq = r.position_of_label(partner);
  return positions_adjacent(rp, rq, d.point_count()) &&
         r.multiplicity(std::min(rp, rq), std::max(rp, rq)) >= 1 &&
         arrangement_without(r, label) == arrangement_without(d, label) &&
         label_chords_excluding(r, label) == label_chords_excluding(d, label);
}

// Post-conditions of fissure_word: the valence-1 label lands at index k and
// the order of the other labels is unchanged.
inline bool fissure_post_holds(const arcdiag::ArcDiagram& d, arcdiag::FissureKind kind,
                               int j, int k) {
  using namespace arcdiag;
  ArcDiagram r = apply_word(d, fissure_word(d, kind, j, k));
  int label = d.arrangement[static_cast<std::size_t>(j)];
  return r.position_of_label(label) == k &&
         arrangement_without(r, label) == arrangement_without(d, label);
}

// The n = 3 border system, checked against plain enumeration. A structure is
// borderless when some circularly adjacent pair of the 4 positions is
// unconnected.
inline int n3_structure_border(const arcdiag::ChordMap& chords) {
  auto mult = [&](int a, int b) {
    auto it = chords.find({a, b});
    return it == chords.end() ? 0 : it->second;
  };
  return std::min(std::min(mult(0, 1), mult(1, 2)), std::min(mult(2, 3), mult(0, 3)));
}

inline std::set<arcdiag::ChordMap> n3_borderless_by_enumeration(int a, int b, int c,
                                                                int d) {
  std::set<arcdiag::ChordMap> out;
  for (const auto& chords : arcdiag::enumerate_structures({a, b, c, d})) {
    if (n3_structure_border(chords) == 0) out.insert(chords);
  }
  return out;
}

inline std::set<arcdiag::ChordMap> n3_borderless_by_solve(int a, int b, int c, int d) {
  using namespace arcdiag;
  std::set<ChordMap> out;
  for (N3Site site : {N3Site::p, N3Site::q, N3Site::r, N3Site::s}) {
    if (auto sol = n3_solve(a, b, c, d, site)) out.insert(n3_chords(*sol));
  }
  return out;
}
