#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcdiag/diagram.hpp"

namespace arcdiag {

// One generator s(p,q), reversing the interval of positions p..q.
struct Generator {
  int p = 0;
  int q = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
};

Generator make_generator(int p, int q, int n);

// A word in the generators. Factors are stored left to right as written and
// applied right to left: the last factor acts first.
struct Word {
  std::vector<Generator> factors;
  friend bool operator==(const Word&, const Word&) = default;
};

// Text form: "s(p,q)" factors separated by whitespace; "" is the empty word.
Word parse_word(const std::string& text, int n);
std::string format_word(const Word& w);
Word concat(const Word& first_applied_last, const Word& first_applied_first);
Word reversed(const Word& w);

// Where each position's content ends up. to[0] is always 0.
struct IntervalPermutation {
  std::vector<int> to;

  int n() const { return static_cast<int>(to.size()) - 1; }
  static IntervalPermutation identity(int n);
  static IntervalPermutation reversal(int p, int q, int n);
  IntervalPermutation after(const IntervalPermutation& first) const;
  std::vector<int> apply_to_arrangement(const std::vector<int>& arrangement) const;
  std::uint64_t order() const;
  bool is_full_cycle() const;  // one cycle through all of 1..n
  friend bool operator==(const IntervalPermutation&, const IntervalPermutation&) = default;
};

// The interval-reversal image of a word in the symmetric group.
IntervalPermutation phi(const Word& w, int n);

// The generator action: reverse the labels at positions p..q, reflect the
// chords lying inside the interval, keep the outside, and reconnect the
// strands that cross the interval boundary. The crossing strands reattach in
// the unique non-crossing way: inner endpoints, reflected and listed
// clockwise, pair in order with the outer endpoints listed clockwise from
// position q+1.
ArcDiagram apply_generator(const ArcDiagram& d, const Generator& g);
ArcDiagram apply_word(const ArcDiagram& d, const Word& w);

// Word swapping the labels at two positions of equal valence while fixing
// every chord. Positions need 1 <= i < j <= n.
Word swap_word(int i_pos, int j_pos, int n);

// Word sliding the valence-1 point at i_pos next to its unique partner while
// preserving the clockwise order of everything else. Empty when already
// adjacent (including across position 0).
Word adjacency_word(const ArcDiagram& d, int i_pos);

enum class FissureKind { negative, positive };

// Word carrying the valence-1 point at j_pos to index k_pos while preserving
// the order of the other points. Requires the point to be attached to its
// immediate neighbor on the side named by `kind` (negative: counterclockwise,
// positive: clockwise). k_pos == j_pos gives the empty word.
Word fissure_word(const ArcDiagram& d, FissureKind kind, int j_pos, int k_pos);

// --- three-point diagrams ---------------------------------------------------
//
// With valences a (infinity, position 0) and b, c, d clockwise, a diagram is
// determined by border multiplicities p = {0,1}, q = {1,2}, r = {2,3},
// s = {0,3} and one middle arc m joining either positions 1,3 or 0,2. The
// side m joins follows the sign of (b+d) - (a+c); m = 0 when they tie and the
// orientation flag is then meaningless.

enum class MiddleArc { bd, ac };

struct N3Solution {
  int m = 0, p = 0, q = 0, r = 0, s = 0;
  MiddleArc orientation = MiddleArc::bd;
  friend bool operator==(const N3Solution&, const N3Solution&) = default;
};

enum class N3Site { p, q, r, s };

// Solve the valence equations with the named border multiplicity pinned to
// zero. Empty when the system has no non-negative integer solution.
std::optional<N3Solution> n3_solve(int a, int b, int c, int d, N3Site zero_site);

// The chord multiset a solution describes, on positions 0..3.
ChordMap n3_chords(const N3Solution& sol);

}  // namespace arcdiag
