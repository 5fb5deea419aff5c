#include "arcdiag/action.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace arcdiag {

namespace {

[[noreturn]] void bad_word(const std::string& text, const std::string& why) {
  throw std::invalid_argument("bad word \"" + text + "\": " + why);
}

int find_partner(const ArcDiagram& d, int position) {
  int partner = -1;
  for (const auto& [chord, mult] : d.chords) {
    (void)mult;
    if (chord.first == position) partner = chord.second;
    else if (chord.second == position) partner = chord.first;
  }
  if (partner < 0) throw std::logic_error("valence-1 point without a chord");
  return partner;
}

bool circularly_adjacent(int a, int b, int points) {
  int diff = (a - b + points) % points;
  return diff == 1 || diff == points - 1;
}

}  // namespace

Generator make_generator(int p, int q, int n) {
  if (!(1 <= p && p < q && q <= n)) {
    throw std::invalid_argument("generator s(" + std::to_string(p) + "," +
                                std::to_string(q) + ") needs 1 <= p < q <= " +
                                std::to_string(n));
  }
  return Generator{p, q};
}

Word parse_word(const std::string& text, int n) {
  Word w;
  std::stringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 6 || tok.substr(0, 2) != "s(" || tok.back() != ')') {
      bad_word(text, "factor \"" + tok + "\" is not s(p,q)");
    }
    std::string body = tok.substr(2, tok.size() - 3);
    auto comma = body.find(',');
    if (comma == std::string::npos) bad_word(text, "factor \"" + tok + "\" is not s(p,q)");
    std::string ps = body.substr(0, comma), qs = body.substr(comma + 1);
    if (ps.empty() || qs.empty() ||
        ps.find_first_not_of("0123456789") != std::string::npos ||
        qs.find_first_not_of("0123456789") != std::string::npos) {
      bad_word(text, "factor \"" + tok + "\" is not s(p,q)");
    }
    int p = std::stoi(ps), q = std::stoi(qs);
    if (!(1 <= p && p < q && q <= n)) {
      bad_word(text, "factor \"" + tok + "\" needs 1 <= p < q <= " + std::to_string(n));
    }
    w.factors.push_back(Generator{p, q});
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  for (const auto& g : w.factors) {
    if (!out.empty()) out += ' ';
    out += "s(" + std::to_string(g.p) + "," + std::to_string(g.q) + ")";
  }
  return out;
}

Word concat(const Word& first_applied_last, const Word& first_applied_first) {
  Word w = first_applied_last;
  w.factors.insert(w.factors.end(), first_applied_first.factors.begin(),
                   first_applied_first.factors.end());
  return w;
}

Word reversed(const Word& w) {
  Word out = w;
  std::reverse(out.factors.begin(), out.factors.end());
  return out;
}

IntervalPermutation IntervalPermutation::identity(int n) {
  IntervalPermutation perm;
  perm.to.resize(static_cast<std::size_t>(n + 1));
  std::iota(perm.to.begin(), perm.to.end(), 0);
  return perm;
}

IntervalPermutation IntervalPermutation::reversal(int p, int q, int n) {
  make_generator(p, q, n);
  IntervalPermutation perm = identity(n);
  for (int i = p; i <= q; ++i) perm.to[static_cast<std::size_t>(i)] = p + q - i;
  return perm;
}

IntervalPermutation IntervalPermutation::after(const IntervalPermutation& first) const {
  if (to.size() != first.to.size()) {
    throw std::invalid_argument("composing permutations of different degree");
  }
  IntervalPermutation out;
  out.to.resize(to.size());
  for (std::size_t i = 0; i < to.size(); ++i) {
    out.to[i] = to[static_cast<std::size_t>(first.to[i])];
  }
  return out;
}

std::vector<int> IntervalPermutation::apply_to_arrangement(
    const std::vector<int>& arrangement) const {
  if (arrangement.size() != to.size()) {
    throw std::invalid_argument("permutation degree does not match arrangement");
  }
  std::vector<int> out(arrangement.size());
  for (std::size_t i = 0; i < arrangement.size(); ++i) {
    out[static_cast<std::size_t>(to[i])] = arrangement[i];
  }
  return out;
}

std::uint64_t IntervalPermutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(to.size(), false);
  for (std::size_t i = 1; i < to.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(to[j]);
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

bool IntervalPermutation::is_full_cycle() const {
  if (n() == 0) return false;
  std::size_t j = 1;
  std::size_t len = 0;
  do {
    j = static_cast<std::size_t>(to[j]);
    ++len;
  } while (j != 1);
  return len == static_cast<std::size_t>(n());
}

IntervalPermutation phi(const Word& w, int n) {
  IntervalPermutation acc = IntervalPermutation::identity(n);
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
    acc = IntervalPermutation::reversal(it->p, it->q, n).after(acc);
  }
  return acc;
}

ArcDiagram apply_generator(const ArcDiagram& d, const Generator& g) {
  const int n = d.profile.n;
  make_generator(g.p, g.q, n);
  const int points = d.point_count();
  auto inside = [&](int x) { return g.p <= x && x <= g.q; };

  ChordMap chords;
  std::vector<int> cross_inner(static_cast<std::size_t>(points), 0);
  std::vector<int> cross_outer(static_cast<std::size_t>(points), 0);
  for (const auto& [chord, mult] : d.chords) {
    bool a_in = inside(chord.first), b_in = inside(chord.second);
    if (a_in && b_in) {
      int a = g.p + g.q - chord.first;
      int b = g.p + g.q - chord.second;
      if (a > b) std::swap(a, b);
      chords[{a, b}] += mult;
    } else if (!a_in && !b_in) {
      chords[chord] += mult;
    } else {
      cross_inner[static_cast<std::size_t>(a_in ? chord.first : chord.second)] += mult;
      cross_outer[static_cast<std::size_t>(a_in ? chord.second : chord.first)] += mult;
    }
  }

  // Reflected inner endpoints in their original clockwise order, against
  // outer endpoints clockwise from q+1. Pairing them index by index restores
  // the severed strands with their crossing order along the interval boundary
  // reversed, which is the unique non-crossing completion.
  std::vector<int> inner_seq, outer_seq;
  for (int x = g.p; x <= g.q; ++x) {
    inner_seq.insert(inner_seq.end(),
                     static_cast<std::size_t>(cross_inner[static_cast<std::size_t>(x)]),
                     g.p + g.q - x);
  }
  for (int y = (g.q + 1) % points; y != g.p; y = (y + 1) % points) {
    outer_seq.insert(outer_seq.end(),
                     static_cast<std::size_t>(cross_outer[static_cast<std::size_t>(y)]),
                     y);
  }
  if (inner_seq.size() != outer_seq.size()) {
    throw std::logic_error("apply_generator: crossing strand counts disagree");
  }
  for (std::size_t i = 0; i < inner_seq.size(); ++i) {
    int a = inner_seq[i], b = outer_seq[i];
    if (a > b) std::swap(a, b);
    chords[{a, b}] += 1;
  }

  ArcDiagram out{d.profile, d.arrangement, std::move(chords)};
  std::reverse(out.arrangement.begin() + g.p, out.arrangement.begin() + g.q + 1);
  auto v = validate(out);
  if (!v.ok()) {
    throw std::logic_error(std::string("apply_generator: result invalid (") +
                           fault_name(v.fault) + "): " + v.detail);
  }
  return out;
}

ArcDiagram apply_word(const ArcDiagram& d, const Word& w) {
  ArcDiagram out = d;
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
    out = apply_generator(out, *it);
  }
  return out;
}

Word swap_word(int i_pos, int j_pos, int n) {
  if (!(1 <= i_pos && i_pos < j_pos && j_pos <= n)) {
    throw std::invalid_argument("swap_word needs 1 <= i < j <= n");
  }
  if (j_pos == i_pos + 1) return Word{{Generator{i_pos, j_pos}}};
  return Word{{Generator{i_pos + 1, j_pos}, Generator{i_pos, i_pos + 1},
               Generator{i_pos + 1, j_pos}}};
}

Word adjacency_word(const ArcDiagram& d, int i_pos) {
  const int n = d.profile.n;
  if (n < 3) throw std::invalid_argument("adjacency_word needs n >= 3");
  if (i_pos < 1 || i_pos > n) {
    throw std::invalid_argument("adjacency_word: position out of range");
  }
  if (d.valence_at(i_pos) != 1) {
    throw std::invalid_argument("adjacency_word: position " + std::to_string(i_pos) +
                                " does not hold a valence-1 point");
  }
  auto v = validate(d);
  if (!v.ok()) throw std::invalid_argument("adjacency_word: invalid diagram: " + v.detail);

  const int j = i_pos;
  const int k = find_partner(d, j);
  if (circularly_adjacent(j, k, d.point_count())) return Word{};

  // Reversing up to the partner parks the point beside it; the second factor
  // unscrambles the displaced stretch. The first factor applied is the long
  // one (rightmost in the word).
  if (j < k) {
    if (k - 2 == j) return Word{{Generator{j, k - 1}}};
    return Word{{Generator{j, k - 2}, Generator{j, k - 1}}};
  }
  if (k + 2 == j) return Word{{Generator{k + 1, j}}};
  return Word{{Generator{k + 2, j}, Generator{k + 1, j}}};
}

Word fissure_word(const ArcDiagram& d, FissureKind kind, int j_pos, int k_pos) {
  const int n = d.profile.n;
  const int points = n + 1;
  if (j_pos < 1 || j_pos > n || k_pos < 1 || k_pos > n) {
    throw std::invalid_argument("fissure_word: positions must lie in 1..n");
  }
  if (d.valence_at(j_pos) != 1) {
    throw std::invalid_argument("fissure_word: position " + std::to_string(j_pos) +
                                " does not hold a valence-1 point");
  }
  auto v = validate(d);
  if (!v.ok()) throw std::invalid_argument("fissure_word: invalid diagram: " + v.detail);

  const int partner = find_partner(d, j_pos);
  const int wanted = kind == FissureKind::negative ? (j_pos - 1 + points) % points
                                                   : (j_pos + 1) % points;
  if (partner != wanted) {
    throw std::invalid_argument("fissure_word: point at " + std::to_string(j_pos) +
                                " is not attached to its " +
                                (kind == FissureKind::negative ? "counterclockwise"
                                                               : "clockwise") +
                                " neighbor");
  }

  const int j = j_pos, k = k_pos;
  if (k == j) return Word{};
  if (kind == FissureKind::negative) {
    if (k > j) {
      // carry first (rightmost factor), then restore the displaced block
      if (k == j + 1) return Word{{Generator{j, k}}};
      return Word{{Generator{j, k - 1}, Generator{j, k}}};
    }
    // downward moves mirror the upward words: pre-reverse, then carry
    if (k == j - 1) return Word{{Generator{k, j}}};
    return Word{{Generator{k, j}, Generator{k, j - 1}}};
  }
  if (k > j) {
    if (k == j + 1) return Word{{Generator{j, k}}};
    return Word{{Generator{j, k}, Generator{j + 1, k}}};
  }
  if (k == j - 1) return Word{{Generator{k, j}}};
  return Word{{Generator{k + 1, j}, Generator{k, j}}};
}

std::optional<N3Solution> n3_solve(int a, int b, int c, int d, N3Site zero_site) {
  if (a < 0 || b < 0 || c < 0 || d < 0) {
    throw std::invalid_argument("n3_solve: valences must be non-negative");
  }
  const int diff = (b + d) - (a + c);
  if (diff % 2 != 0) return std::nullopt;  // middle arc would be half-integral

  N3Solution sol;
  sol.m = std::abs(diff) / 2;
  sol.orientation = diff < 0 ? MiddleArc::ac : MiddleArc::bd;

  // Peel the middle arc off the valences; the rest is the cyclic border system.
  const int mb = diff > 0 ? sol.m : 0;
  const int ma = diff < 0 ? sol.m : 0;
  const int ap = a - ma, bp = b - mb, cp = c - ma, dp = d - mb;
  if (ap < 0 || bp < 0 || cp < 0 || dp < 0) return std::nullopt;

  // p+q = bp, q+r = cp, r+s = dp, s+p = ap; the four-term alternating sum
  // closes automatically once the middle arc is fixed.
  switch (zero_site) {
    case N3Site::p:
      sol.p = 0;
      sol.q = bp;
      sol.r = cp - sol.q;
      sol.s = dp - sol.r;
      break;
    case N3Site::q:
      sol.q = 0;
      sol.p = bp;
      sol.s = ap - sol.p;
      sol.r = dp - sol.s;
      break;
    case N3Site::r:
      sol.r = 0;
      sol.q = cp;
      sol.p = bp - sol.q;
      sol.s = ap - sol.p;
      break;
    case N3Site::s:
      sol.s = 0;
      sol.p = ap;
      sol.q = bp - sol.p;
      sol.r = cp - sol.q;
      break;
  }
  if (sol.p < 0 || sol.q < 0 || sol.r < 0 || sol.s < 0) return std::nullopt;
  return sol;
}

ChordMap n3_chords(const N3Solution& sol) {
  ChordMap chords;
  if (sol.p > 0) chords[{0, 1}] = sol.p;
  if (sol.q > 0) chords[{1, 2}] = sol.q;
  if (sol.r > 0) chords[{2, 3}] = sol.r;
  if (sol.s > 0) chords[{0, 3}] = sol.s;
  if (sol.m > 0) {
    if (sol.orientation == MiddleArc::bd) chords[{1, 3}] += sol.m;
    else chords[{0, 2}] += sol.m;
  }
  return chords;
}

}  // namespace arcdiag
