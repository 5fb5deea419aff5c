#include "arcdiag/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace arcdiag {

namespace {

std::vector<int> stub_positions(const std::vector<int>& valences_by_position) {
  std::vector<int> pos;
  for (std::size_t p = 0; p < valences_by_position.size(); ++p) {
    if (valences_by_position[p] < 0) {
      throw std::invalid_argument("negative valence in sequence");
    }
    pos.insert(pos.end(), static_cast<std::size_t>(valences_by_position[p]),
               static_cast<int>(p));
  }
  return pos;
}

ChordMap collapse_pairs(const std::vector<int>& pos,
                        const std::vector<std::pair<int, int>>& pairs) {
  ChordMap chords;
  for (auto [i, k] : pairs) {
    int a = pos[static_cast<std::size_t>(i)];
    int b = pos[static_cast<std::size_t>(k)];
    if (a > b) std::swap(a, b);
    chords[{a, b}] += 1;
  }
  return chords;
}

std::vector<std::vector<int>> all_arrangements(int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    std::vector<int> arr;
    arr.reserve(static_cast<std::size_t>(n + 1));
    arr.push_back(0);
    arr.insert(arr.end(), labels.begin(), labels.end());
    out.push_back(std::move(arr));
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

std::vector<int> valence_sequence(const ValenceProfile& profile,
                                  const std::vector<int>& arrangement) {
  std::vector<int> v;
  v.reserve(arrangement.size());
  for (int label : arrangement) v.push_back(profile.valence_of_label(label));
  return v;
}

void finish(DiagramSet& set) {
  std::vector<std::size_t> order(set.elements.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return set.keys[a] < set.keys[b];
  });
  std::vector<ArcDiagram> elements;
  std::vector<std::string> keys;
  elements.reserve(order.size());
  keys.reserve(order.size());
  for (std::size_t i : order) {
    elements.push_back(std::move(set.elements[i]));
    keys.push_back(std::move(set.keys[i]));
  }
  set.elements = std::move(elements);
  set.keys = std::move(keys);
  set.index.clear();
  set.index.reserve(set.keys.size());
  for (std::size_t i = 0; i < set.keys.size(); ++i) {
    if (!set.index.emplace(set.keys[i], i).second) {
      throw std::logic_error("duplicate canonical key in diagram set");
    }
  }
}

}  // namespace

std::optional<std::size_t> DiagramSet::ordinal_of(const ArcDiagram& d) const {
  auto it = index.find(canonical_key(d));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::vector<ChordMap> enumerate_structures(const std::vector<int>& valences_by_position) {
  const std::vector<int> pos = stub_positions(valences_by_position);
  const int total = static_cast<int>(pos.size());
  std::vector<ChordMap> out;
  if (total % 2 != 0) return out;

  std::set<ChordMap> dedup;
  std::vector<std::pair<int, int>> current;
  // Match stub lo inside [lo, hi]; regions stay contiguous because a chord
  // seals off everything it encloses.
  std::function<void(int, int, const std::function<void()>&)> rec =
      [&](int lo, int hi, const std::function<void()>& done) {
        if (lo > hi) {
          done();
          return;
        }
        for (int k = lo + 1; k <= hi; k += 2) {
          if (pos[static_cast<std::size_t>(k)] == pos[static_cast<std::size_t>(lo)]) continue;
          current.push_back({lo, k});
          rec(lo + 1, k - 1, [&] { rec(k + 1, hi, done); });
          current.pop_back();
        }
      };
  rec(0, total - 1, [&] { dedup.insert(collapse_pairs(pos, current)); });
  out.assign(dedup.begin(), dedup.end());
  return out;
}

std::uint64_t count_structures(const std::vector<int>& valences_by_position) {
  const std::vector<int> pos = stub_positions(valences_by_position);
  const int total = static_cast<int>(pos.size());
  if (total % 2 != 0) return 0;
  if (total == 0) return 1;

  std::map<std::pair<int, int>, std::uint64_t> memo;
  std::function<std::uint64_t(int, int)> cnt = [&](int lo, int hi) -> std::uint64_t {
    if (lo > hi) return 1;
    auto it = memo.find({lo, hi});
    if (it != memo.end()) return it->second;
    std::uint64_t sum = 0;
    for (int k = lo + 1; k <= hi; k += 2) {
      if (pos[static_cast<std::size_t>(k)] == pos[static_cast<std::size_t>(lo)]) continue;
      sum += cnt(lo + 1, k - 1) * cnt(k + 1, hi);
    }
    memo[{lo, hi}] = sum;
    return sum;
  };
  return cnt(0, total - 1);
}

DiagramSet enumerate_diagrams(const ValenceProfile& profile, int jobs) {
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  DiagramSet set;
  set.profile = profile;
  if (!profile.even_sum()) {
    finish(set);
    return set;
  }

  const auto arrangements = all_arrangements(profile.n);

  // Structures depend only on the valence sequence, so compute each distinct
  // sequence once.
  std::map<std::vector<int>, std::vector<ChordMap>> structures;
  for (const auto& arr : arrangements) {
    structures.emplace(valence_sequence(profile, arr), std::vector<ChordMap>{});
  }
  {
    std::vector<std::map<std::vector<int>, std::vector<ChordMap>>::iterator> slots;
    for (auto it = structures.begin(); it != structures.end(); ++it) slots.push_back(it);
    const int workers = std::min<int>(jobs, static_cast<int>(slots.size()) > 0
                                                ? static_cast<int>(slots.size())
                                                : 1);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t
                 i = static_cast<std::size_t>(w);
             i < slots.size(); i += static_cast<std::size_t>(workers)) {
          slots[i]->second = enumerate_structures(slots[i]->first);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  for (const auto& arr : arrangements) {
    const auto& structs = structures.at(valence_sequence(profile, arr));
    for (const auto& chords : structs) {
      ArcDiagram d{profile, arr, chords};
      set.keys.push_back(canonical_key(d));
      set.elements.push_back(std::move(d));
    }
  }
  finish(set);
  return set;
}

std::uint64_t count_diagrams(const ValenceProfile& profile) {
  if (!profile.even_sum()) return 0;

  // Arrangements sharing a valence sequence contribute equally; weight each
  // distinct sequence by how many label orders produce it.
  std::map<int, std::uint64_t> label_count_by_valence;
  for (int i = 1; i <= profile.n; ++i) {
    label_count_by_valence[profile.valences[static_cast<std::size_t>(i)]] += 1;
  }
  std::uint64_t weight = 1;
  for (auto [valence, count] : label_count_by_valence) {
    (void)valence;
    for (std::uint64_t f = 2; f <= count; ++f) weight *= f;
  }

  std::vector<int> finite(profile.valences.begin() + 1, profile.valences.end());
  std::sort(finite.begin(), finite.end());
  std::uint64_t total = 0;
  do {
    std::vector<int> seq;
    seq.reserve(finite.size() + 1);
    seq.push_back(profile.valences[0]);
    seq.insert(seq.end(), finite.begin(), finite.end());
    total += count_structures(seq);
  } while (std::next_permutation(finite.begin(), finite.end()));
  return total * weight;
}

DiagramSet brute_force_oracle(const ValenceProfile& profile, int max_stubs) {
  if (profile.total() > max_stubs) {
    throw std::invalid_argument("brute_force_oracle: profile has " +
                                std::to_string(profile.total()) +
                                " stubs, bound is " + std::to_string(max_stubs));
  }
  DiagramSet set;
  set.profile = profile;
  if (profile.even_sum()) {
    for (const auto& arr : all_arrangements(profile.n)) {
      const std::vector<int> pos = stub_positions(valence_sequence(profile, arr));
      const int total = static_cast<int>(pos.size());
      std::set<ChordMap> dedup;
      std::vector<bool> used(static_cast<std::size_t>(total), false);
      std::vector<std::pair<int, int>> pairs;
      std::function<void()> rec = [&] {
        int i = 0;
        while (i < total && used[static_cast<std::size_t>(i)]) ++i;
        if (i == total) {
          dedup.insert(collapse_pairs(pos, pairs));
          return;
        }
        used[static_cast<std::size_t>(i)] = true;
        for (int k = i + 1; k < total; ++k) {
          if (used[static_cast<std::size_t>(k)]) continue;
          if (pos[static_cast<std::size_t>(k)] == pos[static_cast<std::size_t>(i)]) continue;
          bool crossed = false;
          for (auto [a, b] : pairs) {
            bool k_inside = a < k && k < b;
            bool i_inside = a < i && i < b;
            if (i_inside != k_inside) {
              crossed = true;
              break;
            }
          }
          if (crossed) continue;
          used[static_cast<std::size_t>(k)] = true;
          pairs.push_back({i, k});
          rec();
          pairs.pop_back();
          used[static_cast<std::size_t>(k)] = false;
        }
        used[static_cast<std::size_t>(i)] = false;
      };
      rec();
      for (const auto& chords : dedup) {
        ArcDiagram d{profile, arr, chords};
        set.keys.push_back(canonical_key(d));
        set.elements.push_back(std::move(d));
      }
    }
  }
  finish(set);
  return set;
}

}  // namespace arcdiag
