#pragma once

// Brute-force reference implementations for cross-checking the engine.
// Everything here is deliberately naive: fixpoint closures, full subset
// enumeration, full function enumeration.  Usable only on tiny groups
// (subset enumeration needs |G| <= 16 or so), which is the point — the
// answers are trustworthy because nothing is clever.

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "chigen/group.hpp"

namespace oracle {

// Closure of `gens` under the multiplication table by repeated pairwise
// products until nothing new appears.  Independent of chigen::closure's
// BFS bookkeeping.
inline std::set<int> naive_closure(const chigen::GroupTable& g, const std::vector<int>& gens) {
  std::set<int> cur;
  cur.insert(g.identity());
  for (int x : gens) cur.insert(x);
  for (;;) {
    std::set<int> next = cur;
    for (int x : cur)
      for (int y : cur) next.insert(g.mul(x, y));
    if (next.size() == cur.size()) return cur;
    cur.swap(next);
  }
}

// Subgroup test straight from the axioms: nonempty, has identity, closed
// under products and inverses.
inline bool naive_is_subgroup(const chigen::GroupTable& g, std::uint32_t mask) {
  if (mask == 0) return false;
  if (!(mask >> g.identity() & 1u)) return false;
  for (int x = 0; x < g.order(); ++x) {
    if (!(mask >> x & 1u)) continue;
    if (!(mask >> g.inv(x) & 1u)) return false;
    for (int y = 0; y < g.order(); ++y) {
      if (!(mask >> y & 1u)) continue;
      if (!(mask >> g.mul(x, y) & 1u)) return false;
    }
  }
  return true;
}

// Every subgroup, found by testing all 2^|G| subsets.  |G| <= 16.
inline std::vector<std::uint32_t> naive_all_subgroups(const chigen::GroupTable& g) {
  std::vector<std::uint32_t> out;
  const std::uint32_t full = (1u << g.order()) - 1u;
  for (std::uint32_t mask = 1; mask <= full; ++mask)
    if (naive_is_subgroup(g, mask)) out.push_back(mask);
  return out;
}

// Minimum number of proper subgroups whose union is G, by trying every
// subset of the proper-subgroup list in increasing size.  Returns 0 when
// no size works (G cyclic: the generator lies in no proper subgroup).
// Needs fewer than 63 proper subgroups, i.e. genuinely small groups.
inline int naive_sigma(const chigen::GroupTable& g) {
  std::vector<std::uint32_t> proper;
  const std::uint32_t full = (1u << g.order()) - 1u;
  for (std::uint32_t s : naive_all_subgroups(g))
    if (s != full) proper.push_back(s);
  const int m = static_cast<int>(proper.size());
  if (m >= 63) throw std::logic_error("naive_sigma: subgroup list too long for subset scan");
  for (int size = 1; size <= m; ++size) {
    // Gosper's hack over size-`size` index subsets.
    for (std::uint64_t pick = (1ull << size) - 1u; pick < (1ull << m);) {
      std::uint32_t covered = 0;
      for (int i = 0; i < m; ++i)
        if (pick >> i & 1u) covered |= proper[static_cast<size_t>(i)];
      if (covered == full) return size;
      std::uint64_t c = pick & -pick, r = pick + c;
      pick = r | (((pick ^ r) >> 2) / c);
    }
  }
  return 0;
}

// Whether every assignment of k colors to the elements leaves some color
// class generating G.  Enumerates all k^|G| functions outright; closures
// are memoized per color-class mask.
inline bool naive_every_coloring_generates(const chigen::GroupTable& g, int k) {
  const int n = g.order();
  std::map<std::uint32_t, bool> generates;
  auto class_generates = [&](std::uint32_t mask) {
    auto it = generates.find(mask);
    if (it != generates.end()) return it->second;
    std::vector<int> gens;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) gens.push_back(i);
    bool full = static_cast<int>(naive_closure(g, gens).size()) == n;
    generates.emplace(mask, full);
    return full;
  };
  std::vector<int> color(static_cast<size_t>(n), 0);
  for (;;) {
    std::vector<std::uint32_t> classes(static_cast<size_t>(k), 0);
    for (int i = 0; i < n; ++i) classes[static_cast<size_t>(color[static_cast<size_t>(i)])] |= 1u << i;
    bool mono = false;
    for (int c = 0; c < k && !mono; ++c)
      if (classes[static_cast<size_t>(c)] != 0 && class_generates(classes[static_cast<size_t>(c)])) mono = true;
    if (!mono) return false;
    int pos = 0;
    while (pos < n && color[static_cast<size_t>(pos)] == k - 1) color[static_cast<size_t>(pos++)] = 0;
    if (pos == n) return true;
    ++color[static_cast<size_t>(pos)];
  }
}

}  // namespace oracle
