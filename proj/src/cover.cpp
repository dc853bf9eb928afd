#include "chigen/cover.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace chigen {

namespace {

void check_parts(const GroupTable& g, const std::vector<ElementSet>& parts) {
  for (const ElementSet& p : parts) {
    if (p.group != &g) fail(ErrorKind::NotProperSubgroup, "part belongs to a different group");
    if (!p.is_subgroup()) fail(ErrorKind::NotProperSubgroup, "part is not a subgroup");
    if (p.size() == g.order()) fail(ErrorKind::NotProperSubgroup, "part is the whole group");
  }
}

}  // namespace

bool is_cover(const GroupTable& g, const std::vector<ElementSet>& parts) {
  check_parts(g, parts);
  Bitset u(g.order());
  for (const ElementSet& p : parts) u |= p.bits;
  return u.all();
}

IrredundanceReport is_irredundant(const GroupTable& g, const std::vector<ElementSet>& parts) {
  check_parts(g, parts);
  IrredundanceReport report;
  report.private_witness.assign(parts.size(), -1);
  report.irredundant = true;
  for (size_t i = 0; i < parts.size(); ++i) {
    Bitset rest(g.order());
    for (size_t j = 0; j < parts.size(); ++j)
      if (j != i) rest |= parts[j].bits;
    int witness = -1;
    for (int x : parts[i].elements())
      if (!rest.test(x)) { witness = x; break; }
    report.private_witness[i] = witness;
    if (witness < 0) report.irredundant = false;
  }
  return report;
}

// ---------------------------------------------------------------------------
// exact minimum cover search
// ---------------------------------------------------------------------------

namespace {

// Shared state for one cover search at a fixed part list.
struct CoverSearch {
  int n = 0;
  const std::vector<Bitset>* parts = nullptr;   // canonical order
  std::vector<std::vector<int>> containing;      // element -> part indices

  // True iff some k parts cover everything; branches on the uncovered
  // element lying in the fewest parts, which forces rare elements early.
  bool exists(const Bitset& covered, int slots) const {
    int uncovered = n - covered.count();
    if (uncovered == 0) return true;
    if (slots == 0) return false;

    int best_elem = -1;
    size_t best_cands = 0;
    int max_gain = 0;
    for (int x = 0; x < n; ++x) {
      if (covered.test(x)) continue;
      size_t cands = containing[x].size();
      if (cands == 0) return false;
      if (best_elem < 0 || cands < best_cands) {
        best_elem = x;
        best_cands = cands;
      }
    }
    for (const Bitset& p : *parts)
      max_gain = std::max(max_gain, p.count_outside(covered));
    if (max_gain == 0) return false;
    if ((uncovered + max_gain - 1) / max_gain > slots) return false;

    for (int pi : containing[best_elem])
      if (exists(covered | (*parts)[pi], slots - 1)) return true;
    return false;
  }

  // Existence search that records the first hit.
  bool record_first(const Bitset& covered, int slots, std::vector<int>& chosen) const {
    int uncovered = n - covered.count();
    if (uncovered == 0) return true;
    if (slots == 0) return false;
    int best_elem = -1;
    size_t best_cands = 0;
    for (int x = 0; x < n; ++x) {
      if (covered.test(x)) continue;
      size_t c = containing[x].size();
      if (c == 0) return false;
      if (best_elem < 0 || c < best_cands) { best_elem = x; best_cands = c; }
    }
    for (int pi : containing[best_elem]) {
      chosen.push_back(pi);
      if (record_first(covered | (*parts)[pi], slots - 1, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  // First size-k cover in ascending index order; with parts canonically
  // sorted this is the lexicographically least minimal cover.
  bool lex_least(int from, const Bitset& covered, int slots, std::vector<int>& chosen) const {
    if (covered.count() == n) return true;
    if (slots == 0) return false;
    // Every uncovered element must still be reachable from `from` on.
    for (int x = 0; x < n; ++x) {
      if (covered.test(x)) continue;
      const std::vector<int>& c = containing[x];
      if (c.empty() || c.back() < from) return false;
    }
    int max_gain = 0;
    for (size_t i = from; i < parts->size(); ++i)
      max_gain = std::max(max_gain, (*parts)[i].count_outside(covered));
    if (max_gain == 0) return false;
    if ((n - covered.count() + max_gain - 1) / max_gain > slots) return false;

    for (size_t i = from; i < parts->size(); ++i) {
      chosen.push_back(static_cast<int>(i));
      if (lex_least(static_cast<int>(i) + 1, covered | (*parts)[i], slots - 1, chosen))
        return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

MinCoverResult minimum_cover(int universe, const std::vector<Bitset>& parts, bool canonical) {
  CoverSearch search;
  search.n = universe;
  search.parts = &parts;
  search.containing.assign(universe, {});
  for (size_t i = 0; i < parts.size(); ++i)
    for (int x : parts[i].members())
      search.containing[x].push_back(static_cast<int>(i));
  for (int x = 0; x < universe; ++x)
    if (search.containing[x].empty())
      fail(ErrorKind::Internal, "cover search: element lies in no part");

  Bitset empty(universe);
  const int limit = static_cast<int>(parts.size());
  for (int k = 1; k <= limit; ++k) {
    if (!search.exists(empty, k)) continue;
    MinCoverResult result;
    result.size = k;
    bool found = canonical ? search.lex_least(0, empty, k, result.chosen)
                           : search.record_first(empty, k, result.chosen);
    if (!found) fail(ErrorKind::Internal, "witness pass lost a known cover");
    std::sort(result.chosen.begin(), result.chosen.end());
    return result;
  }
  fail(ErrorKind::Internal, "parts do not cover the universe");
}

ChiGenResult sigma_search(const GroupTable& g, const SubgroupLattice& lattice,
                          bool canonical) {
  ChiGenResult result;
  result.method = "search";

  CyclicWitness cw = is_cyclic(g);
  if (cw.cyclic) {
    result.value = ChiGenValue::infinite();
    result.generator = cw.generator;
    return result;
  }

  if (lattice.group != &g) fail(ErrorKind::Internal, "lattice belongs to a different group");
  std::vector<ElementSet> maximal = maximal_subgroups(lattice);
  std::vector<Bitset> parts;
  parts.reserve(maximal.size());
  for (const ElementSet& m : maximal) parts.push_back(m.bits);

  MinCoverResult min = minimum_cover(g.order(), parts, canonical);
  if (min.size < 3)
    fail(ErrorKind::Internal, "no group is the union of two proper subgroups");

  CoverCertificate cert;
  for (int i : min.chosen) cert.parts.push_back(maximal[i]);
  cert.covers = is_cover(g, cert.parts);
  cert.irredundant = is_irredundant(g, cert.parts).irredundant;
  cert.minimal_proven_up_to = min.size - 1;
  if (!cert.covers) fail(ErrorKind::Internal, "search produced a non-cover");

  result.value = ChiGenValue::finite(min.size - 1);
  result.witness = std::move(cert);
  return result;
}

ChiGenResult sigma_search(const GroupTable& g, long long lattice_cap, bool canonical) {
  if (is_cyclic(g).cyclic) {
    // No lattice needed: cyclic groups have no proper-subgroup cover.
    SubgroupLattice empty_lattice;
    empty_lattice.group = &g;
    empty_lattice.complete = true;
    return sigma_search(g, empty_lattice, canonical);
  }
  SubgroupLattice lattice = all_subgroups(g, lattice_cap);
  return sigma_search(g, lattice, canonical);
}

// ---------------------------------------------------------------------------
// coloring oracle
// ---------------------------------------------------------------------------

bool coloring_oracle(const GroupTable& g, int k, long long budget) {
  if (k < 1) fail(ErrorKind::InvalidSpec, "coloring needs at least one color");
  const int n = g.order();
  // Budget check on k^n, in logs to dodge overflow.
  if (n * std::log(static_cast<double>(k)) >
      std::log(static_cast<double>(budget)) + 1e-9)
    fail(ErrorKind::BudgetExceeded,
         "enumerating " + std::to_string(k) + "^" + std::to_string(n) + " colorings exceeds budget " +
             std::to_string(budget));
  if (k == 1) return true;  // the single class is all of G
  if (n > 63) fail(ErrorKind::BudgetExceeded, "oracle masks cap the order at 63");

  // Memoized "does this class generate G" on element masks.
  std::unordered_map<uint64_t, bool> memo;
  auto generates = [&](uint64_t mask) {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::vector<int> gens;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) gens.push_back(i);
    bool full = closure(g, gens).size() == n;
    memo.emplace(mask, full);
    return full;
  };

  // Assign colors element by element; color permutations are collapsed by
  // only opening color c after colors 0..c-1 are in use.  Returns false
  // on the first coloring with no generating class.
  std::vector<uint64_t> classes(static_cast<size_t>(k), 0);
  auto rec = [&](auto&& self, int elem, int used) -> bool {
    if (elem == n) {
      for (int c = 0; c < used; ++c)
        if (generates(classes[c])) return true;
      return false;
    }
    int open = std::min(used + 1, k);
    for (int c = 0; c < open; ++c) {
      classes[c] |= uint64_t{1} << elem;
      bool ok = self(self, elem + 1, std::max(used, c + 1));
      classes[c] &= ~(uint64_t{1} << elem);
      if (!ok) return false;
    }
    return true;
  };
  return rec(rec, 0, 0);
}

}  // namespace chigen
