#include "chigen/lattice.hpp"

#include <algorithm>
#include <unordered_map>

namespace chigen {

namespace {

struct Node {
  Bitset bits;
  std::vector<int> gens;
  int order = 0;
};

}  // namespace

bool SubgroupLattice::is_maximal(int index) const {
  return std::binary_search(maximal.begin(), maximal.end(), index);
}

bool SubgroupLattice::is_normal(int index) const {
  return std::binary_search(normal.begin(), normal.end(), index);
}

SubgroupLattice all_subgroups(const GroupTable& g, long long cap) {
  const int n = g.order();

  // Distinct cyclic subgroups, each remembered with one generator.
  std::vector<Node> seeds;
  {
    std::unordered_map<Bitset, int, BitsetHash> seen;
    for (int x = 0; x < n; ++x) {
      ElementSet c = cyclic_subgroup(g, x);
      if (seen.emplace(c.bits, 0).second)
        seeds.push_back({c.bits, {x}, c.size()});
    }
  }

  std::vector<Node> nodes;
  std::unordered_map<Bitset, int, BitsetHash> index;
  bool complete = true;
  auto insert = [&](Bitset bits, std::vector<int> gens) -> bool {
    if (index.count(bits)) return true;
    if (static_cast<long long>(nodes.size()) >= cap) return false;
    int order = bits.count();
    index.emplace(bits, static_cast<int>(nodes.size()));
    nodes.push_back({std::move(bits), std::move(gens), order});
    return true;
  };

  {
    Bitset trivial(n);
    trivial.set(g.identity());
    insert(std::move(trivial), {});
  }
  for (const Node& s : seeds)
    if (!insert(s.bits, s.gens)) { complete = false; break; }

  // Join every known subgroup with every cyclic seed not inside it.
  for (size_t i = 0; complete && i < nodes.size(); ++i) {
    if (nodes[i].order == n) continue;
    // Copy out: `nodes` may reallocate while we extend from it.
    const Bitset base = nodes[i].bits;
    const std::vector<int> base_gens = nodes[i].gens;
    for (const Node& s : seeds) {
      if (s.bits.subset_of(base)) continue;
      Bitset joined = extend_subgroup(g, base, base_gens, s.gens[0]);
      std::vector<int> gens = base_gens;
      gens.push_back(s.gens[0]);
      if (!insert(std::move(joined), std::move(gens))) { complete = false; break; }
    }
  }

  std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.bits.canonical_less(b.bits);
  });

  SubgroupLattice lat;
  lat.group = &g;
  lat.complete = complete;
  lat.subgroups.reserve(nodes.size());
  for (Node& node : nodes) lat.subgroups.emplace_back(g, std::move(node.bits));

  if (!complete) return lat;

  // Contiguous index range per subgroup order (the list is order-sorted).
  const int count = static_cast<int>(lat.subgroups.size());
  struct Block { int order, begin, end; };
  std::vector<Block> blocks;
  for (int i = 0; i < count;) {
    int o = lat.subgroups[i].size();
    int j = i;
    while (j < count && lat.subgroups[j].size() == o) ++j;
    blocks.push_back({o, i, j});
    i = j;
  }

  // Maximal: proper subgroups contained in no larger proper subgroup.
  for (int i = 0; i < count; ++i) {
    const Bitset& h = lat.subgroups[i].bits;
    const int ho = lat.subgroups[i].size();
    if (ho == n) continue;
    bool covered = false;
    for (const Block& blk : blocks) {
      if (blk.order <= ho || blk.order == n || blk.order % ho != 0) continue;
      for (int j = blk.begin; j < blk.end; ++j)
        if (h.subset_of(lat.subgroups[j].bits)) { covered = true; break; }
      if (covered) break;
    }
    if (!covered) lat.maximal.push_back(i);
  }

  // Normal: closed under conjugation by a generating set of G.
  const std::vector<int> gens = g.generators();
  for (int i = 0; i < count; ++i) {
    const ElementSet& h = lat.subgroups[i];
    const std::vector<int> elems = h.elements();
    bool normal = true;
    for (int c : gens) {
      for (int x : elems)
        if (!h.contains(g.mul(g.mul(c, x), g.inv(c)))) { normal = false; break; }
      if (!normal) break;
    }
    if (normal) lat.normal.push_back(i);
  }
  return lat;
}

std::vector<ElementSet> maximal_subgroups(const SubgroupLattice& lattice) {
  if (!lattice.complete)
    fail(ErrorKind::LatticeIncomplete, "maximal subgroups need a complete lattice");
  std::vector<ElementSet> out;
  out.reserve(lattice.maximal.size());
  for (int i : lattice.maximal) out.push_back(lattice.subgroups[i]);
  return out;
}

ElementSet frattini(const SubgroupLattice& lattice) {
  if (!lattice.complete)
    fail(ErrorKind::LatticeIncomplete, "Frattini subgroup needs a complete lattice");
  const GroupTable& g = *lattice.group;
  ElementSet out(g);
  if (lattice.maximal.empty()) {
    out.bits.fill();
    return out;
  }
  out = lattice.subgroups[lattice.maximal[0]];
  for (size_t i = 1; i < lattice.maximal.size(); ++i)
    out.bits &= lattice.subgroups[lattice.maximal[i]].bits;
  return out;
}

bool has_elementary_quotient(const GroupTable& g, long long p) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  ElementSet derived = commutator_subgroup(g);
  GroupTable ab = quotient(g, derived);
  return abelian_p_rank(ab, p) >= 2;
}

std::optional<ElementSet> elementary_quotient_witness(const GroupTable& g,
                                                      const SubgroupLattice& lattice,
                                                      long long p) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (!lattice.complete)
    fail(ErrorKind::LatticeIncomplete, "witness search needs a complete lattice");
  const long long target = g.order() / (p * p);
  if (g.order() % (p * p) != 0) return std::nullopt;
  for (int i : lattice.normal) {
    const ElementSet& nsub = lattice.subgroups[i];
    if (nsub.size() != target) continue;
    GroupTable q = quotient(g, nsub);
    bool exponent_p = true;
    for (int x = 0; x < q.order() && exponent_p; ++x)
      exponent_p = q.element_order(x) == 1 || q.element_order(x) == static_cast<int>(p);
    if (exponent_p) return nsub;
  }
  return std::nullopt;
}

}  // namespace chigen
