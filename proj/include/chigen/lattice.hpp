#pragma once

#include <optional>
#include <vector>

#include "chigen/group.hpp"

namespace chigen {

// Upper bound on enumerated subgroups before giving up; elementary
// abelian 2-groups are the usual offenders.
inline constexpr long long kDefaultLatticeCap = 200000;

// Every subgroup of a group, deduplicated and sorted by
// (order, canonical bit-vector order).  When `complete` is false the
// cap was hit: `subgroups` is a partial list and the maximal/normal
// indices are left empty; operations needing exactness refuse to run.
struct SubgroupLattice {
  const GroupTable* group = nullptr;
  std::vector<ElementSet> subgroups;
  std::vector<int> maximal;  // indices into subgroups
  std::vector<int> normal;   // indices into subgroups
  bool complete = false;

  bool is_maximal(int index) const;
  bool is_normal(int index) const;
};

// Enumerates by seeding with the cyclic subgroups and joining with them
// until no new subgroup appears; every subgroup is such an iterated join.
SubgroupLattice all_subgroups(const GroupTable& g, long long cap = kDefaultLatticeCap);

// Maximal subgroups in canonical order.  Throws LatticeIncomplete.
std::vector<ElementSet> maximal_subgroups(const SubgroupLattice& lattice);

// Frattini subgroup: intersection of all maximal subgroups, or the
// whole group when there are none.  Throws LatticeIncomplete.
ElementSet frattini(const SubgroupLattice& lattice);

// Whether G has a quotient of order p^2 and exponent p, decided by the
// p-rank of the abelianization.  Throws NotPrime.
bool has_elementary_quotient(const GroupTable& g, long long p);

// Lattice-search form of the same question: scans normal subgroups for
// a witness N with |G/N| = p^2 and exponent p.  Used to cross-check
// has_elementary_quotient; quadratic in the lattice size.
std::optional<ElementSet> elementary_quotient_witness(const GroupTable& g,
                                                      const SubgroupLattice& lattice,
                                                      long long p);

}  // namespace chigen
