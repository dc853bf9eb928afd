#pragma once

#include "chigen/cover.hpp"
#include "chigen/group.hpp"
#include "chigen/lattice.hpp"

namespace chigen {

// Frattini quotients are re-dispatched at most this many levels deep.
inline constexpr int kFrattiniRecursionCap = 8;

// Nilpotent groups: infinite when every Sylow subgroup is cyclic (the
// group itself is then cyclic); otherwise the least prime whose Sylow
// subgroup is not cyclic.  Throws NotNilpotent.
ChiGenResult chigen_nilpotent(const GroupTable& g);

// Dihedral groups of order 2n, n >= 2: the least prime factor of n.
ChiGenResult chigen_dihedral(long long n);

// Z_m x| Z_n with y x y^-1 = x^a.  Collect primes p of gcd(m, n) plus
// primes p | m whose full p-power part of m is moved by the action
// (a != 1 mod p^d).  Empty set: infinite; otherwise the least member.
ChiGenResult chigen_semidirect(long long m, long long n, long long a);

// Whether the value is exactly 2: equivalent to a quotient of order 4
// and exponent 2.
bool chigen_two_color_test(const GroupTable& g);

// Biconditional check: value equals Finite(p) for p the least
// non-identity element order iff G has a Z_p x Z_p-style quotient.
// Returns whether the two sides agree (expected: always true).
bool chigen_torsion_test(const GroupTable& g, long long lattice_cap = kDefaultLatticeCap);

// G / Frattini(G); preserves the chi_gen value.
GroupTable chigen_frattini_reduce(const GroupTable& g, const SubgroupLattice& lattice);

// Main dispatcher: cyclic, then the closed forms recognized from the
// group's GroupSpec, then the nilpotent formula, then one Frattini
// reduction per level (when it shrinks the group), and exact search as
// the fallback.  The method tag records the path taken, e.g.
// "frattini+search".
ChiGenResult chigen(const GroupTable& g, long long lattice_cap = kDefaultLatticeCap,
                    bool canonical = true);

}  // namespace chigen
