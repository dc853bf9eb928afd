#include "chigen/theorems.hpp"

#include <algorithm>

namespace chigen {

ChiGenResult chigen_nilpotent(const GroupTable& g) {
  NilpotentInfo info = is_nilpotent(g);
  if (!info.nilpotent) fail(ErrorKind::NotNilpotent, "formula needs a nilpotent group");

  ChiGenResult result;
  result.method = "nilpotent";
  for (size_t i = 0; i < info.primes.size(); ++i) {
    const ElementSet& sylow = info.sylows[i];
    bool cyclic = false;
    for (int x : sylow.elements())
      if (g.element_order(x) == sylow.size()) { cyclic = true; break; }
    if (!cyclic) {
      // Primes ascend, so the first non-cyclic Sylow subgroup decides.
      result.value = ChiGenValue::finite(static_cast<int>(info.primes[i]));
      return result;
    }
  }
  // All Sylow subgroups cyclic: their product is cyclic of full order.
  CyclicWitness cw = is_cyclic(g);
  if (!cw.cyclic) fail(ErrorKind::Internal, "cyclic Sylow subgroups but no full-order element");
  result.value = ChiGenValue::infinite();
  result.generator = cw.generator;
  return result;
}

ChiGenResult chigen_dihedral(long long n) {
  if (n < 2) fail(ErrorKind::InvalidSpec, "dihedral formula needs n >= 2");
  ChiGenResult result;
  result.method = "dihedral";
  result.value = ChiGenValue::finite(static_cast<int>(least_prime_factor(n)));
  return result;
}

ChiGenResult chigen_semidirect(long long m, long long n, long long a) {
  GroupSpec spec = GroupSpec::semidirect(m, n, a);
  spec.order();  // parameter validation

  // All primes of gcd(m, n) divide m, so one pass over m's factors sees
  // both membership conditions.
  long long best = 0;
  for (auto [p, d] : factorize(m)) {
    long long pd = 1;
    for (int i = 0; i < d; ++i) pd *= p;
    bool moved = (a % pd) != 1 % pd;     // action nontrivial on the p-part
    bool shared = (n % p) == 0;          // p divides both orders
    if (moved || shared)
      best = best == 0 ? p : std::min(best, p);
  }

  ChiGenResult result;
  result.method = "semidirect";
  if (best == 0) {
    // Trivial action and coprime orders: the group is Z_m x Z_n == Z_mn,
    // generated by x*y at index n+1 (or the obvious degenerate cases).
    result.value = ChiGenValue::infinite();
    if (m == 1 && n == 1) result.generator = 0;
    else if (m == 1) result.generator = 1;            // (0, 1)
    else if (n == 1) result.generator = static_cast<int>(n);  // (1, 0) at index n
    else result.generator = static_cast<int>(n + 1);  // (1, 1)
    return result;
  }
  result.value = ChiGenValue::finite(static_cast<int>(best));
  return result;
}

bool chigen_two_color_test(const GroupTable& g) {
  return has_elementary_quotient(g, 2);
}

bool chigen_torsion_test(const GroupTable& g, long long lattice_cap) {
  long long p = min_nonidentity_order(g);
  ChiGenResult exact = sigma_search(g, lattice_cap);
  bool is_p = !exact.value.is_infinite() && exact.value.value() == p;
  return is_p == has_elementary_quotient(g, p);
}

GroupTable chigen_frattini_reduce(const GroupTable& g, const SubgroupLattice& lattice) {
  return quotient(g, frattini(lattice));
}

namespace {

ChiGenResult chigen_at_depth(const GroupTable& g, long long lattice_cap, bool canonical,
                             int depth) {
  CyclicWitness cw = is_cyclic(g);
  if (cw.cyclic) {
    ChiGenResult result;
    result.method = "cyclic";
    result.value = ChiGenValue::infinite();
    result.generator = cw.generator;
    return result;
  }

  if (g.spec()) {
    const GroupSpec& spec = *g.spec();
    if (spec.kind == GroupSpec::Kind::Dihedral && spec.n >= 2)
      return chigen_dihedral(spec.n);
    if (spec.kind == GroupSpec::Kind::Semidirect)
      return chigen_semidirect(spec.m, spec.n, spec.a);
  }

  if (is_nilpotent(g).nilpotent) return chigen_nilpotent(g);

  SubgroupLattice lattice = all_subgroups(g, lattice_cap);
  if (depth < kFrattiniRecursionCap) {
    ElementSet phi = frattini(lattice);
    if (phi.size() > 1) {
      std::vector<int> projection;
      GroupTable reduced = quotient(g, phi, &projection);
      ChiGenResult inner = chigen_at_depth(reduced, lattice_cap, canonical, depth + 1);
      if (inner.value.is_infinite())
        fail(ErrorKind::Internal, "Frattini quotient cyclic for a noncyclic group");
      ChiGenResult result;
      result.value = inner.value;
      result.method = "frattini+" + inner.method;
      if (inner.witness) {
        // Part preimages cover G; the size bound transfers because the
        // value is preserved by the reduction.
        CoverCertificate cert;
        for (const ElementSet& part : inner.witness->parts) {
          ElementSet lifted(g);
          for (int x = 0; x < g.order(); ++x)
            if (part.contains(projection[x])) lifted.add(x);
          cert.parts.push_back(std::move(lifted));
        }
        cert.covers = is_cover(g, cert.parts);
        cert.irredundant = is_irredundant(g, cert.parts).irredundant;
        cert.minimal_proven_up_to = inner.witness->minimal_proven_up_to;
        if (!cert.covers) fail(ErrorKind::Internal, "lifted Frattini cover fails to cover");
        result.witness = std::move(cert);
      }
      return result;
    }
  }
  return sigma_search(g, lattice, canonical);
}

}  // namespace

ChiGenResult chigen(const GroupTable& g, long long lattice_cap, bool canonical) {
  return chigen_at_depth(g, lattice_cap, canonical, 0);
}

}  // namespace chigen
