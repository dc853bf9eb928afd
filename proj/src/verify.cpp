#include "chigen/verify.hpp"

#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>
#include <utility>

#include "chigen/corpus.hpp"
#include "chigen/error.hpp"
#include "chigen/parallel.hpp"
#include "chigen/spec_parse.hpp"
#include "chigen/theorems.hpp"
#include "chigen/vecspace.hpp"

namespace chigen {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Records a failure note (capped so sweep suites cannot flood the report).
bool expect(SuiteResult& r, bool ok, const std::string& what) {
  if (!ok) {
    r.pass = false;
    if (r.notes.size() < 20)
      r.notes.push_back(what);
    else if (r.notes.size() == 20)
      r.notes.push_back("... further failures suppressed");
  }
  return ok;
}

ChiGenValue min_value(const ChiGenValue& a, const ChiGenValue& b) {
  return a <= b ? a : b;
}

std::string describe(const ChiGenResult& r) {
  return r.value.to_string() + " via " + r.method;
}

}  // namespace

const std::vector<std::string>& Verifier::suite_names() {
  static const std::vector<std::string> names = {
      "a4",      "s4",        "zpp",    "dihedral", "nilpotent",
      "semidirect", "twocolors", "torsion", "oracle", "bounds",
      "coprime", "quotient",  "frattini", "vecspace",
  };
  return names;
}

const std::vector<Verifier::Entry>& Verifier::corpus() {
  if (corpus_ready_) return corpus_;
  const std::vector<std::string>& specs = corpus_specs();
  std::vector<Entry> entries(specs.size());
  parallel_for(static_cast<int>(specs.size()), [&](int i) {
    Entry& e = entries[static_cast<size_t>(i)];
    e.spec = specs[static_cast<size_t>(i)];
    e.group = std::make_unique<GroupTable>(GroupTable::build(parse_group_spec(e.spec)));
    e.lattice = all_subgroups(*e.group);
    e.exact = sigma_search(*e.group, e.lattice, /*canonical=*/false);
    e.dispatched = chigen(*e.group, kDefaultLatticeCap, /*canonical=*/false);
  });
  corpus_ = std::move(entries);
  corpus_ready_ = true;
  return corpus_;
}

// chi_gen(A4) = 4: five-part minimum cover (the four rotation subgroups of
// order 3 plus the Klein subgroup), no four maximal subgroups suffice.
SuiteResult Verifier::suite_a4() {
  SuiteResult r{"a4", true, {}, 0.0};
  Clock::time_point t0 = Clock::now();
  GroupTable g = GroupTable::build(GroupSpec::alternating(4));
  SubgroupLattice lat = all_subgroups(g);
  ChiGenResult res = sigma_search(g, lat, /*canonical=*/true);
  double core_ms = ms_since(t0);

  expect(r, !res.value.is_infinite() && res.value.value() == 4,
         "expected 4, got " + res.value.to_string());
  if (expect(r, res.witness.has_value(), "search returned no witness")) {
    const CoverCertificate& w = *res.witness;
    expect(r, w.parts.size() == 5,
           "witness has " + std::to_string(w.parts.size()) + " parts, expected 5");
    int order3 = 0, order4 = 0, other = 0;
    for (const ElementSet& part : w.parts) {
      if (part.size() == 3)
        ++order3;
      else if (part.size() == 4)
        ++order4;
      else
        ++other;
    }
    expect(r, order3 == 4 && order4 == 1 && other == 0,
           "witness part orders are not {3,3,3,3,4}");
    expect(r, w.covers, "witness does not cover the group");
    expect(r, w.irredundant, "witness is redundant");
    expect(r, w.minimal_proven_up_to == 4, "no exhaustive 4-cover refutation");
  }
  expect(r, core_ms < 1000.0,
         "took " + std::to_string(core_ms) + " ms, budget is 1000 ms");
  if (r.pass) {
    std::ostringstream os;
    os << "chi_gen(A4) = 4, witness 4x|3| + 1x|4|, no 4-cover ("
       << static_cast<int>(core_ms * 1000) / 1000.0 << " ms)";
    r.notes.push_back(os.str());
  }
  r.ms = ms_since(t0);
  return r;
}

// chi_gen(S4) = 3 by search; the dispatcher reaches the same value.
SuiteResult Verifier::suite_s4() {
  SuiteResult r{"s4", true, {}, 0.0};
  Clock::time_point t0 = Clock::now();
  GroupTable g = GroupTable::build(GroupSpec::symmetric(4));
  ChiGenResult search = sigma_search(g, kDefaultLatticeCap, /*canonical=*/true);
  double core_ms = ms_since(t0);

  expect(r, !search.value.is_infinite() && search.value.value() == 3,
         "search expected 3, got " + search.value.to_string());
  ChiGenResult disp = chigen(g);
  expect(r, disp.value == search.value,
         "dispatcher (" + describe(disp) + ") disagrees with search (" +
             describe(search) + ")");
  expect(r, core_ms < 10000.0,
         "took " + std::to_string(core_ms) + " ms, budget is 10000 ms");
  if (r.pass)
    r.notes.push_back("chi_gen(S4) = 3, dispatcher path: " + disp.method);
  r.ms = ms_since(t0);
  return r;
}

// chi_gen(Z_p x Z_p) = p with a (p+1)-part witness, p in {2,3,5,7}.
SuiteResult Verifier::suite_zpp() {
  SuiteResult r{"zpp", true, {}, 0.0};
  Clock::time_point t0 = Clock::now();
  for (long long p : {2, 3, 5, 7}) {
    GroupTable g = GroupTable::build(
        GroupSpec::product(GroupSpec::cyclic(p), GroupSpec::cyclic(p)));
    ChiGenResult res = sigma_search(g, kDefaultLatticeCap, /*canonical=*/true);
    std::string tag = "Z" + std::to_string(p) + "xZ" + std::to_string(p);
    expect(r, !res.value.is_infinite() && res.value.value() == p,
           tag + ": expected " + std::to_string(p) + ", got " + res.value.to_string());
    expect(r,
           res.witness && res.witness->parts.size() == static_cast<size_t>(p) + 1,
           tag + ": witness is not a " + std::to_string(p + 1) + "-part cover");
    ChiGenResult formula = chigen_nilpotent(g);
    expect(r, formula.value == res.value, tag + ": formula disagrees with search");
  }
  if (r.pass) r.notes.push_back("p in {2,3,5,7}: value p, p+1 parts, formula = search");
  r.ms = ms_since(t0);
  return r;
}

// Dihedral groups of order 2n, n in [2,30]: least prime factor of n.
SuiteResult Verifier::suite_dihedral() {
  SuiteResult r{"dihedral", true, {}, 0.0};
  Clock::time_point t0 = Clock::now();
  int checked = 0;
  for (long long n = 2; n <= 30; ++n) {
    GroupTable g = GroupTable::build(GroupSpec::dihedral(n));
    ChiGenResult formula = chigen_dihedral(n);
    ChiGenResult search = sigma_search(g, kDefaultLatticeCap, /*canonical=*/false);
    expect(r, formula.value == search.value,
           "D" + std::to_string(n) + ": formula " + formula.value.to_string() +
               " != search " + search.value.to_string());
    ++checked;
  }
  if (r.pass)
    r.notes.push_back(std::to_string(checked) + " dihedral groups, formula = search");
  r.ms = ms_since(t0);
  return r;
}

// Every abelian group of order <= 128 by invariant factors: the nilpotent
// closed form against exact search, zero disagreements.
SuiteResult Verifier::suite_nilpotent() {
  SuiteResult r{"nilpotent", true, {}, 0.0};
  Clock::time_point t0 = Clock::now();

  // Invariant factor chains d1 | d2 | ... with product <= 128; the empty
  // chain is the trivial group.
  std::vector<std::vector<long long>> chains;
  std::vector<long long> cur;
  std::function<void(long long)> grow = [&](long long prod) {
    chains.push_back(cur);
    if (cur.empty()) {
      for (long long d = 2; d * prod <= 128; ++d) {
        cur.push_back(d);
        grow(prod * d);
        cur.pop_back();
      }
    } else {
      for (long long d = cur.back(); d * prod <= 128; d += cur.back()) {
        cur.push_back(d);
        grow(prod * d);
        cur.pop_back();
      }
    }
  };
  grow(1);

  int checked = 0;
  for (const std::vector<long long>& chain : chains) {
    GroupSpec spec = GroupSpec::cyclic(1);
    for (size_t i = 0; i < chain.size(); ++i) {
      GroupSpec factor = GroupSpec::cyclic(chain[i]);
      spec = (i == 0) ? factor : GroupSpec::product(std::move(spec), std::move(factor));
    }
    GroupTable g = GroupTable::build(spec);
    ChiGenResult formula = chigen_nilpotent(g);
    ChiGenResult search = sigma_search(g, kDefaultLatticeCap, /*canonical=*/false);
    expect(r, formula.value == search.value,
           spec.to_string() + ": formula " + formula.value.to_string() +
               " != search " + search.value.to_string());
    ++checked;
  }
  if (r.pass)
    r.notes.push_back(std::to_string(checked) +
                      " abelian groups of order <= 128, formula = search");
  r.ms = ms_since(t0);
  return r;
}

// Every valid semidirect product with m <= 30, n <= 12: closed form
// against exact search, zero disagreements.
SuiteResult Verifier::suite_semidirect() {
  SuiteResult r{"semidirect", true, {}, 0.0};
  Clock::time_point t0 = Clock::now();
  int checked = 0;
  for (long long m = 1; m <= 30; ++m) {
    for (long long n = 1; n <= 12; ++n) {
      for (long long a = 0; a < m; ++a) {
        if (std::gcd(a, m) != 1) continue;
        if (pow_mod(a, n, m) != 1 % m) continue;
        GroupTable g = GroupTable::build(GroupSpec::semidirect(m, n, a));
        ChiGenResult formula = chigen_semidirect(m, n, a);
        ChiGenResult search = sigma_search(g, kDefaultLatticeCap, /*canonical=*/false);
        expect(r, formula.value == search.value,
               "SD(" + std::to_string(m) + "," + std::to_string(n) + "," +
                   std::to_string(a) + "): formula " + formula.value.to_string() +
                   " != search " + search.value.to_string());
        ++checked;
      }
    }
  }
  if (r.pass)
    r.notes.push_back(std::to_string(checked) +
                      " semidirect products, formula = search");
  r.ms = ms_since(t0);
  return r;
}

// chi_gen = 2 exactly when the abelianization has 2-rank >= 2; the
// abelianization test is also cross-checked against direct lattice search.
SuiteResult Verifier::suite_twocolors() {
  SuiteResult r{"twocolors", true, {}, 0.0};
  Clock::time_point t0 = Clock::now();
  const std::vector<Entry>& entries = corpus();
  for (const Entry& e : entries) {
    bool is_two = !e.exact.value.is_infinite() && e.exact.value.value() == 2;
    bool quotient_test = has_elementary_quotient(*e.group, 2);
    expect(r, is_two == quotient_test,
           e.spec + ": chi = " + e.exact.value.to_string() +
               " but elementary 2-quotient = " + (quotient_test ? "yes" : "no"));
    bool by_lattice = elementary_quotient_witness(*e.group, e.lattice, 2).has_value();
    expect(r, quotient_test == by_lattice,
           e.spec + ": abelianization test disagrees with lattice search");
  }
  if (r.pass)
    r.notes.push_back(std::to_string(entries.size()) +
                      " corpus groups, biconditional holds");
  r.ms = ms_since(t0);
  return r;
}

// With p the least non-identity element order: chi_gen = p exactly when
// Z_p x Z_p is a quotient.
SuiteResult Verifier::suite_torsion() {
  SuiteResult r{"torsion", true, {}, 0.0};
  Clock::time_point t0 = Clock::now();
  int checked = 0;
  for (const Entry& e : corpus()) {
    if (e.group->order() < 2) continue;  // no non-identity element
    long long p = min_nonidentity_order(*e.group);
    bool is_p = !e.exact.value.is_infinite() && e.exact.value.value() == p;
    bool quotient_test = has_elementary_quotient(*e.group, p);
    expect(r, is_p == quotient_test,
           e.spec + ": p = " + std::to_string(p) + ", chi = " +
               e.exact.value.to_string() + ", elementary p-quotient = " +
               (quotient_test ? "yes" : "no"));
    ++checked;
  }
  if (r.pass)
    r.notes.push_back(std::to_string(checked) +
                      " corpus groups, biconditional holds");
  r.ms = ms_since(t0);
  return r;
}

// The coloring oracle agrees with cover search: every k-coloring has a
// monochromatic generating set exactly when no k proper subgroups cover.
SuiteResult Verifier::suite_oracle() {
  SuiteResult r{"oracle", true, {}, 0.0};
  Clock::time_point t0 = Clock::now();
  int checked = 0;
  for (const Entry& e : corpus()) {
    if (e.group->order() > 12) continue;
    for (int k = 1; k <= 3; ++k) {
      bool oracle = coloring_oracle(*e.group, k, oracle_budget_);
      bool no_cover = e.exact.value.is_infinite() || k <= e.exact.value.value();
      expect(r, oracle == no_cover,
             e.spec + ", k = " + std::to_string(k) + ": oracle " +
                 (oracle ? "true" : "false") + ", cover search says " +
                 (no_cover ? "true" : "false"));
      ++checked;
    }
  }
  if (r.pass)
    r.notes.push_back(std::to_string(checked) + " (group, k) pairs agree");
  r.ms = ms_since(t0);
  return r;
}

// Value bounds: infinite exactly for cyclic groups; otherwise
// 2 <= chi_gen, chi_gen >= least element order, chi_gen <= |G| - 2.
// Also pins the dispatcher to the search value on every corpus entry.
SuiteResult Verifier::suite_bounds() {
  SuiteResult r{"bounds", true, {}, 0.0};
  Clock::time_point t0 = Clock::now();
  const std::vector<Entry>& entries = corpus();
  for (const Entry& e : entries) {
    bool cyclic = is_cyclic(*e.group).cyclic;
    if (cyclic) {
      expect(r, e.exact.value.is_infinite(), e.spec + ": cyclic but finite value");
    } else {
      if (!expect(r, !e.exact.value.is_infinite(),
                  e.spec + ": non-cyclic but infinite value"))
        continue;
      int v = e.exact.value.value();
      long long p = min_nonidentity_order(*e.group);
      expect(r, v >= 2, e.spec + ": value below 2");
      expect(r, v >= p,
             e.spec + ": value " + std::to_string(v) + " below element-order bound " +
                 std::to_string(p));
      expect(r, v <= e.group->order() - 2,
             e.spec + ": value " + std::to_string(v) + " above |G|-2");
    }
    expect(r, e.dispatched.value == e.exact.value,
           e.spec + ": dispatcher (" + describe(e.dispatched) +
               ") disagrees with search (" + describe(e.exact) + ")");
  }
  if (r.pass)
    r.notes.push_back(std::to_string(entries.size()) +
                      " corpus groups within bounds, dispatcher = search");
  r.ms = ms_since(t0);
  return r;
}

// chi_gen(A x B) = min(chi_gen(A), chi_gen(B)) for coprime orders, on 50
// corpus pairs.
SuiteResult Verifier::suite_coprime() {
  SuiteResult r{"coprime", true, {}, 0.0};
  Clock::time_point t0 = Clock::now();
  const std::vector<Entry>& entries = corpus();

  // Deterministic selection: all coprime pairs in scan order, pairs with a
  // non-cyclic factor first so the sample is not dominated by Z_m x Z_n.
  std::vector<std::pair<int, int>> eligible;
  for (int i = 0; i < static_cast<int>(entries.size()); ++i) {
    for (int j = i + 1; j < static_cast<int>(entries.size()); ++j) {
      long long oa = entries[static_cast<size_t>(i)].group->order();
      long long ob = entries[static_cast<size_t>(j)].group->order();
      if (oa < 2 || ob < 2 || oa * ob > 360) continue;
      if (std::gcd(oa, ob) != 1) continue;
      eligible.push_back({i, j});
    }
  }
  std::vector<std::pair<int, int>> chosen;
  for (int pass = 0; pass < 2 && chosen.size() < 50; ++pass) {
    for (const std::pair<int, int>& pr : eligible) {
      if (chosen.size() >= 50) break;
      bool both_cyclic = entries[static_cast<size_t>(pr.first)].exact.value.is_infinite() &&
                         entries[static_cast<size_t>(pr.second)].exact.value.is_infinite();
      if ((pass == 0) == !both_cyclic) chosen.push_back(pr);
    }
  }
  expect(r, chosen.size() == 50,
         "only " + std::to_string(chosen.size()) + " coprime pairs available");

  for (const std::pair<int, int>& pr : chosen) {
    const Entry& a = entries[static_cast<size_t>(pr.first)];
    const Entry& b = entries[static_cast<size_t>(pr.second)];
    GroupTable prod = direct_product(*a.group, *b.group);
    ChiGenResult res = sigma_search(prod, kDefaultLatticeCap, /*canonical=*/false);
    ChiGenValue want = min_value(a.exact.value, b.exact.value);
    expect(r, res.value == want,
           a.spec + " x " + b.spec + ": got " + res.value.to_string() +
               ", expected min = " + want.to_string());
  }
  if (r.pass)
    r.notes.push_back(std::to_string(chosen.size()) +
                      " coprime products match the min rule");
  r.ms = ms_since(t0);
  return r;
}

// Quotient monotonicity: chi_gen(G) <= chi_gen(G/N) for every normal N.
SuiteResult Verifier::suite_quotient() {
  SuiteResult r{"quotient", true, {}, 0.0};
  Clock::time_point t0 = Clock::now();
  int checked = 0;
  for (const Entry& e : corpus()) {
    for (int idx : e.lattice.normal) {
      const ElementSet& n = e.lattice.subgroups[static_cast<size_t>(idx)];
      GroupTable q = quotient(*e.group, n);
      ChiGenResult res = chigen(q, kDefaultLatticeCap, /*canonical=*/false);
      expect(r, e.exact.value <= res.value,
             e.spec + " / |N|=" + std::to_string(n.size()) + ": chi " +
                 e.exact.value.to_string() + " > quotient chi " +
                 res.value.to_string());
      ++checked;
    }
  }
  if (r.pass)
    r.notes.push_back(std::to_string(checked) + " quotients respect monotonicity");
  r.ms = ms_since(t0);
  return r;
}

// Frattini invariance: chi_gen(G) = chi_gen(G / Phi(G)).
SuiteResult Verifier::suite_frattini() {
  SuiteResult r{"frattini", true, {}, 0.0};
  Clock::time_point t0 = Clock::now();
  const std::vector<Entry>& entries = corpus();
  for (const Entry& e : entries) {
    ElementSet phi = frattini(e.lattice);
    GroupTable q = quotient(*e.group, phi);
    ChiGenResult res = chigen(q, kDefaultLatticeCap, /*canonical=*/false);
    expect(r, res.value == e.exact.value,
           e.spec + ": chi " + e.exact.value.to_string() + " != chi of Frattini quotient " +
               res.value.to_string());
  }
  if (r.pass)
    r.notes.push_back(std::to_string(entries.size()) +
                      " corpus groups unchanged by Frattini reduction");
  r.ms = ms_since(t0);
  return r;
}

// Vector spaces: chi_gen(F_q^d) = q for q in {2,3,4,5}, d in {2,3}; the
// q+1 lines cover the plane pairwise-trivially; prime q matches the
// additive group Z_p^d.
SuiteResult Verifier::suite_vecspace() {
  SuiteResult r{"vecspace", true, {}, 0.0};
  Clock::time_point t0 = Clock::now();
  for (long long q : {2, 3, 4, 5}) {
    FiniteField f = FiniteField::make(q);
    std::string tag = "F" + std::to_string(q);

    VecSpace plane(f, 2);
    std::vector<Bitset> lines = line_cover(f);
    expect(r, lines.size() == static_cast<size_t>(q) + 1,
           tag + "^2: expected " + std::to_string(q + 1) + " lines");
    Bitset covered(plane.points());
    for (size_t i = 0; i < lines.size(); ++i) {
      expect(r, plane.is_subspace(lines[i]), tag + "^2: line is not a subspace");
      expect(r, lines[i].count() == q, tag + "^2: line has wrong size");
      covered |= lines[i];
      for (size_t j = 0; j < i; ++j) {
        Bitset meet = lines[i];
        meet &= lines[j];
        expect(r, meet.count() == 1 && meet.test(0),
               tag + "^2: two lines meet outside the origin");
      }
    }
    expect(r, covered.count() == plane.points(), tag + "^2: lines do not cover");

    for (int d : {2, 3}) {
      VecSigmaResult res = sigma_vec(f, d, kDefaultVecCap, /*canonical=*/true);
      std::string vtag = tag + "^" + std::to_string(d);
      expect(r, !res.value.is_infinite() && res.value.value() == q,
             vtag + ": expected " + std::to_string(q) + ", got " +
                 res.value.to_string());
      expect(r, res.witness.size() == static_cast<size_t>(q) + 1,
             vtag + ": witness is not a " + std::to_string(q + 1) + "-part cover");
      expect(r, res.minimal_proven_up_to == q,
             vtag + ": no exhaustive " + std::to_string(q) + "-cover refutation");

      if (is_prime(q)) {
        GroupSpec spec = GroupSpec::cyclic(q);
        for (int i = 1; i < d; ++i)
          spec = GroupSpec::product(std::move(spec), GroupSpec::cyclic(q));
        GroupTable g = GroupTable::build(spec);
        ChiGenResult group_res = sigma_search(g, kDefaultLatticeCap, /*canonical=*/false);
        expect(r, group_res.value == res.value,
               vtag + ": disagrees with the additive group " + spec.to_string());
      }
    }
  }
  if (r.pass)
    r.notes.push_back(
        "q in {2,3,4,5}, d in {2,3}: value q, line covers verify, prime q matches Z_p^d");
  r.ms = ms_since(t0);
  return r;
}

SuiteResult Verifier::run(const std::string& name) {
  using Fn = SuiteResult (Verifier::*)();
  static const std::pair<const char*, Fn> table[] = {
      {"a4", &Verifier::suite_a4},
      {"s4", &Verifier::suite_s4},
      {"zpp", &Verifier::suite_zpp},
      {"dihedral", &Verifier::suite_dihedral},
      {"nilpotent", &Verifier::suite_nilpotent},
      {"semidirect", &Verifier::suite_semidirect},
      {"twocolors", &Verifier::suite_twocolors},
      {"torsion", &Verifier::suite_torsion},
      {"oracle", &Verifier::suite_oracle},
      {"bounds", &Verifier::suite_bounds},
      {"coprime", &Verifier::suite_coprime},
      {"quotient", &Verifier::suite_quotient},
      {"frattini", &Verifier::suite_frattini},
      {"vecspace", &Verifier::suite_vecspace},
  };
  for (const auto& [suite, fn] : table) {
    if (name != suite) continue;
    Clock::time_point t0 = Clock::now();
    try {
      SuiteResult r = (this->*fn)();
      r.ms = ms_since(t0);
      return r;
    } catch (const std::exception& ex) {
      SuiteResult r{name, false, {std::string("exception: ") + ex.what()}, 0.0};
      r.ms = ms_since(t0);
      return r;
    }
  }
  std::string known;
  for (const std::string& s : suite_names()) known += (known.empty() ? "" : ", ") + s;
  fail(ErrorKind::InvalidSpec, "unknown suite '" + name + "' (known: " + known + ")");
}

std::vector<SuiteResult> Verifier::run_all() {
  std::vector<SuiteResult> results;
  for (const std::string& name : suite_names()) results.push_back(run(name));
  return results;
}

}  // namespace chigen
