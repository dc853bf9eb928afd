#include "chigen/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

namespace chigen {

// ---------------------------------------------------------------------------
// arithmetic helpers
// ---------------------------------------------------------------------------

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long long least_prime_factor(long long n) {
  if (n < 2) fail(ErrorKind::Internal, "least_prime_factor needs n >= 2");
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

long long pow_mod(long long base, long long exp, long long mod) {
  if (mod <= 0) fail(ErrorKind::Internal, "pow_mod needs positive modulus");
  long long r = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) r = (r * base) % mod;
    base = (base * base) % mod;
    exp >>= 1;
  }
  return r;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
  if (n < 1) fail(ErrorKind::Internal, "factorize needs n >= 1");
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::LatticeCapExceeded: return "LatticeCapExceeded";
    case ErrorKind::LatticeIncomplete: return "LatticeIncomplete";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotProperSubgroup: return "NotProperSubgroup";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::TrivialGroup: return "TrivialGroup";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::Internal: return "Internal";
  }
  return "Error";
}

// ---------------------------------------------------------------------------
// GroupSpec
// ---------------------------------------------------------------------------

GroupSpec GroupSpec::cyclic(long long n) {
  GroupSpec s;
  s.kind = Kind::Cyclic;
  s.n = n;
  return s;
}

GroupSpec GroupSpec::dihedral(long long n) {
  GroupSpec s;
  s.kind = Kind::Dihedral;
  s.n = n;
  return s;
}

GroupSpec GroupSpec::symmetric(long long n) {
  GroupSpec s;
  s.kind = Kind::Symmetric;
  s.n = n;
  return s;
}

GroupSpec GroupSpec::alternating(long long n) {
  GroupSpec s;
  s.kind = Kind::Alternating;
  s.n = n;
  return s;
}

GroupSpec GroupSpec::semidirect(long long m, long long n, long long a) {
  GroupSpec s;
  s.kind = Kind::Semidirect;
  s.m = m;
  s.n = n;
  s.a = a;
  return s;
}

GroupSpec GroupSpec::product(GroupSpec lhs, GroupSpec rhs) {
  GroupSpec s;
  s.kind = Kind::Product;
  s.factors.push_back(std::move(lhs));
  s.factors.push_back(std::move(rhs));
  return s;
}

namespace {

long long factorial_checked(long long n) {
  long long r = 1;
  for (long long i = 2; i <= n; ++i) {
    if (r > (1ll << 60) / i) fail(ErrorKind::InvalidSpec, "factorial overflow");
    r *= i;
  }
  return r;
}

}  // namespace

long long GroupSpec::order() const {
  switch (kind) {
    case Kind::Cyclic:
      if (n < 1) fail(ErrorKind::InvalidSpec, "cyclic index must be >= 1");
      return n;
    case Kind::Dihedral:
      if (n < 1) fail(ErrorKind::InvalidSpec, "dihedral index must be >= 1");
      return 2 * n;
    case Kind::Symmetric:
      if (n < 1) fail(ErrorKind::InvalidSpec, "symmetric index must be >= 1");
      if (n > 20) fail(ErrorKind::InvalidSpec, "symmetric index too large");
      return factorial_checked(n);
    case Kind::Alternating:
      if (n < 1) fail(ErrorKind::InvalidSpec, "alternating index must be >= 1");
      if (n > 20) fail(ErrorKind::InvalidSpec, "alternating index too large");
      return std::max<long long>(1, factorial_checked(n) / 2);
    case Kind::Semidirect: {
      if (m < 1 || n < 1) fail(ErrorKind::InvalidSpec, "semidirect orders must be >= 1");
      if (a < 0 || a >= m) fail(ErrorKind::InvalidSpec, "semidirect exponent must lie in [0, m)");
      if (std::gcd(a, m) != 1) fail(ErrorKind::InvalidSpec, "semidirect exponent not coprime to kernel order");
      if (pow_mod(a, n, m) != 1 % m)
        fail(ErrorKind::InvalidSpec, "semidirect exponent order does not divide the complement order");
      if (m > (1ll << 60) / n) fail(ErrorKind::InvalidSpec, "semidirect order overflow");
      return m * n;
    }
    case Kind::Product: {
      if (factors.size() != 2) fail(ErrorKind::Internal, "product spec needs two factors");
      long long lo = factors[0].order();
      long long ro = factors[1].order();
      if (lo > (1ll << 60) / ro) fail(ErrorKind::InvalidSpec, "product order overflow");
      return lo * ro;
    }
  }
  fail(ErrorKind::Internal, "unknown spec kind");
}

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::Cyclic: return "Z" + std::to_string(n);
    case Kind::Dihedral: return "D" + std::to_string(n);
    case Kind::Symmetric: return "S" + std::to_string(n);
    case Kind::Alternating: return "A" + std::to_string(n);
    case Kind::Semidirect:
      return "SD(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(a) + ")";
    case Kind::Product:
      return factors[0].to_string() + "x" + factors[1].to_string();
  }
  return "?";
}

// ---------------------------------------------------------------------------
// GroupTable validation and construction
// ---------------------------------------------------------------------------

GroupTable::GroupTable(int order, std::vector<int> mul, std::vector<std::string> labels,
                       std::string name, std::optional<GroupSpec> spec)
    : n_(order),
      mul_(std::move(mul)),
      labels_(std::move(labels)),
      name_(std::move(name)),
      spec_(std::move(spec)) {
  if (n_ < 1) fail(ErrorKind::InvalidSpec, "group order must be >= 1");
  if (mul_.size() != static_cast<size_t>(n_) * n_)
    fail(ErrorKind::InvalidSpec, "multiplication table has wrong size");
  if (labels_.size() != static_cast<size_t>(n_))
    fail(ErrorKind::InvalidSpec, "label list has wrong size");
  validate();
}

void GroupTable::validate() {
  const int n = n_;
  for (int v : mul_)
    if (v < 0 || v >= n) fail(ErrorKind::InvalidSpec, "table entry out of range");

  // Latin square: every row and column is a permutation.
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      int v = mul(a, b);
      if (seen[v]) fail(ErrorKind::InvalidSpec, "row " + std::to_string(a) + " repeats an entry");
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      int v = mul(b, a);
      if (seen[v]) fail(ErrorKind::InvalidSpec, "column " + std::to_string(a) + " repeats an entry");
      seen[v] = 1;
    }
  }

  // Two-sided identity.
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n; ++b)
      if (mul(a, b) != b || mul(b, a) != b) { ok = false; break; }
    if (ok) e = a;
  }
  if (e < 0) fail(ErrorKind::InvalidSpec, "table has no identity element");
  identity_ = e;

  // Two-sided inverses.
  inv_.assign(n, -1);
  auto& inv = inv_;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul(a, b) == e) {
        if (mul(b, a) != e)
          fail(ErrorKind::InvalidSpec, "element " + std::to_string(a) + " has one-sided inverse");
        inv[a] = b;
        break;
      }
    }
    if (inv[a] < 0) fail(ErrorKind::InvalidSpec, "element " + std::to_string(a) + " has no inverse");
  }

  // Associativity: full sweep for small tables, sampled triples above.
  if (n <= kExhaustiveAssocBound) {
    const int* m = mul_.data();
    for (int a = 0; a < n; ++a) {
      const int* arow = m + static_cast<size_t>(a) * n;
      for (int b = 0; b < n; ++b) {
        const int ab = arow[b];
        const int* abrow = m + static_cast<size_t>(ab) * n;
        const int* brow = m + static_cast<size_t>(b) * n;
        for (int c = 0; c < n; ++c) {
          if (abrow[c] != arow[brow[c]])
            fail(ErrorKind::InvalidSpec, "associativity fails at (" + std::to_string(a) + "," +
                                             std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  } else {
    std::mt19937_64 rng(0x5eedull * static_cast<unsigned long long>(n) + 1);
    std::uniform_int_distribution<int> pick(0, n - 1);
    long long trials = 10ll * n * n;
    for (long long t = 0; t < trials; ++t) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        fail(ErrorKind::InvalidSpec, "associativity fails at sampled triple");
    }
  }
}

int GroupTable::element_order(int g) const {
  int x = g;
  int k = 1;
  while (x != identity_) {
    x = mul(x, g);
    ++k;
  }
  return k;
}

bool GroupTable::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<int> GroupTable::generators() const {
  std::vector<int> gens;
  ElementSet cur = closure(*this, gens);
  while (cur.size() < n_) {
    int next = -1;
    for (int i = 0; i < n_; ++i)
      if (!cur.contains(i)) { next = i; break; }
    gens.push_back(next);
    cur = closure(*this, gens);
  }
  return gens;
}

// ---------------------------------------------------------------------------
// element sets and closures
// ---------------------------------------------------------------------------

bool ElementSet::is_subgroup() const {
  if (!group) return false;
  std::vector<int> elems = elements();
  if (elems.empty()) return false;
  for (int a : elems) {
    if (!bits.test(group->inv(a))) return false;
    for (int b : elems)
      if (!bits.test(group->mul(a, b))) return false;
  }
  return bits.test(group->identity());
}

ElementSet closure(const GroupTable& g, const std::vector<int>& gens) {
  ElementSet s(g);
  std::vector<int> elems;
  auto push = [&](int x) {
    if (!s.contains(x)) {
      s.add(x);
      elems.push_back(x);
    }
  };
  push(g.identity());
  for (int x : gens) {
    if (x < 0 || x >= g.order()) fail(ErrorKind::Internal, "generator index out of range");
    push(x);
  }
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      push(g.mul(elems[i], elems[j]));
      push(g.mul(elems[j], elems[i]));
    }
  }
  return s;
}

Bitset extend_subgroup(const GroupTable& g, const Bitset& sub,
                       const std::vector<int>& sub_gens, int extra) {
  if (sub.test(extra)) return sub;
  Bitset in = sub;
  const std::vector<int> base = sub.members();
  std::vector<int> gens = sub_gens;
  gens.push_back(extra);
  // BFS over left cosets of `sub`; each new coset is filled in one pass.
  std::vector<int> reps;
  reps.push_back(g.identity());
  for (size_t i = 0; i < reps.size(); ++i) {
    int r = reps[i];
    for (int s : gens) {
      int t = g.mul(s, r);
      if (!in.test(t)) {
        reps.push_back(t);
        for (int h : base) in.set(g.mul(t, h));
      }
    }
  }
  return in;
}

ElementSet cyclic_subgroup(const GroupTable& g, int gen) {
  ElementSet s(g);
  int x = g.identity();
  s.add(x);
  x = gen;
  while (!s.contains(x)) {
    s.add(x);
    x = g.mul(x, gen);
  }
  return s;
}

// ---------------------------------------------------------------------------
// quotient and product
// ---------------------------------------------------------------------------

GroupTable quotient(const GroupTable& g, const ElementSet& normal,
                    std::vector<int>* projection) {
  if (normal.group != &g) fail(ErrorKind::NotSubgroup, "subgroup belongs to a different group");
  if (!normal.is_subgroup()) fail(ErrorKind::NotSubgroup, "quotient needs a subgroup");
  const std::vector<int> nelems = normal.elements();
  for (int c : g.generators())
    for (int h : nelems)
      if (!normal.contains(g.mul(g.mul(c, h), g.inv(c))))
        fail(ErrorKind::NotNormal, "subgroup is not closed under conjugation");

  const int n = g.order();
  std::vector<int> coset(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : nelems) coset[g.mul(x, h)] = id;
  }

  const int q = static_cast<int>(reps.size());
  std::vector<int> qmul(static_cast<size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      qmul[static_cast<size_t>(i) * q + j] = coset[g.mul(reps[i], reps[j])];

  std::vector<std::string> labels(q);
  for (int i = 0; i < q; ++i) labels[i] = g.label(reps[i]);
  if (projection) *projection = coset;
  return GroupTable(q, std::move(qmul), std::move(labels),
                    g.name() + "/N" + std::to_string(normal.size()));
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b, long long order_cap) {
  long long order = static_cast<long long>(a.order()) * b.order();
  if (order > order_cap)
    fail(ErrorKind::OrderCapExceeded,
         "product order " + std::to_string(order) + " exceeds cap " + std::to_string(order_cap));
  const int nb = b.order(), n = static_cast<int>(order);
  std::vector<int> mul(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    int ia = i / nb, ib = i % nb;
    for (int j = 0; j < n; ++j) {
      int ja = j / nb, jb = j % nb;
      mul[static_cast<size_t>(i) * n + j] = a.mul(ia, ja) * nb + b.mul(ib, jb);
    }
  }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i)
    labels[i] = "(" + a.label(i / nb) + "," + b.label(i % nb) + ")";
  std::optional<GroupSpec> spec;
  if (a.spec() && b.spec()) spec = GroupSpec::product(*a.spec(), *b.spec());
  return GroupTable(n, std::move(mul), std::move(labels),
                    a.name() + "x" + b.name(), std::move(spec));
}

// ---------------------------------------------------------------------------
// predicates
// ---------------------------------------------------------------------------

int min_nonidentity_order(const GroupTable& g) {
  if (g.order() < 2) fail(ErrorKind::TrivialGroup, "trivial group has no non-identity element");
  int best = g.order() + 1;
  for (int x = 0; x < g.order(); ++x) {
    if (x == g.identity()) continue;
    best = std::min(best, g.element_order(x));
    if (best == 2) break;
  }
  // Cauchy: the least non-identity order is the least prime dividing |G|.
  if (best != least_prime_factor(g.order()))
    fail(ErrorKind::Internal, "minimum element order disagrees with least prime divisor");
  return best;
}

CyclicWitness is_cyclic(const GroupTable& g) {
  if (g.order() == 1) return {true, g.identity()};
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order()) return {true, x};
  return {false, std::nullopt};
}

NilpotentInfo is_nilpotent(const GroupTable& g) {
  NilpotentInfo info;
  const int n = g.order();
  std::vector<int> orders(n);
  for (int x = 0; x < n; ++x) orders[x] = g.element_order(x);

  std::vector<ElementSet> sylows;
  std::vector<long long> primes;
  for (auto [p, e] : factorize(n)) {
    long long target = 1;
    for (int i = 0; i < e; ++i) target *= p;
    ElementSet s(g);
    for (int x = 0; x < n; ++x) {
      int o = orders[x];
      while (o % p == 0) o = static_cast<int>(o / p);
      if (o == 1) s.add(x);  // order is a power of p (p^0 for the identity)
    }
    if (s.size() != target) return info;  // p-power elements exceed one Sylow subgroup
    std::vector<int> elems = s.elements();
    for (int a : elems)
      for (int b : elems)
        if (!s.contains(g.mul(a, b))) return info;
    primes.push_back(p);
    sylows.push_back(std::move(s));
  }
  info.nilpotent = true;
  info.primes = std::move(primes);
  info.sylows = std::move(sylows);
  return info;
}

ElementSet commutator_subgroup(const GroupTable& g) {
  std::vector<int> comms;
  Bitset seen(g.order());
  for (int x = 0; x < g.order(); ++x) {
    for (int y = 0; y < g.order(); ++y) {
      int c = g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
      if (!seen.test(c)) {
        seen.set(c);
        comms.push_back(c);
      }
    }
  }
  return closure(g, comms);
}

namespace {

int elem_pow(const GroupTable& g, int x, long long k) {
  int r = g.identity();
  int base = x;
  while (k > 0) {
    if (k & 1) r = g.mul(r, base);
    base = g.mul(base, base);
    k >>= 1;
  }
  return r;
}

}  // namespace

int abelian_p_rank(const GroupTable& g, long long p) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (!g.is_abelian()) fail(ErrorKind::NotAbelian, "p-rank needs an abelian group");
  long long count = 0;
  for (int x = 0; x < g.order(); ++x)
    if (elem_pow(g, x, p) == g.identity()) ++count;
  int r = 0;
  long long q = 1;
  while (q < count) { q *= p; ++r; }
  if (q != count) fail(ErrorKind::Internal, "p-torsion count is not a power of p");
  return r;
}

// ---------------------------------------------------------------------------
// builders
// ---------------------------------------------------------------------------

namespace {

GroupTable build_cyclic(long long n) {
  const int N = static_cast<int>(n);
  std::vector<int> mul(static_cast<size_t>(N) * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      mul[static_cast<size_t>(i) * N + j] = (i + j) % N;
  std::vector<std::string> labels(N);
  for (int i = 0; i < N; ++i) labels[i] = std::to_string(i);
  return GroupTable(N, std::move(mul), std::move(labels), "Z" + std::to_string(n),
                    GroupSpec::cyclic(n));
}

// Elements are s^a r^i, index a*n + i; s r s = r^-1.
GroupTable build_dihedral(long long nn) {
  const int n = static_cast<int>(nn);
  const int N = 2 * n;
  std::vector<int> mul(static_cast<size_t>(N) * N);
  auto idx = [&](int a, int i) { return a * n + i; };
  for (int a = 0; a < 2; ++a)
    for (int i = 0; i < n; ++i)
      for (int b = 0; b < 2; ++b)
        for (int j = 0; j < n; ++j) {
          int rot = b ? ((j - i) % n + n) % n : (i + j) % n;
          mul[static_cast<size_t>(idx(a, i)) * N + idx(b, j)] = idx(a ^ b, rot);
        }
  std::vector<std::string> labels(N);
  for (int i = 0; i < n; ++i) {
    labels[idx(0, i)] = i == 0 ? "e" : (i == 1 ? "r" : "r" + std::to_string(i));
    labels[idx(1, i)] = i == 0 ? "s" : (i == 1 ? "sr" : "sr" + std::to_string(i));
  }
  return GroupTable(N, std::move(mul), std::move(labels), "D" + std::to_string(nn),
                    GroupSpec::dihedral(nn));
}

bool perm_is_even(const std::vector<int>& p) {
  int inversions = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

std::string cycle_label(const std::vector<int>& p) {
  std::string out;
  std::vector<char> done(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

GroupTable build_permutation_group(long long points, bool even_only, const std::string& name,
                                   const GroupSpec& spec) {
  const int k = static_cast<int>(points);
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (!even_only || perm_is_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const int N = static_cast<int>(perms.size());
  std::unordered_map<uint64_t, int> index;
  index.reserve(N * 2);
  auto encode = [&](const std::vector<int>& q) {
    uint64_t key = 0;
    for (int v : q) key = key * static_cast<uint64_t>(k) + static_cast<uint64_t>(v);
    return key;
  };
  for (int i = 0; i < N; ++i) index.emplace(encode(perms[i]), i);

  std::vector<int> mul(static_cast<size_t>(N) * N);
  std::vector<int> comp(k);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      for (int x = 0; x < k; ++x) comp[x] = perms[i][perms[j][x]];
      mul[static_cast<size_t>(i) * N + j] = index.at(encode(comp));
    }

  std::vector<std::string> labels(N);
  for (int i = 0; i < N; ++i) labels[i] = cycle_label(perms[i]);
  return GroupTable(N, std::move(mul), std::move(labels), name, spec);
}

// Elements are x^i y^j, index i*n + j; y x y^-1 = x^a.
GroupTable build_semidirect(long long mm, long long nn, long long aa) {
  const int m = static_cast<int>(mm), n = static_cast<int>(nn);
  const int N = m * n;
  std::vector<long long> apow(n);
  for (int j = 0; j < n; ++j) apow[j] = pow_mod(aa, j, mm);
  std::vector<int> mul(static_cast<size_t>(N) * N);
  auto idx = [&](int i, int j) { return i * n + j; };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < n; ++l) {
          int ker = static_cast<int>((i + k * apow[j]) % m);
          mul[static_cast<size_t>(idx(i, j)) * N + idx(k, l)] = idx(ker, (j + l) % n);
        }
  std::vector<std::string> labels(N);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      std::string s;
      if (i > 0) s += i == 1 ? "x" : "x" + std::to_string(i);
      if (j > 0) s += j == 1 ? "y" : "y" + std::to_string(j);
      labels[idx(i, j)] = s.empty() ? "e" : s;
    }
  GroupSpec spec = GroupSpec::semidirect(mm, nn, aa);
  return GroupTable(N, std::move(mul), std::move(labels), spec.to_string(), spec);
}

}  // namespace

GroupTable GroupTable::build(const GroupSpec& spec, long long order_cap) {
  long long order = spec.order();
  if (order > order_cap)
    fail(ErrorKind::OrderCapExceeded,
         spec.to_string() + " has order " + std::to_string(order) + ", cap is " +
             std::to_string(order_cap));
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic:
      return build_cyclic(spec.n);
    case GroupSpec::Kind::Dihedral:
      return build_dihedral(spec.n);
    case GroupSpec::Kind::Symmetric:
      return build_permutation_group(spec.n, false, spec.to_string(), spec);
    case GroupSpec::Kind::Alternating:
      return build_permutation_group(spec.n, true, spec.to_string(), spec);
    case GroupSpec::Kind::Semidirect:
      return build_semidirect(spec.m, spec.n, spec.a);
    case GroupSpec::Kind::Product: {
      GroupTable lhs = build(spec.factors[0], order_cap);
      GroupTable rhs = build(spec.factors[1], order_cap);
      return direct_product(lhs, rhs, order_cap);
    }
  }
  fail(ErrorKind::Internal, "unknown spec kind");
}

}  // namespace chigen
