#include "chigen/vecspace.hpp"

#include <algorithm>
#include <unordered_map>

#include "chigen/group.hpp"

namespace chigen {

// ---------------------------------------------------------------------------
// polynomial helpers over Z_p (coefficients ascending)
// ---------------------------------------------------------------------------

namespace {

constexpr long long kFieldSizeCap = 256;

std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& modulus, long long p) {
  std::vector<int> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<int>((prod[i + j] + 1ll * a[i] * b[j]) % p);
  // Reduce by the monic modulus of degree k.
  const int k = static_cast<int>(modulus.size()) - 1;
  for (int d = static_cast<int>(prod.size()) - 1; d >= k; --d) {
    int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < k; ++i) {
      long long v = prod[d - k + i] - 1ll * c * modulus[i];
      prod[d - k + i] = static_cast<int>(((v % p) + p) % p);
    }
  }
  prod.resize(k > 0 ? k : 1);
  return prod;
}

bool poly_is_irreducible(const std::vector<int>& poly, long long p) {
  const int k = static_cast<int>(poly.size()) - 1;
  if (k < 1 || poly[k] != 1) return false;
  if (k == 1) return true;
  // Trial division by every monic polynomial of degree 1..k/2.
  for (int d = 1; 2 * d <= k; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      std::vector<int> div(d + 1);
      long long c = code;
      for (int i = 0; i < d; ++i) { div[i] = static_cast<int>(c % p); c /= p; }
      div[d] = 1;
      // Long division remainder.
      std::vector<int> rem = poly;
      for (int dd = static_cast<int>(rem.size()) - 1; dd >= d; --dd) {
        int lead = rem[dd];
        if (lead == 0) continue;
        for (int i = 0; i <= d; ++i) {
          long long v = rem[dd - d + i] - 1ll * lead * div[i];
          rem[dd - d + i] = static_cast<int>(((v % p) + p) % p);
        }
      }
      bool zero = true;
      for (int i = 0; i < d; ++i)
        if (rem[i] != 0) { zero = false; break; }
      if (zero) return false;
    }
  }
  return true;
}

std::vector<int> digits_of(long long e, long long p, long long k) {
  std::vector<int> d(k);
  for (long long i = 0; i < k; ++i) { d[i] = static_cast<int>(e % p); e /= p; }
  return d;
}

long long value_of(const std::vector<int>& digits, long long p) {
  long long v = 0;
  for (size_t i = digits.size(); i-- > 0;) v = v * p + digits[i];
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteField
// ---------------------------------------------------------------------------

FiniteField FiniteField::make(long long q) {
  if (q < 2) fail(ErrorKind::InvalidSpec, "field size must be >= 2");
  auto factors = factorize(q);
  if (factors.size() != 1)
    fail(ErrorKind::InvalidSpec, std::to_string(q) + " is not a prime power");
  long long p = factors[0].first;
  long long k = factors[0].second;
  if (k == 1) return make(p, 1, {0, 1});
  if (q == 4) return make(2, 2, {1, 1, 1});
  if (q == 8) return make(2, 3, {1, 1, 0, 1});
  if (q == 9) return make(3, 2, {1, 0, 1});
  // No shipped modulus: first irreducible in ascending coefficient order.
  long long count = 1;
  for (long long i = 0; i < k; ++i) count *= p;
  for (long long code = 0; code < count; ++code) {
    std::vector<int> poly = digits_of(code, p, k);
    poly.push_back(1);
    if (poly_is_irreducible(poly, p)) return make(p, k, std::move(poly));
  }
  fail(ErrorKind::Internal, "no irreducible polynomial found");
}

FiniteField FiniteField::make(long long p, long long k, std::vector<int> modulus) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (k < 1) fail(ErrorKind::InvalidSpec, "extension degree must be >= 1");
  FiniteField f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = 1;
  for (long long i = 0; i < k; ++i) {
    f.q_ *= p;
    if (f.q_ > kFieldSizeCap)
      fail(ErrorKind::CapExceeded, "field size exceeds " + std::to_string(kFieldSizeCap));
  }
  if (modulus.size() != static_cast<size_t>(k + 1) || modulus[k] != 1)
    fail(ErrorKind::InvalidSpec, "modulus must be monic of degree k");
  for (int c : modulus)
    if (c < 0 || c >= p) fail(ErrorKind::InvalidSpec, "modulus coefficient out of range");
  if (k > 1 && !poly_is_irreducible(modulus, p))
    fail(ErrorKind::InvalidSpec, "modulus is reducible");
  f.modulus_ = std::move(modulus);
  f.build_tables();
  f.check_axioms();
  return f;
}

void FiniteField::build_tables() {
  const long long q = q_;
  add_.assign(q * q, 0);
  mul_.assign(q * q, 0);
  neg_.assign(q, 0);
  inv_.assign(q, -1);
  for (long long a = 0; a < q; ++a) {
    std::vector<int> da = digits_of(a, p_, k_);
    std::vector<int> na(k_);
    for (long long i = 0; i < k_; ++i) na[i] = static_cast<int>((p_ - da[i]) % p_);
    neg_[a] = static_cast<int>(value_of(na, p_));
    for (long long b = 0; b < q; ++b) {
      std::vector<int> db = digits_of(b, p_, k_);
      std::vector<int> sum(k_);
      for (long long i = 0; i < k_; ++i) sum[i] = static_cast<int>((da[i] + db[i]) % p_);
      add_[a * q + b] = static_cast<int>(value_of(sum, p_));
      std::vector<int> prod = poly_mul_mod(da, db, modulus_, p_);
      prod.resize(k_, 0);
      mul_[a * q + b] = static_cast<int>(value_of(prod, p_));
    }
  }
  for (long long a = 1; a < q; ++a)
    for (long long b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) { inv_[a] = static_cast<int>(b); break; }
}

void FiniteField::check_axioms() const {
  const long long q = q_;
  for (long long a = 0; a < q; ++a) {
    if (add(0, static_cast<int>(a)) != a || mul(1, static_cast<int>(a)) != a)
      fail(ErrorKind::Internal, "field identity axiom fails");
    if (add(static_cast<int>(a), neg(static_cast<int>(a))) != 0)
      fail(ErrorKind::Internal, "field negation axiom fails");
    if (a != 0 && (inv_[a] < 0 || mul(static_cast<int>(a), inv_[a]) != 1))
      fail(ErrorKind::Internal, "field inverse axiom fails");
  }
  for (long long a = 0; a < q; ++a)
    for (long long b = 0; b < q; ++b) {
      if (add(static_cast<int>(a), static_cast<int>(b)) !=
          add(static_cast<int>(b), static_cast<int>(a)))
        fail(ErrorKind::Internal, "field addition is not commutative");
      if (mul(static_cast<int>(a), static_cast<int>(b)) !=
          mul(static_cast<int>(b), static_cast<int>(a)))
        fail(ErrorKind::Internal, "field multiplication is not commutative");
    }
  for (long long a = 0; a < q; ++a)
    for (long long b = 0; b < q; ++b)
      for (long long c = 0; c < q; ++c) {
        int A = static_cast<int>(a), B = static_cast<int>(b), C = static_cast<int>(c);
        if (add(add(A, B), C) != add(A, add(B, C)))
          fail(ErrorKind::Internal, "field addition is not associative");
        if (mul(mul(A, B), C) != mul(A, mul(B, C)))
          fail(ErrorKind::Internal, "field multiplication is not associative");
        if (mul(A, add(B, C)) != add(mul(A, B), mul(A, C)))
          fail(ErrorKind::Internal, "field distributivity fails");
      }
}

int FiniteField::inv(int a) const {
  if (a == 0) fail(ErrorKind::InvalidSpec, "zero has no multiplicative inverse");
  return inv_[a];
}

int FiniteField::mul_order(int a) const {
  if (a == 0) fail(ErrorKind::InvalidSpec, "zero has no multiplicative order");
  int x = a, k = 1;
  while (x != 1) { x = mul(x, a); ++k; }
  return k;
}

int field_single_generator(const FiniteField& f) {
  for (int g = 1; g < f.size(); ++g)
    if (f.mul_order(g) == f.size() - 1) return g;
  fail(ErrorKind::Internal, "multiplicative group has no generator");
}

// ---------------------------------------------------------------------------
// VecSpace
// ---------------------------------------------------------------------------

VecSpace::VecSpace(FiniteField field, int dim, long long cap) : field_(std::move(field)), dim_(dim) {
  if (dim < 1) fail(ErrorKind::InvalidSpec, "dimension must be >= 1");
  long long pts = 1;
  for (int i = 0; i < dim; ++i) {
    pts *= field_.size();
    if (pts > cap)
      fail(ErrorKind::CapExceeded, "point count exceeds cap " + std::to_string(cap));
  }
  points_ = static_cast<int>(pts);
  pow_.resize(dim + 1);
  pow_[0] = 1;
  for (int i = 0; i < dim; ++i) pow_[i + 1] = static_cast<int>(pow_[i] * field_.size());
}

int VecSpace::coordinate(int u, int i) const {
  return (u / pow_[i]) % static_cast<int>(field_.size());
}

int VecSpace::add_points(int u, int v) const {
  int out = 0;
  for (int i = 0; i < dim_; ++i)
    out += field_.add(coordinate(u, i), coordinate(v, i)) * pow_[i];
  return out;
}

int VecSpace::scale_point(int c, int u) const {
  int out = 0;
  for (int i = 0; i < dim_; ++i)
    out += field_.mul(c, coordinate(u, i)) * pow_[i];
  return out;
}

bool VecSpace::is_subspace(const Bitset& s) const {
  if (s.width() != points_ || !s.test(0)) return false;
  std::vector<int> members = s.members();
  for (int u : members) {
    for (int c = 0; c < field_.size(); ++c)
      if (!s.test(scale_point(c, u))) return false;
    for (int v : members)
      if (!s.test(add_points(u, v))) return false;
  }
  return true;
}

std::vector<Bitset> VecSpace::all_subspaces() const {
  // Seed with the spans of single points, then join until stable;
  // adjoining an outside point multiplies a subspace's size by q.
  const int q = static_cast<int>(field_.size());
  std::vector<Bitset> out;
  std::unordered_map<Bitset, int, BitsetHash> seen;
  auto insert = [&](const Bitset& b) {
    if (seen.emplace(b, 0).second) out.push_back(b);
  };

  Bitset trivial(points_);
  trivial.set(0);
  insert(trivial);

  std::vector<Bitset> seeds;
  for (int v = 1; v < points_; ++v) {
    Bitset line(points_);
    for (int c = 0; c < q; ++c) line.set(scale_point(c, v));
    if (seen.emplace(line, 0).second) {
      out.push_back(line);
      seeds.push_back(line);
    }
  }

  auto extend = [&](const Bitset& sub, int v) {
    Bitset bigger(points_);
    for (int u : sub.members())
      for (int c = 0; c < q; ++c)
        bigger.set(add_points(u, scale_point(c, v)));
    return bigger;
  };

  for (size_t i = 0; i < out.size(); ++i) {
    const Bitset base = out[i];
    for (const Bitset& seed : seeds) {
      if (seed.subset_of(base)) continue;
      int v = -1;
      for (int x : seed.members())
        if (x != 0) { v = x; break; }
      insert(extend(base, v));
    }
  }

  std::sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.canonical_less(b);
  });
  return out;
}

std::vector<Bitset> line_cover(const FiniteField& f) {
  const int q = static_cast<int>(f.size());
  VecSpace space(f, 2);
  std::vector<Bitset> lines;
  for (int a = 0; a < q; ++a) {
    // span(1, a): points (c, c*a) at index c + (c*a)*q
    Bitset line(space.points());
    for (int c = 0; c < q; ++c) line.set(c + f.mul(c, a) * q);
    lines.push_back(line);
  }
  Bitset vertical(space.points());
  for (int c = 0; c < q; ++c) vertical.set(c * q);
  lines.push_back(vertical);
  return lines;
}

VecSigmaResult sigma_vec(const FiniteField& f, int dim, long long cap, bool canonical) {
  VecSpace space(f, dim, cap);
  VecSigmaResult result;
  if (dim == 1) {
    // Proper subspaces are just the origin; no cover exists.
    result.value = ChiGenValue::infinite();
    result.generator_point = space.points() > 1 ? 1 : 0;
    return result;
  }

  const int hyper_size = space.points() / static_cast<int>(f.size());
  std::vector<Bitset> hyperplanes;
  for (const Bitset& s : space.all_subspaces())
    if (s.count() == hyper_size) hyperplanes.push_back(s);

  MinCoverResult min = minimum_cover(space.points(), hyperplanes, canonical);
  result.value = ChiGenValue::finite(min.size - 1);
  result.minimal_proven_up_to = min.size - 1;
  for (int i : min.chosen) result.witness.push_back(hyperplanes[i]);
  return result;
}

}  // namespace chigen
