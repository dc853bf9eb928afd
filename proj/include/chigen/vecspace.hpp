#pragma once

#include <optional>
#include <vector>

#include "chigen/bitset.hpp"
#include "chigen/cover.hpp"
#include "chigen/error.hpp"

namespace chigen {

// Point-count ceiling q^d for vector-space enumeration.
inline constexpr long long kDefaultVecCap = 625;

// GF(p^k) with complete addition/multiplication tables.  Elements are
// indexed 0..q-1; index e encodes the polynomial whose coefficient of
// x^i is the i-th base-p digit of e, so 0 and 1 are the field's zero
// and one.  Construction checks the field axioms exhaustively.
class FiniteField {
 public:
  // Prime q, or a prime power with a shipped default modulus
  // (x^2+x+1 for q=4, x^3+x+1 for q=8, x^2+1 for q=9); other prime
  // powers fall back to the first irreducible in coefficient order.
  static FiniteField make(long long q);

  // Explicit modulus: monic, degree k, coefficients ascending.
  static FiniteField make(long long p, long long k, std::vector<int> modulus);

  long long characteristic() const { return p_; }
  long long degree() const { return k_; }
  long long size() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  int zero() const { return 0; }
  int one() const { return 1; }
  int add(int a, int b) const { return add_[static_cast<size_t>(a) * q_ + b]; }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const;  // throws on zero

  // Multiplicative order of a nonzero element.
  int mul_order(int a) const;

 private:
  FiniteField() = default;
  void build_tables();
  void check_axioms() const;

  long long p_ = 0, k_ = 0, q_ = 0;
  std::vector<int> modulus_;  // degree k, monic, ascending; {x} itself for k=1
  std::vector<int> add_, mul_, neg_, inv_;
};

// Least element generating the multiplicative group (order q-1).
int field_single_generator(const FiniteField& f);

// F^d with points indexed 0..q^d-1 by base-q digits (digit i is
// coordinate i).
class VecSpace {
 public:
  VecSpace(FiniteField field, int dim, long long cap = kDefaultVecCap);

  const FiniteField& field() const { return field_; }
  int dim() const { return dim_; }
  int points() const { return points_; }

  int add_points(int u, int v) const;
  int scale_point(int c, int u) const;
  int coordinate(int u, int i) const;

  bool is_subspace(const Bitset& s) const;

  // Every subspace (trivial and full included), sorted by
  // (size, canonical bit order).
  std::vector<Bitset> all_subspaces() const;

 private:
  FiniteField field_;
  int dim_ = 0;
  int points_ = 0;
  std::vector<int> pow_;  // q^i for digit extraction
};

// The q+1 one-dimensional subspaces of F^2: span(1, a) for each a, plus
// span(0, 1).  They cover F^2 and intersect pairwise in the origin.
std::vector<Bitset> line_cover(const FiniteField& f);

struct VecSigmaResult {
  ChiGenValue value = ChiGenValue::infinite();
  // Minimal subspace cover (value+1 hyperplanes) when finite.
  std::vector<Bitset> witness;
  int minimal_proven_up_to = 0;
  // A spanning point (any nonzero) when dim = 1 makes the value infinite.
  std::optional<int> generator_point;
};

// Minimum proper-subspace cover of F^d, exact search over hyperplanes.
// dim 1 has no proper-subspace cover at all.
VecSigmaResult sigma_vec(const FiniteField& f, int dim, long long cap = kDefaultVecCap,
                         bool canonical = true);

}  // namespace chigen
