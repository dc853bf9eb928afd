#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chigen/bitset.hpp"
#include "chigen/error.hpp"

namespace chigen {

// Default ceiling on group order.  Constructions that would exceed it
// throw OrderCapExceeded; callers may raise the cap per call.
inline constexpr long long kDefaultOrderCap = 512;

// Orders up to this bound get the full n^3 associativity sweep at
// construction; larger tables are spot-checked on 10*n^2 random triples.
inline constexpr long long kExhaustiveAssocBound = 512;

// Constructor AST for the supported group families.
//
//   cyclic(n)             Z_n
//   dihedral(n)           symmetries of the n-gon, order 2n
//   symmetric(n)          S_n, order n!
//   alternating(n)        A_n, order n!/2
//   semidirect(m, n, a)   Z_m x| Z_n, generator y of Z_n acting by
//                         y x y^-1 = x^a; requires gcd(a, m) = 1 and
//                         a^n = 1 (mod m)
//   product(lhs, rhs)     direct product, componentwise
struct GroupSpec {
  enum class Kind { Cyclic, Dihedral, Symmetric, Alternating, Semidirect, Product };

  Kind kind = Kind::Cyclic;
  long long n = 1;   // cyclic / dihedral / symmetric / alternating / semidirect
  long long m = 0;   // semidirect kernel order
  long long a = 0;   // semidirect action exponent
  std::vector<GroupSpec> factors;  // product children, size 2

  static GroupSpec cyclic(long long n);
  static GroupSpec dihedral(long long n);
  static GroupSpec symmetric(long long n);
  static GroupSpec alternating(long long n);
  static GroupSpec semidirect(long long m, long long n, long long a);
  static GroupSpec product(GroupSpec lhs, GroupSpec rhs);

  // Validates parameters (throws InvalidSpec) and returns the group order.
  long long order() const;

  // Canonical text form in the CLI grammar, e.g. "Z2xZ4", "SD(3,4,2)".
  std::string to_string() const;
};

// Finite group as a complete multiplication table over element indices
// 0..order-1.  Construction validates the Latin-square property, a
// two-sided identity, inverses, and associativity (exhaustively up to
// kExhaustiveAssocBound, sampled above).
class GroupTable {
 public:
  // Builds the table for a spec.  Throws InvalidSpec / OrderCapExceeded.
  static GroupTable build(const GroupSpec& spec, long long order_cap = kDefaultOrderCap);

  // Wraps a raw table; `name` is the provenance string shown in output.
  // Validates the group axioms and throws InvalidSpec on any failure.
  GroupTable(int order, std::vector<int> mul, std::vector<std::string> labels,
             std::string name, std::optional<GroupSpec> spec = std::nullopt);

  int order() const { return n_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  const std::optional<GroupSpec>& spec() const { return spec_; }

  // Least g-power count reaching the identity; divides order().
  int element_order(int g) const;

  bool is_abelian() const;

  // Small generating set, chosen greedily by least element index.
  std::vector<int> generators() const;

 private:
  void validate();

  int n_ = 0;
  int identity_ = 0;
  std::vector<int> mul_;     // row-major n x n
  std::vector<int> inv_;
  std::vector<std::string> labels_;
  std::string name_;
  std::optional<GroupSpec> spec_;
};

// Subset of a group's elements as a bit vector plus owner pointer.
// Value type; comparisons require the same owning group.
struct ElementSet {
  const GroupTable* group = nullptr;
  Bitset bits;

  ElementSet() = default;
  explicit ElementSet(const GroupTable& g) : group(&g), bits(g.order()) {}
  ElementSet(const GroupTable& g, const Bitset& b) : group(&g), bits(b) {}

  int size() const { return bits.count(); }
  bool contains(int i) const { return bits.test(i); }
  void add(int i) { bits.set(i); }
  std::vector<int> elements() const { return bits.members(); }

  // Nonempty, closed under the table, closed under inverses.
  bool is_subgroup() const;

  bool operator==(const ElementSet& o) const { return bits == o.bits; }
};

// Subgroup generated by `gens`: BFS closure under products.
ElementSet closure(const GroupTable& g, const std::vector<int>& gens);

// Subgroup generated by an existing subgroup plus one element.  `sub`
// must be closed; runs in time proportional to the result's order.
Bitset extend_subgroup(const GroupTable& g, const Bitset& sub,
                       const std::vector<int>& sub_gens, int extra);

// Cyclic subgroup <g>.
ElementSet cyclic_subgroup(const GroupTable& g, int gen);

// Quotient G/N.  Throws NotSubgroup / NotNormal.  Coset labels come from
// the least element index in each coset.  When `projection` is given it
// receives the coset index of every element of G.
GroupTable quotient(const GroupTable& g, const ElementSet& normal,
                    std::vector<int>* projection = nullptr);

GroupTable direct_product(const GroupTable& a, const GroupTable& b,
                          long long order_cap = kDefaultOrderCap);

// Least order among non-identity elements; equals the least prime
// divisor of |G| (cross-checked internally).  Throws TrivialGroup.
int min_nonidentity_order(const GroupTable& g);

struct CyclicWitness {
  bool cyclic = false;
  std::optional<int> generator;  // element of full order when cyclic
};
CyclicWitness is_cyclic(const GroupTable& g);

struct NilpotentInfo {
  bool nilpotent = false;
  // One entry per prime divisor of |G| in increasing order; each is the
  // full Sylow subgroup (present only when nilpotent).
  std::vector<long long> primes;
  std::vector<ElementSet> sylows;
};
NilpotentInfo is_nilpotent(const GroupTable& g);

// Derived subgroup [G,G]: closure of all commutators.
ElementSet commutator_subgroup(const GroupTable& g);

// For abelian G and prime p: the rank r with #{x : x^p = e} = p^r.
// Throws NotAbelian / NotPrime.
int abelian_p_rank(const GroupTable& g, long long p);

// Shared arithmetic helpers.
bool is_prime(long long n);
long long least_prime_factor(long long n);  // n >= 2
long long pow_mod(long long base, long long exp, long long mod);
std::vector<std::pair<long long, int>> factorize(long long n);  // n >= 1

}  // namespace chigen
