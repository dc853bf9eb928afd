#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chigen/group.hpp"
#include "chigen/lattice.hpp"

namespace chigen {

// Ceiling on k^|G| for the coloring oracle's full enumeration.
inline constexpr long long kDefaultColoringBudget = 10000000;

// A family of proper subgroups proposed as a cover of the group.
struct CoverCertificate {
  std::vector<ElementSet> parts;
  bool covers = false;
  bool irredundant = false;
  // "No cover of size <= this exists" was verified by exhaustive search.
  int minimal_proven_up_to = 0;
};

// Largest k such that every k-coloring of the group has a monochromatic
// generating set.  Finite exactly when the group is not cyclic; Infinite
// carries a generator instead of a value.
class ChiGenValue {
 public:
  static ChiGenValue finite(int k) { return ChiGenValue(k); }
  static ChiGenValue infinite() { return ChiGenValue(); }

  bool is_infinite() const { return !value_.has_value(); }
  int value() const {
    if (!value_) fail(ErrorKind::Internal, "no finite value on an infinite result");
    return *value_;
  }

  bool operator==(const ChiGenValue& o) const { return value_ == o.value_; }
  bool operator!=(const ChiGenValue& o) const { return value_ != o.value_; }

  // Total order with Infinite on top, matching quotient monotonicity.
  bool operator<=(const ChiGenValue& o) const {
    if (o.is_infinite()) return true;
    if (is_infinite()) return false;
    return value() <= o.value();
  }

  std::string to_string() const {
    return is_infinite() ? "infinite" : std::to_string(value());
  }

 private:
  ChiGenValue() = default;
  explicit ChiGenValue(int k) : value_(k) {}
  std::optional<int> value_;
};

struct ChiGenResult {
  ChiGenValue value = ChiGenValue::infinite();
  // Minimal cover of size value+1, attached by search paths.
  std::optional<CoverCertificate> witness;
  // Element of full order, attached when the value is infinite.
  std::optional<int> generator;
  // How the value was obtained: search | cyclic | nilpotent | dihedral |
  // semidirect | frattini+<inner>.
  std::string method;
};

// Exact set-cover core shared by the group and vector-space searches.
// Parts must be given in the canonical order callers want witnesses in.
// Iterative deepening proves minimality; `chosen` is the
// lexicographically least minimum cover when `canonical` is set,
// otherwise the first one found.  Fails (Internal) when the parts do
// not cover the universe at all.
struct MinCoverResult {
  int size = 0;
  std::vector<int> chosen;  // ascending indices into parts
};
MinCoverResult minimum_cover(int universe, const std::vector<Bitset>& parts, bool canonical);

// Union test: every part must be a proper subgroup (NotProperSubgroup).
bool is_cover(const GroupTable& g, const std::vector<ElementSet>& parts);

struct IrredundanceReport {
  bool irredundant = false;
  // For part i, an element no other part contains (-1 when none exists).
  std::vector<int> private_witness;
};
IrredundanceReport is_irredundant(const GroupTable& g, const std::vector<ElementSet>& parts);

// Exact minimum subgroup-cover search.  Cyclic groups return Infinite;
// otherwise searches covers by maximal subgroups (any proper-subgroup
// cover enlarges to one) with iterative deepening, so the first hit is
// minimum.  `canonical` additionally makes the witness the
// lexicographically least minimal cover.  Throws LatticeIncomplete.
ChiGenResult sigma_search(const GroupTable& g, const SubgroupLattice& lattice,
                          bool canonical = true);

// Convenience overload that builds the lattice itself.
ChiGenResult sigma_search(const GroupTable& g, long long lattice_cap = kDefaultLatticeCap,
                          bool canonical = true);

// True iff every k-coloring of the elements has a monochromatic
// generating set, by direct enumeration up to color permutation.
// Throws BudgetExceeded when k^|G| exceeds the budget.
bool coloring_oracle(const GroupTable& g, int k, long long budget = kDefaultColoringBudget);

}  // namespace chigen
