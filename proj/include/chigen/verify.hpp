#pragma once

#include <memory>
#include <string>
#include <vector>

#include "chigen/cover.hpp"
#include "chigen/group.hpp"
#include "chigen/lattice.hpp"

namespace chigen {

// Outcome of one verification suite.
struct SuiteResult {
  std::string name;
  bool pass = false;
  // Failure details (capped), plus one headline fact when passing.
  std::vector<std::string> notes;
  double ms = 0.0;
};

// The consistency suites backing this project's correctness claims: the
// closed-form paths are re-derived by exact search, family by family, and
// the structural invariants are checked across a built-in corpus.
//
// Corpus-wide suites share one analysis pass per corpus entry (table,
// subgroup lattice, exact search, dispatcher result), computed on first
// use and reused across suites.
class Verifier {
 public:
  explicit Verifier(long long oracle_budget = kDefaultColoringBudget)
      : oracle_budget_(oracle_budget) {}

  // Suite names in report order.
  static const std::vector<std::string>& suite_names();

  // Runs one suite by name; throws InvalidSpec for an unknown name.
  // An exception escaping a suite body is converted into a failed result.
  SuiteResult run(const std::string& name);

  std::vector<SuiteResult> run_all();

 private:
  struct Entry {
    std::string spec;
    std::unique_ptr<GroupTable> group;  // stable address for back-pointers
    SubgroupLattice lattice;
    ChiGenResult exact;       // sigma_search ground truth
    ChiGenResult dispatched;  // main dispatcher result
  };

  const std::vector<Entry>& corpus();

  SuiteResult suite_a4();
  SuiteResult suite_s4();
  SuiteResult suite_zpp();
  SuiteResult suite_dihedral();
  SuiteResult suite_nilpotent();
  SuiteResult suite_semidirect();
  SuiteResult suite_twocolors();
  SuiteResult suite_torsion();
  SuiteResult suite_oracle();
  SuiteResult suite_bounds();
  SuiteResult suite_coprime();
  SuiteResult suite_quotient();
  SuiteResult suite_frattini();
  SuiteResult suite_vecspace();

  std::vector<Entry> corpus_;
  bool corpus_ready_ = false;
  long long oracle_budget_;
};

}  // namespace chigen
