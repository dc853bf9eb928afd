#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chigen/cover.hpp"
#include "chigen/group.hpp"

namespace chigen {

/// Machine-readable result of one chigen/cover computation.
///
/// The JSON form is versioned through the "schema" field (currently 1) so
/// downstream consumers can detect layout changes. `chigen` serializes as the
/// string "infinite" or as an integer; `sigma` is null exactly when `chigen`
/// is infinite, and otherwise equals chigen + 1.
struct OutputRecord {
  std::string spec;
  int order = 0;
  ChiGenValue chigen = ChiGenValue::finite(2);
  std::string method;
  // Each part is the sorted list of element indices of one proper subgroup.
  std::optional<std::vector<std::vector<int>>> witness;
  std::optional<int> generator;
  double timing_ms = 0.0;
  std::vector<std::string> caps_hit;
};

/// Builds a record from a computation result. `spec` is echoed verbatim.
OutputRecord make_record(const std::string& spec, const GroupTable& g,
                         const ChiGenResult& result, double timing_ms);

nlohmann::json record_to_json(const OutputRecord& rec);

/// Inverse of record_to_json. Fails (ParseError) on missing or ill-typed
/// fields or an unsupported schema version.
OutputRecord record_from_json(const nlohmann::json& j);

}  // namespace chigen
