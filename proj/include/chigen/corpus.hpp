#pragma once

#include <string>
#include <vector>

namespace chigen {

/// Built-in corpus of group descriptions exercised by the verification
/// suites. Deterministic order, every entry parses with parse_group_spec,
/// and every order is at most 360.
const std::vector<std::string>& corpus_specs();

}  // namespace chigen
