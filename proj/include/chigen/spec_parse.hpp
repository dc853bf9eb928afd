#pragma once

#include <string>
#include <variant>

#include "chigen/group.hpp"

namespace chigen {

// Vector-space request V(q, d).
struct VecSpec {
  long long q = 0;
  int d = 0;
  std::string to_string() const {
    return "V(" + std::to_string(q) + "," + std::to_string(d) + ")";
  }
};

using ParsedSpec = std::variant<GroupSpec, VecSpec>;

// Grammar (case-insensitive, whitespace ignored):
//   spec    := term ('x' term)*
//   term    := 'Z' int | 'D' int | 'S' int | 'A' int
//            | 'SD' '(' int ',' int ',' int ')' | 'V' '(' int ',' int ')'
// Products combine left-associatively and only apply to groups.
// Throws ParseError (with the offending position in the original text)
// or InvalidSpec (structurally fine, invalid parameters).
ParsedSpec parse_spec(const std::string& text);

// parse_spec restricted to groups; rejects V(…) with InvalidSpec.
GroupSpec parse_group_spec(const std::string& text);

}  // namespace chigen
