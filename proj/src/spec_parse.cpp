#include "chigen/spec_parse.hpp"

#include <cctype>

namespace chigen {

namespace {

// Uppercased text with whitespace removed; `origin[i]` maps back to the
// character's position in the user's input for error messages.
struct Cursor {
  std::string text;
  std::vector<size_t> origin;
  size_t pos = 0;

  explicit Cursor(const std::string& raw) {
    for (size_t i = 0; i < raw.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) continue;
      text += static_cast<char>(std::toupper(static_cast<unsigned char>(raw[i])));
      origin.push_back(i);
    }
  }

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }

  [[noreturn]] void error(const std::string& what) const {
    size_t at = pos < origin.size() ? origin[pos] : (origin.empty() ? 0 : origin.back() + 1);
    fail(ErrorKind::ParseError, what + " at position " + std::to_string(at));
  }

  void expect(char c) {
    if (peek() != c) error(std::string("expected '") + c + "'");
    ++pos;
  }

  long long integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected a number");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text[pos] - '0');
      if (v > (1ll << 40)) error("number too large");
      ++pos;
    }
    return v;
  }
};

ParsedSpec parse_term(Cursor& cur) {
  switch (cur.peek()) {
    case 'Z': {
      ++cur.pos;
      return GroupSpec::cyclic(cur.integer());
    }
    case 'D': {
      ++cur.pos;
      return GroupSpec::dihedral(cur.integer());
    }
    case 'A': {
      ++cur.pos;
      return GroupSpec::alternating(cur.integer());
    }
    case 'S': {
      ++cur.pos;
      if (cur.peek() == 'D') {
        ++cur.pos;
        cur.expect('(');
        long long m = cur.integer();
        cur.expect(',');
        long long n = cur.integer();
        cur.expect(',');
        long long a = cur.integer();
        cur.expect(')');
        return GroupSpec::semidirect(m, n, a);
      }
      return GroupSpec::symmetric(cur.integer());
    }
    case 'V': {
      ++cur.pos;
      cur.expect('(');
      long long q = cur.integer();
      cur.expect(',');
      long long d = cur.integer();
      cur.expect(')');
      if (d < 1 || d > 16) fail(ErrorKind::InvalidSpec, "vector space dimension out of range");
      return VecSpec{q, static_cast<int>(d)};
    }
    default:
      cur.error("expected a group or vector-space constructor");
  }
}

}  // namespace

ParsedSpec parse_spec(const std::string& text) {
  Cursor cur(text);
  if (cur.done()) cur.error("empty spec");
  ParsedSpec lhs = parse_term(cur);
  while (!cur.done() && cur.peek() == 'X') {
    ++cur.pos;
    ParsedSpec rhs = parse_term(cur);
    if (!std::holds_alternative<GroupSpec>(lhs) || !std::holds_alternative<GroupSpec>(rhs))
      fail(ErrorKind::InvalidSpec, "products apply to groups, not vector spaces");
    lhs = GroupSpec::product(std::get<GroupSpec>(std::move(lhs)),
                             std::get<GroupSpec>(std::move(rhs)));
  }
  if (!cur.done()) cur.error("unexpected trailing input");
  // Validate parameters eagerly so callers see InvalidSpec here.
  if (auto* g = std::get_if<GroupSpec>(&lhs)) {
    g->order();
  } else {
    const VecSpec& v = std::get<VecSpec>(lhs);
    if (v.q < 2 || factorize(v.q).size() != 1)
      fail(ErrorKind::InvalidSpec, std::to_string(v.q) + " is not a prime power");
  }
  return lhs;
}

GroupSpec parse_group_spec(const std::string& text) {
  ParsedSpec spec = parse_spec(text);
  if (!std::holds_alternative<GroupSpec>(spec))
    fail(ErrorKind::InvalidSpec, "expected a group, got a vector space");
  return std::get<GroupSpec>(std::move(spec));
}

}  // namespace chigen
