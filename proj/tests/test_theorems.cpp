#include <doctest.h>

#include <set>

#include "chigen/spec_parse.hpp"
#include "chigen/theorems.hpp"

using namespace chigen;

namespace {

GroupTable build(const std::string& text) { return GroupTable::build(parse_group_spec(text)); }

// Strips the GroupSpec so the dispatcher cannot take a closed-form shortcut.
GroupTable bare(const GroupTable& g) {
  ElementSet trivial(g);
  trivial.add(g.identity());
  return quotient(g, trivial);
}

// An unqualified `chigen` would collide with the namespace name.
ChiGenResult dispatch(const GroupTable& g) { return chigen::chigen(g); }

}  // namespace

TEST_CASE("nilpotent formula picks the least prime with a non-cyclic Sylow subgroup") {
  struct Row {
    const char* text;
    int expected;  // 0 encodes infinite
  };
  for (Row row : {Row{"Z2xZ2", 2}, Row{"Z3xZ3", 3}, Row{"Z2xZ4", 2}, Row{"Z4xZ9", 0},
                  Row{"Z3xZ9xZ5", 3}, Row{"Z6", 0}, Row{"D4", 2}, Row{"Z5xZ5", 5},
                  Row{"Z2xZ9xZ9", 3}, Row{"Z2xZ3xZ5xZ5", 5}, Row{"Z4xZ25", 0}}) {
    CAPTURE(row.text);
    auto g = build(row.text);
    auto r = chigen_nilpotent(g);
    CHECK(r.method == "nilpotent");
    if (row.expected == 0) {
      CHECK(r.value.is_infinite());
      REQUIRE(r.generator.has_value());
      CHECK(g.element_order(*r.generator) == g.order());
    } else {
      CHECK(r.value == ChiGenValue::finite(row.expected));
    }
    // The formula must match the exhaustive search.
    CHECK(r.value == sigma_search(g).value);
  }
  CHECK_THROWS_AS(chigen_nilpotent(build("S3")), Error);
  try {
    chigen_nilpotent(build("D6"));
    FAIL("expected NotNilpotent");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotNilpotent);
  }
}

TEST_CASE("dihedral formula is the least prime factor of the rotation order") {
  CHECK(chigen_dihedral(6).value == ChiGenValue::finite(2));
  CHECK(chigen_dihedral(15).value == ChiGenValue::finite(3));
  CHECK(chigen_dihedral(9).value == ChiGenValue::finite(3));
  CHECK(chigen_dihedral(5).value == ChiGenValue::finite(5));
  CHECK(chigen_dihedral(7).value == ChiGenValue::finite(7));
  CHECK(chigen_dihedral(2).value == ChiGenValue::finite(2));
  for (long long n = 2; n <= 16; ++n) {
    CAPTURE(n);
    CHECK(chigen_dihedral(n).value == sigma_search(build("D" + std::to_string(n))).value);
  }
  try {
    chigen_dihedral(1);
    FAIL("expected InvalidSpec");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidSpec);
  }
}

TEST_CASE("semidirect formula: moved or shared primes, least one wins") {
  struct Row {
    long long m, n, a;
    int expected;  // 0 encodes infinite
  };
  for (Row row : {Row{3, 2, 2, 3},    // the symmetric group on three letters
                  Row{3, 2, 1, 0},    // trivial action: Z6
                  Row{5, 4, 2, 5},    // faithful Frobenius action
                  Row{4, 2, 3, 2},    // dihedral of order 8: shared prime 2
                  Row{9, 3, 4, 3},    // order 27, exponent-9 action
                  Row{7, 3, 2, 7},    // Frobenius group of order 21
                  Row{15, 4, 2, 3},   // both 3 and 5 moved; least is 3
                  Row{8, 2, 3, 2},    // shared prime 2
                  Row{16, 2, 7, 2},   // order 32
                  Row{1, 6, 0, 0},    // degenerate kernel: Z6
                  Row{6, 1, 1, 0}}) { // degenerate complement: Z6
    CAPTURE(row.m);
    CAPTURE(row.n);
    CAPTURE(row.a);
    auto r = chigen_semidirect(row.m, row.n, row.a);
    CHECK(r.method == "semidirect");
    auto g = GroupTable::build(GroupSpec::semidirect(row.m, row.n, row.a));
    if (row.expected == 0) {
      CHECK(r.value.is_infinite());
      REQUIRE(r.generator.has_value());
      CHECK(g.element_order(*r.generator) == g.order());
    } else {
      CHECK(r.value == ChiGenValue::finite(row.expected));
    }
    CHECK(r.value == sigma_search(g).value);
  }
  CHECK_THROWS_AS(chigen_semidirect(4, 2, 2), Error);  // gcd(a, m) != 1
}

TEST_CASE("two-color test matches the exact value being 2") {
  for (const char* text : {"Z2xZ2", "Z2xZ4", "D4", "Z2xS3", "S3", "A4", "Z3xZ9", "Z6",
                           "D6", "Z12", "SD(3,4,2)"}) {
    CAPTURE(text);
    auto g = build(text);
    auto exact = sigma_search(g).value;
    bool is_two = !exact.is_infinite() && exact.value() == 2;
    CHECK(chigen_two_color_test(g) == is_two);
  }
}

TEST_CASE("torsion biconditional holds on a mixed sample") {
  for (const char* text : {"Z2xZ2", "Z3xZ3", "S3", "A4", "Z6", "Z9", "D4", "D6", "Z2xZ4",
                           "SD(7,3,2)", "Z3xS3"}) {
    CAPTURE(text);
    CHECK(chigen_torsion_test(build(text)));
  }
}

TEST_CASE("frattini reduction preserves the value") {
  for (const char* text : {"D4", "Z4xZ2", "Z9xZ3", "Z4xS3", "Z8", "A4"}) {
    CAPTURE(text);
    auto g = build(text);
    auto lat = all_subgroups(g);
    auto reduced = chigen_frattini_reduce(g, lat);
    CHECK(dispatch(reduced).value == dispatch(g).value);
  }
  // The dihedral group of order 8 reduces to the Klein group.
  auto d4 = build("D4");
  auto reduced = chigen_frattini_reduce(d4, all_subgroups(d4));
  CHECK(reduced.order() == 4);
  CHECK_FALSE(is_cyclic(reduced).cyclic);
}

TEST_CASE("dispatcher tags the path it took") {
  CHECK(dispatch(build("Z12")).method == "cyclic");
  CHECK(dispatch(build("D6")).method == "dihedral");
  CHECK(dispatch(build("SD(5,4,2)")).method == "semidirect");
  CHECK(dispatch(build("Z2xZ2")).method == "nilpotent");
  CHECK(dispatch(build("S4")).method == "search");
  CHECK(dispatch(build("Z4xS3")).method == "frattini+search");
}

TEST_CASE("dispatcher value equals exhaustive search everywhere") {
  for (const char* text : {"S3", "S4", "A4", "A5", "D4", "D9", "D15", "Z2xS3", "Z4xS3",
                           "SD(7,3,2)", "SD(9,3,4)", "Z2xZ4xZ3", "Z2xA4", "Z3xA4"}) {
    CAPTURE(text);
    auto g = build(text);
    auto fast = dispatch(g);
    auto slow = sigma_search(g);
    CHECK(fast.value == slow.value);
  }
}

TEST_CASE("dispatcher without a spec falls back to structural paths") {
  // Same group, spec stripped: no dihedral shortcut available.
  auto d6 = build("D6");
  auto anon = bare(d6);
  REQUIRE_FALSE(anon.spec().has_value());
  auto r = dispatch(anon);
  CHECK(r.value == ChiGenValue::finite(2));
  CHECK(r.method == "search");

  auto z2z2 = bare(build("Z2xZ2"));
  CHECK(dispatch(z2z2).method == "nilpotent");
  CHECK(dispatch(z2z2).value == ChiGenValue::finite(2));
}

TEST_CASE("frattini dispatcher path lifts a usable witness") {
  auto g = build("Z4xS3");
  auto r = dispatch(g);
  REQUIRE(r.method == "frattini+search");
  CHECK(r.value == ChiGenValue::finite(2));
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->parts.size() == 3);
  CHECK(r.witness->covers);
  CHECK(is_cover(g, r.witness->parts));
  for (const auto& part : r.witness->parts) {
    CHECK(part.group == &g);
    CHECK(part.is_subgroup());
  }
}

TEST_CASE("formula paths return no witness, search paths always do") {
  CHECK_FALSE(dispatch(build("D6")).witness.has_value());
  CHECK_FALSE(dispatch(build("Z2xZ2")).witness.has_value());
  CHECK_FALSE(dispatch(build("SD(5,4,2)")).witness.has_value());
  auto searched = dispatch(build("S4"));
  REQUIRE(searched.witness.has_value());
  CHECK(searched.witness->covers);
  CHECK(searched.witness->irredundant);
}
