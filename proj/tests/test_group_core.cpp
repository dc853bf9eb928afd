#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "chigen/group.hpp"
#include "chigen/spec_parse.hpp"
#include "oracles.hpp"

using namespace chigen;

namespace {

GroupTable build(const std::string& text) { return GroupTable::build(parse_group_spec(text)); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("spec factories validate their parameters") {
  CHECK(GroupSpec::cyclic(6).order() == 6);
  CHECK(GroupSpec::dihedral(5).order() == 10);
  CHECK(GroupSpec::symmetric(4).order() == 24);
  CHECK(GroupSpec::alternating(4).order() == 12);
  CHECK(GroupSpec::alternating(1).order() == 1);
  CHECK(GroupSpec::semidirect(3, 2, 2).order() == 6);
  CHECK(GroupSpec::product(GroupSpec::cyclic(2), GroupSpec::cyclic(4)).order() == 8);

  CHECK(kind_of([] { GroupSpec::cyclic(0).order(); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { GroupSpec::dihedral(-1).order(); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { GroupSpec::symmetric(21).order(); }) == ErrorKind::InvalidSpec);
  // gcd(2, 4) = 2: the action exponent must be a unit mod the kernel order.
  CHECK(kind_of([] { GroupSpec::semidirect(4, 2, 2).order(); }) == ErrorKind::InvalidSpec);
  // 2^2 = 4 != 1 (mod 5): the action's order must divide the complement order.
  CHECK(kind_of([] { GroupSpec::semidirect(5, 2, 2).order(); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { GroupSpec::semidirect(3, 2, 5).order(); }) == ErrorKind::InvalidSpec);
}

TEST_CASE("spec round-trips through its text form") {
  for (const char* text : {"Z12", "D7", "S4", "A5", "SD(3,4,2)", "Z2xZ4", "Z2xZ2xZ2"}) {
    CAPTURE(text);
    CHECK(parse_group_spec(text).to_string() == text);
  }
  CHECK(GroupSpec::product(GroupSpec::cyclic(2), GroupSpec::cyclic(4)).to_string() == "Z2xZ4");
  CHECK(GroupSpec::semidirect(3, 4, 2).to_string() == "SD(3,4,2)");
}

TEST_CASE("table construction rejects non-groups") {
  // Row 1 repeats entry 1: not a Latin square.
  CHECK(kind_of([] { GroupTable(2, {0, 1, 1, 1}, {"e", "a"}, "bad"); }) == ErrorKind::InvalidSpec);
  // Latin square without associativity or identity behaviour does not slip through:
  // this is the 5x5 circulant shifted by one, a true group (Z5) — sanity that the
  // ctor accepts a hand-rolled valid table.
  std::vector<int> z5(25);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) z5[static_cast<size_t>(a) * 5 + b] = (a + b) % 5;
  GroupTable g(5, z5, {"0", "1", "2", "3", "4"}, "Z5 by hand");
  CHECK(g.order() == 5);
  CHECK(g.identity() == 0);
  CHECK(g.inv(2) == 3);
  CHECK(kind_of([] { GroupTable(2, {0, 1}, {"e", "a"}, "bad"); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { GroupTable(2, {0, 1, 1, 0}, {"e"}, "bad"); }) == ErrorKind::InvalidSpec);
}

TEST_CASE("order cap blocks oversized constructions") {
  CHECK(kind_of([] { GroupTable::build(GroupSpec::symmetric(6)); }) == ErrorKind::OrderCapExceeded);
  CHECK(GroupTable::build(GroupSpec::symmetric(6), 1000).order() == 720);
}

TEST_CASE("element orders and abelianness") {
  auto z6 = build("Z6");
  CHECK(z6.element_order(0) == 1);
  CHECK(z6.element_order(1) == 6);
  CHECK(z6.element_order(2) == 3);
  CHECK(z6.element_order(3) == 2);
  CHECK(z6.is_abelian());

  auto s3 = build("S3");
  CHECK_FALSE(s3.is_abelian());
  std::multiset<int> orders;
  for (int i = 0; i < s3.order(); ++i) orders.insert(s3.element_order(i));
  CHECK(orders == std::multiset<int>{1, 2, 2, 2, 3, 3});
}

TEST_CASE("coprime cyclic factors give an element of full order") {
  auto g = build("Z3xZ5");
  bool found = false;
  for (int i = 0; i < g.order(); ++i) found = found || g.element_order(i) == 15;
  CHECK(found);
  auto w = is_cyclic(g);
  REQUIRE(w.cyclic);
  REQUIRE(w.generator.has_value());
  CHECK(g.element_order(*w.generator) == 15);
}

TEST_CASE("closure agrees with the pairwise-product fixpoint") {
  for (const char* text : {"Z8", "S3", "A4", "D6", "Z2xZ4"}) {
    CAPTURE(text);
    auto g = build(text);
    for (int a = 0; a < g.order(); ++a)
      for (int b = a; b < g.order(); ++b) {
        auto fast = closure(g, {a, b});
        auto slow = oracle::naive_closure(g, {a, b});
        REQUIRE(static_cast<size_t>(fast.size()) == slow.size());
        for (int x : slow) REQUIRE(fast.contains(x));
      }
  }
}

TEST_CASE("cyclic_subgroup matches element_order and is a subgroup") {
  auto g = build("D6");
  for (int i = 0; i < g.order(); ++i) {
    auto sub = cyclic_subgroup(g, i);
    CHECK(sub.size() == g.element_order(i));
    CHECK(sub.is_subgroup());
  }
}

TEST_CASE("extend_subgroup equals closure of the union") {
  auto g = build("A4");
  auto base = cyclic_subgroup(g, 1);
  std::vector<int> base_gens{1};
  for (int extra = 0; extra < g.order(); ++extra) {
    auto grown = extend_subgroup(g, base.bits, base_gens, extra);
    auto direct = closure(g, {1, extra});
    CHECK(grown == direct.bits);
  }
}

TEST_CASE("generators produce the whole group") {
  for (const char* text : {"Z12", "S4", "A5", "D15", "Z2xZ2xZ2"}) {
    CAPTURE(text);
    auto g = GroupTable::build(parse_group_spec(text), 512);
    auto gens = g.generators();
    REQUIRE(!gens.empty());
    CHECK(static_cast<int>(closure(g, gens).size()) == g.order());
    // No generator is redundant given the ones before it.
    for (size_t drop = 0; drop < gens.size(); ++drop) {
      std::vector<int> prefix(gens.begin(), gens.begin() + static_cast<long>(drop));
      CHECK(static_cast<int>(closure(g, prefix).size()) < g.order());
    }
  }
}

TEST_CASE("quotient of the dihedral group of order 8 by its center") {
  auto g = build("D4");  // order 8
  REQUIRE(g.order() == 8);
  ElementSet center(g);
  for (int z = 0; z < g.order(); ++z) {
    bool central = true;
    for (int x = 0; x < g.order(); ++x) central = central && g.mul(z, x) == g.mul(x, z);
    if (central) center.add(z);
  }
  REQUIRE(center.size() == 2);
  std::vector<int> proj;
  auto q = quotient(g, center, &proj);
  CHECK(q.order() == 4);
  // Exponent 2 and non-cyclic: the Klein group.
  for (int i = 0; i < q.order(); ++i) CHECK(q.element_order(i) <= 2);
  CHECK_FALSE(is_cyclic(q).cyclic);
  // The projection is a homomorphism onto the quotient.
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      CHECK(proj[static_cast<size_t>(g.mul(a, b))] ==
            q.mul(proj[static_cast<size_t>(a)], proj[static_cast<size_t>(b)]));
}

TEST_CASE("quotient rejects bad inputs by kind") {
  auto s3 = build("S3");
  auto z4 = build("Z4");

  ElementSet not_closed(s3);
  not_closed.add(s3.identity());
  for (int i = 0; i < s3.order(); ++i)
    if (s3.element_order(i) == 3) {
      not_closed.add(i);
      break;
    }
  CHECK(kind_of([&] { quotient(s3, not_closed); }) == ErrorKind::NotSubgroup);

  ElementSet foreign(z4);
  foreign.add(0);
  CHECK(kind_of([&] { quotient(s3, foreign); }) == ErrorKind::NotSubgroup);

  // A transposition's span is not normal in S3.
  for (int i = 0; i < s3.order(); ++i)
    if (s3.element_order(i) == 2) {
      auto sub = cyclic_subgroup(s3, i);
      CHECK(kind_of([&] { quotient(s3, sub); }) == ErrorKind::NotNormal);
      break;
    }

  auto rot = commutator_subgroup(s3);  // normal, order 3
  CHECK(quotient(s3, rot).order() == 2);
}

TEST_CASE("direct_product multiplies componentwise") {
  auto a = build("Z2");
  auto b = build("S3");
  auto p = direct_product(a, b);
  CHECK(p.order() == 12);
  REQUIRE(p.spec().has_value());
  CHECK(p.spec()->to_string() == "Z2xS3");
  // Index layout ia * |B| + ib; orders are lcms.
  for (int ia = 0; ia < a.order(); ++ia)
    for (int ib = 0; ib < b.order(); ++ib) {
      int idx = ia * b.order() + ib;
      CHECK(p.element_order(idx) == std::lcm(a.element_order(ia), b.element_order(ib)));
    }
  CHECK(p.label(b.order() + 1) == "(" + a.label(1) + "," + b.label(1) + ")");
}

TEST_CASE("min_nonidentity_order is the least prime divisor") {
  CHECK(min_nonidentity_order(build("S3")) == 2);
  CHECK(min_nonidentity_order(build("Z15")) == 3);
  CHECK(min_nonidentity_order(build("Z35")) == 5);
  CHECK(min_nonidentity_order(build("A4")) == 2);
  CHECK(kind_of([] { min_nonidentity_order(GroupTable::build(GroupSpec::cyclic(1))); }) ==
        ErrorKind::TrivialGroup);
}

TEST_CASE("cyclicity witnesses") {
  CHECK(is_cyclic(build("Z360")).cyclic);
  CHECK_FALSE(is_cyclic(build("Z2xZ2")).cyclic);
  CHECK_FALSE(is_cyclic(build("S3")).cyclic);
  auto w = is_cyclic(build("Z9"));
  REQUIRE(w.generator.has_value());
  CHECK(cyclic_subgroup(build("Z9"), *w.generator).size() == 9);
}

TEST_CASE("nilpotency detection and Sylow decomposition") {
  auto info = is_nilpotent(build("Z12"));
  REQUIRE(info.nilpotent);
  CHECK(info.primes == std::vector<long long>{2, 3});
  REQUIRE(info.sylows.size() == 2);
  CHECK(info.sylows[0].size() == 4);
  CHECK(info.sylows[1].size() == 3);

  CHECK(is_nilpotent(build("Z2xZ4xZ9")).nilpotent);
  CHECK(is_nilpotent(build("D4")).nilpotent);       // 2-group
  CHECK_FALSE(is_nilpotent(build("S3")).nilpotent);  // Sylow 2 not normal
  CHECK_FALSE(is_nilpotent(build("A4")).nilpotent);
  CHECK_FALSE(is_nilpotent(build("D15")).nilpotent);
}

TEST_CASE("commutator subgroups of the standard small groups") {
  auto s3 = build("S3");
  auto d = commutator_subgroup(s3);
  CHECK(d.size() == 3);
  CHECK(d.is_subgroup());

  auto a4 = build("A4");
  auto v = commutator_subgroup(a4);
  CHECK(v.size() == 4);
  for (int x : v.elements())
    CHECK(a4.element_order(x) <= 2);

  CHECK(commutator_subgroup(build("Z2xZ4")).size() == 1);
  CHECK(commutator_subgroup(build("S4")).size() == 12);
}

TEST_CASE("abelian p-rank counts independent order-p directions") {
  CHECK(abelian_p_rank(build("Z9"), 3) == 1);
  CHECK(abelian_p_rank(build("Z3xZ3"), 3) == 2);
  CHECK(abelian_p_rank(build("Z2xZ4"), 2) == 2);
  CHECK(abelian_p_rank(build("Z2xZ4"), 3) == 0);
  CHECK(abelian_p_rank(build("Z2xZ2xZ2"), 2) == 3);
  CHECK(kind_of([] { abelian_p_rank(GroupTable::build(parse_group_spec("S3")), 2); }) ==
        ErrorKind::NotAbelian);
  CHECK(kind_of([] { abelian_p_rank(GroupTable::build(parse_group_spec("Z4")), 4); }) ==
        ErrorKind::NotPrime);
}

TEST_CASE("arithmetic helpers") {
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));  // 7 * 13
  CHECK(least_prime_factor(91) == 7);
  CHECK(least_prime_factor(2) == 2);
  CHECK(pow_mod(2, 10, 1000) == 24);
  CHECK(pow_mod(7, 0, 5) == 1);
  CHECK(pow_mod(1, 100, 1) == 0);
  auto f = factorize(360);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<long long, int>{2, 3});
  CHECK(f[1] == std::pair<long long, int>{3, 2});
  CHECK(f[2] == std::pair<long long, int>{5, 1});
  CHECK(factorize(1).empty());
}
