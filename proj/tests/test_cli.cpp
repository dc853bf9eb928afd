#include <doctest.h>

#include <functional>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "chigen/cli.hpp"
#include "chigen/output.hpp"
#include "chigen/spec_parse.hpp"
#include "chigen/theorems.hpp"

using namespace chigen;
using nlohmann::json;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Internal;
}

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

json run_json(const std::vector<std::string>& args) {
  auto r = run(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

// An unqualified `chigen` would collide with the namespace name.
ChiGenResult dispatch(const GroupTable& g) { return chigen::chigen(g); }

}  // namespace

TEST_CASE("spec grammar: families, products, case and whitespace") {
  CHECK(parse_group_spec("Z12").order() == 12);
  CHECK(parse_group_spec("d15").order() == 30);  // dihedral index n, order 2n
  CHECK(parse_group_spec(" z2 x z4 ").to_string() == "Z2xZ4");
  CHECK(parse_group_spec("SD( 3, 4, 2 )").to_string() == "SD(3,4,2)");
  CHECK(parse_group_spec("s4").order() == 24);
  CHECK(parse_group_spec("a5").order() == 60);
  CHECK(parse_group_spec("Z2xZ2xZ2").order() == 8);

  auto vec = parse_spec("v( 3 , 2 )");
  REQUIRE(std::holds_alternative<VecSpec>(vec));
  CHECK(std::get<VecSpec>(vec).q == 3);
  CHECK(std::get<VecSpec>(vec).d == 2);
}

TEST_CASE("spec grammar: rejection kinds") {
  // Syntax problems are ParseError.
  CHECK(kind_of([] { parse_spec(""); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_spec("Z"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_spec("Q8"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_spec("Z4 junk"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_spec("SD(3,4)"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_spec("Z99999999999999999999"); }) == ErrorKind::ParseError);
  // Well-formed but meaningless specs are InvalidSpec.
  CHECK(kind_of([] { parse_spec("Z0"); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { parse_spec("S25"); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { parse_spec("SD(4,2,2)"); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { parse_spec("V(6,2)"); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { parse_spec("V(2,0)"); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { parse_spec("Z4xV(2,2)"); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { parse_group_spec("V(3,2)"); }) == ErrorKind::InvalidSpec);
}

TEST_CASE("records serialize with the invariant sigma = chigen + 1") {
  auto g = GroupTable::build(parse_group_spec("A4"));
  auto res = dispatch(g);
  auto rec = make_record("A4", g, res, 1.5);
  auto j = record_to_json(rec);
  CHECK(j["schema"] == 1);
  CHECK(j["spec"] == "A4");
  CHECK(j["order"] == 12);
  CHECK(j["chigen"] == 4);
  CHECK(j["sigma"] == 5);
  CHECK(j["method"] == "search");
  REQUIRE(j.contains("witness"));
  CHECK(j["witness"].size() == 5);
  CHECK(j["caps_hit"].is_array());
  CHECK(j["caps_hit"].empty());

  auto z6 = GroupTable::build(parse_group_spec("Z6"));
  auto jz = record_to_json(make_record("Z6", z6, dispatch(z6), 0.1));
  CHECK(jz["chigen"] == "infinite");
  CHECK(jz["sigma"].is_null());
  REQUIRE(jz.contains("generator"));
  CHECK(z6.element_order(jz["generator"].get<int>()) == 6);
  CHECK_FALSE(jz.contains("witness"));
}

TEST_CASE("records survive a JSON round trip") {
  for (const char* text : {"A4", "Z6", "D9", "SD(5,4,2)", "Z2xZ4"}) {
    CAPTURE(text);
    auto g = GroupTable::build(parse_group_spec(text));
    auto rec = make_record(text, g, dispatch(g), 2.25);
    auto back = record_from_json(record_to_json(rec));
    CHECK(back.spec == rec.spec);
    CHECK(back.order == rec.order);
    CHECK(back.chigen == rec.chigen);
    CHECK(back.method == rec.method);
    CHECK(back.witness == rec.witness);
    CHECK(back.generator == rec.generator);
    CHECK(back.timing_ms == doctest::Approx(rec.timing_ms));
    CHECK(back.caps_hit == rec.caps_hit);
  }
}

TEST_CASE("record parsing rejects malformed input") {
  auto g = GroupTable::build(parse_group_spec("A4"));
  auto good = record_to_json(make_record("A4", g, dispatch(g), 1.0));

  auto wrong_schema = good;
  wrong_schema["schema"] = 2;
  CHECK(kind_of([&] { record_from_json(wrong_schema); }) == ErrorKind::ParseError);

  auto bad_sigma = good;
  bad_sigma["sigma"] = 7;
  CHECK(kind_of([&] { record_from_json(bad_sigma); }) == ErrorKind::ParseError);

  auto missing_spec = good;
  missing_spec.erase("spec");
  CHECK(kind_of([&] { record_from_json(missing_spec); }) == ErrorKind::ParseError);

  auto bad_chigen = good;
  bad_chigen["chigen"] = true;
  CHECK(kind_of([&] { record_from_json(bad_chigen); }) == ErrorKind::ParseError);

  auto inf_with_sigma = good;
  inf_with_sigma["chigen"] = "infinite";
  CHECK(kind_of([&] { record_from_json(inf_with_sigma); }) == ErrorKind::ParseError);

  CHECK(kind_of([] { record_from_json(json::array()); }) == ErrorKind::ParseError);
}

TEST_CASE("cli: chigen command emits the json record") {
  auto j = run_json({"chigen", "A4", "--json"});
  CHECK(j["spec"] == "A4");
  CHECK(j["order"] == 12);
  CHECK(j["chigen"] == 4);
  CHECK(j["sigma"] == 5);
  CHECK(j["method"] == "search");
  REQUIRE(j["witness"].size() == 5);
  for (const auto& part : j["witness"]) {
    auto elems = part.get<std::vector<int>>();
    CHECK(std::is_sorted(elems.begin(), elems.end()));
  }
  // Text mode headline.
  auto r = run({"chigen", "A4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("chi_gen(A4) = 4") != std::string::npos);
  CHECK(r.out.find("sigma 5") != std::string::npos);
}

TEST_CASE("cli: bare specs imply the chigen command") {
  auto r = run({"A4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("chi_gen(A4) = 4") != std::string::npos);
  auto lower = run({"z2xz4"});
  CHECK(lower.code == 0);
  CHECK(lower.out.find("= 2") != std::string::npos);
}

TEST_CASE("cli: cyclic groups report infinite with a generator") {
  auto j = run_json({"chigen", "Z6", "--json"});
  CHECK(j["chigen"] == "infinite");
  CHECK(j["sigma"].is_null());
  CHECK(j["method"] == "cyclic");
  CHECK(j.contains("generator"));
  auto r = run({"chigen", "Z6"});
  CHECK(r.out.find("= infinite") != std::string::npos);
  CHECK(r.out.find("generator:") != std::string::npos);
}

TEST_CASE("cli: search-only bypasses the closed forms") {
  auto fast = run_json({"chigen", "D6", "--json"});
  CHECK(fast["method"] == "dihedral");
  CHECK(fast["chigen"] == 2);
  auto slow = run_json({"chigen", "D6", "--search-only", "--json"});
  CHECK(slow["method"] == "search");
  CHECK(slow["chigen"] == 2);
  REQUIRE(slow.contains("witness"));
  CHECK(slow["witness"].size() == 3);
}

TEST_CASE("cli: vector-space specs go through the subspace search") {
  auto j = run_json({"chigen", "V(3,2)", "--json"});
  CHECK(j["spec"] == "V(3,2)");
  CHECK(j["order"] == 9);  // point count
  CHECK(j["chigen"] == 3);
  CHECK(j["sigma"] == 4);
  CHECK(j["method"] == "vecspace");
  REQUIRE(j.contains("witness"));
  CHECK(j["witness"].size() == 4);

  auto round = record_from_json(j);
  CHECK(round.chigen == ChiGenValue::finite(3));
}

TEST_CASE("cli: cover prints the witness parts") {
  auto r = run({"cover", "A4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("minimum cover, 5 parts (no 4-part cover exists)") != std::string::npos);
  CHECK(r.out.find("covers: yes, irredundant: yes") != std::string::npos);

  auto cyc = run({"cover", "Z5"});
  CHECK(cyc.code == 0);
  CHECK(cyc.out.find("no proper-subgroup cover exists") != std::string::npos);

  auto vec = run({"cover", "V(2,2)"});
  CHECK(vec.code == 0);
  CHECK(vec.out.find("minimum cover, 3 parts (no 2-part cover exists)") != std::string::npos);
}

TEST_CASE("cli: lattice lists subgroups with layer flags") {
  auto j = run_json({"lattice", "A4", "--json"});
  CHECK(j["count"] == 10);
  CHECK(j["complete"] == true);
  CHECK(j["caps_hit"].empty());
  REQUIRE(j["subgroups"].size() == 10);
  int maximal = 0, normal = 0;
  for (const auto& row : j["subgroups"]) {
    maximal += row["maximal"].get<bool>();
    normal += row["normal"].get<bool>();
  }
  CHECK(maximal == 5);
  CHECK(normal == 3);  // trivial, the Klein subgroup, the whole group

  auto vec = run_json({"lattice", "V(2,2)", "--json"});
  CHECK(vec["count"] == 5);
}

TEST_CASE("cli: exit 2 on user errors") {
  CHECK(run({"chigen", "Zx"}).code == 2);
  CHECK(run({"chigen", "Z0"}).code == 2);
  CHECK(run({"chigen"}).code == 2);          // missing required spec
  CHECK(run({"chigen", "A4", "--bogus"}).code == 2);
  CHECK(run({"verify", "nope"}).code == 2);  // unknown suite name
  CHECK(run({"table", "Q", "2..5"}).code == 2);
  CHECK(run({"table", "D", "5-7"}).code == 2);
  CHECK(run({"table", "D", "9..2"}).code == 2);
  auto r = run({"chigen", "SD(4,2,2)"});
  CHECK(r.code == 2);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("cli: exit 3 when a cap stops the computation") {
  // Order 720 exceeds the default cap of 512.
  auto capped = run({"chigen", "Z360xZ2"});
  CHECK(capped.code == 3);
  CHECK(capped.err.find("cap") != std::string::npos);
  // Raising the cap completes; the group is nilpotent, no search needed.
  auto j = run_json({"chigen", "Z360xZ2", "--cap", "1000", "--json"});
  CHECK(j["order"] == 720);
  CHECK(j["chigen"] == 2);
  CHECK(j["method"] == "nilpotent");

  // A starved lattice stops the search-path dispatcher.
  CHECK(run({"chigen", "A4", "--lattice-cap", "3"}).code == 3);

  // The lattice command reports partial output with the same code.
  auto lat = run({"lattice", "Z2xZ2xZ2xZ2", "--lattice-cap", "10"});
  CHECK(lat.code == 3);
  CHECK(lat.out.find("cap exceeded, partial") != std::string::npos);
  auto latj = run({"lattice", "Z2xZ2xZ2xZ2", "--lattice-cap", "10", "--json"});
  CHECK(latj.code == 3);
  auto parsed = json::parse(latj.out);
  CHECK(parsed["complete"] == false);
  CHECK(parsed["caps_hit"] == json::array({"lattice-cap"}));
}

TEST_CASE("cli: verify runs the named suite") {
  auto r = run({"verify", "a4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[PASS] a4") != std::string::npos);
  CHECK(r.out.find("all suites passed (1 run)") != std::string::npos);

  auto j = run_json({"verify", "a4", "--json"});
  CHECK(j["failed"] == 0);
  REQUIRE(j["suites"].size() == 1);
  CHECK(j["suites"][0]["name"] == "a4");
  CHECK(j["suites"][0]["pass"] == true);
}

TEST_CASE("cli: verify budget reaches the coloring oracle") {
  // A 100-coloring budget cannot enumerate even 2^4 = 16-element groups
  // at three colors, so the oracle suite must fail loudly.
  auto r = run({"verify", "oracle", "--budget", "100"});
  CHECK(r.code == 1);
  CHECK(r.out.find("[FAIL] oracle") != std::string::npos);
}

TEST_CASE("cli: table sweeps a family") {
  auto r = run({"table", "D", "2..6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("spec") != std::string::npos);
  CHECK(r.out.find("D4") != std::string::npos);

  auto arr = run_json({"table", "Z", "1..5", "--json"});
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 5);
  for (const auto& row : arr) {
    CHECK(row["chigen"] == "infinite");
    CHECK(row["sigma"].is_null());
    CHECK(row["method"] == "cyclic");
  }

  auto dih = run_json({"table", "D", "2..4", "--json"});
  REQUIRE(dih.size() == 3);
  CHECK(dih[0]["chigen"] == 2);  // D2
  CHECK(dih[1]["chigen"] == 3);  // D3
  CHECK(dih[2]["chigen"] == 2);  // D4
  for (const auto& row : dih) {
    auto rec = record_from_json(row);  // schema invariant holds per row
    CHECK_FALSE(rec.chigen.is_infinite());
  }
}

TEST_CASE("cli: no arguments prints help") {
  auto r = run({});
  CHECK(r.code == 0);
  CHECK(r.out.find("Usage") != std::string::npos);
  auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("chigen") != std::string::npos);
}
