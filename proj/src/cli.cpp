#include "chigen/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "chigen/cover.hpp"
#include "chigen/error.hpp"
#include "chigen/lattice.hpp"
#include "chigen/output.hpp"
#include "chigen/spec_parse.hpp"
#include "chigen/theorems.hpp"
#include "chigen/vecspace.hpp"
#include "chigen/verify.hpp"

namespace chigen {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct CommonOpts {
  std::string spec;
  bool json = false;
  bool search_only = false;
  bool canonical = true;
  long long order_cap = kDefaultOrderCap;
  long long lattice_cap = kDefaultLatticeCap;
  bool cap_explicit = false;
};

std::string join_labels(const GroupTable& g, const std::vector<int>& idx) {
  std::string s;
  for (int i : idx) {
    if (!s.empty()) s += ", ";
    s += g.label(i);
  }
  return s;
}

std::string point_label(const VecSpace& s, int u) {
  std::string lab = "(";
  for (int i = 0; i < s.dim(); ++i) {
    if (i) lab += ",";
    lab += std::to_string(s.coordinate(u, i));
  }
  return lab + ")";
}

std::string join_points(const VecSpace& s, const std::vector<int>& idx) {
  std::string out;
  for (int u : idx) {
    if (!out.empty()) out += ", ";
    out += point_label(s, u);
  }
  return out;
}

OutputRecord vec_record(const std::string& spec, const VecSpace& space,
                        const VecSigmaResult& res, double timing_ms) {
  OutputRecord rec;
  rec.spec = spec;
  rec.order = space.points();
  rec.chigen = res.value;
  rec.method = "vecspace";
  rec.generator = res.generator_point;
  rec.timing_ms = timing_ms;
  if (!res.witness.empty()) {
    std::vector<std::vector<int>> parts;
    parts.reserve(res.witness.size());
    for (const Bitset& b : res.witness) parts.push_back(b.members());
    rec.witness = std::move(parts);
  }
  return rec;
}

void print_headline(std::ostream& out, const OutputRecord& rec) {
  out << "chi_gen(" << rec.spec << ") = " << rec.chigen.to_string() << "  [order "
      << rec.order << ", method " << rec.method;
  if (!rec.chigen.is_infinite()) out << ", sigma " << rec.chigen.value() + 1;
  out << "]\n";
}

int cmd_chigen(const CommonOpts& opts, std::ostream& out) {
  ParsedSpec parsed = parse_spec(opts.spec);
  Clock::time_point t0 = Clock::now();
  if (std::holds_alternative<GroupSpec>(parsed)) {
    GroupTable g = GroupTable::build(std::get<GroupSpec>(parsed), opts.order_cap);
    ChiGenResult res = opts.search_only
                           ? sigma_search(g, opts.lattice_cap, opts.canonical)
                           : chigen(g, opts.lattice_cap, opts.canonical);
    OutputRecord rec = make_record(opts.spec, g, res, ms_since(t0));
    if (opts.json) {
      out << record_to_json(rec).dump(2) << "\n";
      return 0;
    }
    print_headline(out, rec);
    if (res.generator)
      out << "generator: " << g.label(*res.generator) << "\n";
    return 0;
  }

  const VecSpec& vs = std::get<VecSpec>(parsed);
  FiniteField f = FiniteField::make(vs.q);
  long long cap = opts.cap_explicit ? opts.order_cap : kDefaultVecCap;
  VecSpace space(f, vs.d, cap);
  VecSigmaResult res = sigma_vec(f, vs.d, cap, opts.canonical);
  OutputRecord rec = vec_record(opts.spec, space, res, ms_since(t0));
  if (opts.json) {
    out << record_to_json(rec).dump(2) << "\n";
    return 0;
  }
  print_headline(out, rec);
  if (res.generator_point)
    out << "spanning point: " << point_label(space, *res.generator_point) << "\n";
  return 0;
}

int cmd_cover(const CommonOpts& opts, std::ostream& out) {
  ParsedSpec parsed = parse_spec(opts.spec);
  Clock::time_point t0 = Clock::now();
  if (std::holds_alternative<GroupSpec>(parsed)) {
    GroupTable g = GroupTable::build(std::get<GroupSpec>(parsed), opts.order_cap);
    ChiGenResult res = sigma_search(g, opts.lattice_cap, opts.canonical);
    OutputRecord rec = make_record(opts.spec, g, res, ms_since(t0));
    if (opts.json) {
      out << record_to_json(rec).dump(2) << "\n";
      return 0;
    }
    print_headline(out, rec);
    if (res.value.is_infinite()) {
      out << "no proper-subgroup cover exists; generator: "
          << g.label(res.generator.value()) << "\n";
      return 0;
    }
    if (!res.witness) fail(ErrorKind::Internal, "finite search result without witness");
    const CoverCertificate& w = *res.witness;
    out << "minimum cover, " << w.parts.size() << " parts (no "
        << w.minimal_proven_up_to << "-part cover exists):\n";
    for (size_t i = 0; i < w.parts.size(); ++i)
      out << "  #" << i + 1 << " order " << w.parts[i].size() << ": { "
          << join_labels(g, w.parts[i].elements()) << " }\n";
    out << "covers: " << (w.covers ? "yes" : "no")
        << ", irredundant: " << (w.irredundant ? "yes" : "no") << "\n";
    return 0;
  }

  const VecSpec& vs = std::get<VecSpec>(parsed);
  FiniteField f = FiniteField::make(vs.q);
  long long cap = opts.cap_explicit ? opts.order_cap : kDefaultVecCap;
  VecSpace space(f, vs.d, cap);
  VecSigmaResult res = sigma_vec(f, vs.d, cap, opts.canonical);
  OutputRecord rec = vec_record(opts.spec, space, res, ms_since(t0));
  if (opts.json) {
    out << record_to_json(rec).dump(2) << "\n";
    return 0;
  }
  print_headline(out, rec);
  if (res.value.is_infinite()) {
    out << "no proper-subspace cover exists; spanning point: "
        << point_label(space, res.generator_point.value()) << "\n";
    return 0;
  }
  out << "minimum cover, " << res.witness.size() << " parts (no "
      << res.minimal_proven_up_to << "-part cover exists):\n";
  for (size_t i = 0; i < res.witness.size(); ++i)
    out << "  #" << i + 1 << " size " << res.witness[i].count() << ": { "
        << join_points(space, res.witness[i].members()) << " }\n";
  return 0;
}

int cmd_lattice(const CommonOpts& opts, std::ostream& out) {
  ParsedSpec parsed = parse_spec(opts.spec);
  if (std::holds_alternative<GroupSpec>(parsed)) {
    GroupTable g = GroupTable::build(std::get<GroupSpec>(parsed), opts.order_cap);
    SubgroupLattice lat = all_subgroups(g, opts.lattice_cap);
    if (opts.json) {
      nlohmann::json j;
      j["schema"] = 1;
      j["spec"] = opts.spec;
      j["order"] = g.order();
      j["complete"] = lat.complete;
      j["count"] = lat.subgroups.size();
      j["caps_hit"] = lat.complete ? nlohmann::json::array()
                                   : nlohmann::json::array({"lattice-cap"});
      nlohmann::json rows = nlohmann::json::array();
      for (size_t i = 0; i < lat.subgroups.size(); ++i) {
        nlohmann::json row;
        row["order"] = lat.subgroups[i].size();
        row["elements"] = lat.subgroups[i].elements();
        row["maximal"] = lat.is_maximal(static_cast<int>(i));
        row["normal"] = lat.is_normal(static_cast<int>(i));
        rows.push_back(std::move(row));
      }
      j["subgroups"] = std::move(rows);
      out << j.dump(2) << "\n";
    } else {
      out << opts.spec << ": " << lat.subgroups.size() << " subgroups ("
          << (lat.complete ? "complete" : "cap exceeded, partial") << ")\n";
      for (size_t i = 0; i < lat.subgroups.size(); ++i) {
        const ElementSet& h = lat.subgroups[i];
        out << "  #" << std::left << std::setw(4) << i << std::right
            << " order " << std::setw(4) << h.size();
        out << (lat.is_maximal(static_cast<int>(i)) ? "  maximal" : "         ");
        out << (lat.is_normal(static_cast<int>(i)) ? "  normal " : "         ");
        if (h.size() <= 16)
          out << "  { " << join_labels(g, h.elements()) << " }";
        out << "\n";
      }
    }
    return lat.complete ? 0 : 3;
  }

  const VecSpec& vs = std::get<VecSpec>(parsed);
  FiniteField f = FiniteField::make(vs.q);
  long long cap = opts.cap_explicit ? opts.order_cap : kDefaultVecCap;
  VecSpace space(f, vs.d, cap);
  std::vector<Bitset> subs = space.all_subspaces();
  int hyper = space.points() / static_cast<int>(f.size());
  if (opts.json) {
    nlohmann::json j;
    j["schema"] = 1;
    j["spec"] = opts.spec;
    j["points"] = space.points();
    j["count"] = subs.size();
    nlohmann::json rows = nlohmann::json::array();
    for (const Bitset& s : subs) {
      nlohmann::json row;
      row["size"] = s.count();
      row["elements"] = s.members();
      row["maximal"] = s.count() == hyper;
      rows.push_back(std::move(row));
    }
    j["subspaces"] = std::move(rows);
    out << j.dump(2) << "\n";
  } else {
    out << opts.spec << ": " << subs.size() << " subspaces\n";
    for (size_t i = 0; i < subs.size(); ++i) {
      out << "  #" << std::left << std::setw(4) << i << std::right << " size "
          << std::setw(4) << subs[i].count();
      out << (subs[i].count() == hyper ? "  maximal" : "         ");
      if (subs[i].count() <= 16)
        out << "  { " << join_points(space, subs[i].members()) << " }";
      out << "\n";
    }
  }
  return 0;
}

int cmd_verify(const std::vector<std::string>& names, bool json, long long budget,
               std::ostream& out) {
  Verifier verifier(budget);
  const std::vector<std::string>& run = names.empty() ? Verifier::suite_names() : names;
  std::vector<SuiteResult> results;
  results.reserve(run.size());
  for (const std::string& name : run) results.push_back(verifier.run(name));

  int failed = 0;
  for (const SuiteResult& r : results)
    if (!r.pass) ++failed;

  if (json) {
    nlohmann::json j;
    j["schema"] = 1;
    nlohmann::json suites = nlohmann::json::array();
    for (const SuiteResult& r : results) {
      nlohmann::json row;
      row["name"] = r.name;
      row["pass"] = r.pass;
      row["ms"] = r.ms;
      row["notes"] = r.notes;
      suites.push_back(std::move(row));
    }
    j["suites"] = std::move(suites);
    j["failed"] = failed;
    out << j.dump(2) << "\n";
  } else {
    for (const SuiteResult& r : results) {
      std::ostringstream ms;
      ms << std::fixed << std::setprecision(1) << r.ms;
      out << (r.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(12)
          << r.name << std::right << " (" << ms.str() << " ms)\n";
      for (const std::string& note : r.notes) out << "       " << note << "\n";
    }
    out << (failed == 0 ? "all suites passed"
                        : std::to_string(failed) + " suite(s) failed")
        << " (" << results.size() << " run)\n";
  }
  return failed == 0 ? 0 : 1;
}

int cmd_table(const std::string& family, const std::string& range,
              const CommonOpts& opts, std::ostream& out) {
  std::string fam = family;
  std::transform(fam.begin(), fam.end(), fam.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (fam != "Z" && fam != "D" && fam != "S" && fam != "A")
    fail(ErrorKind::InvalidSpec, "table family must be one of Z, D, S, A");

  size_t dots = range.find("..");
  long long lo = 0, hi = 0;
  try {
    if (dots == std::string::npos) throw std::invalid_argument("no ..");
    lo = std::stoll(range.substr(0, dots));
    hi = std::stoll(range.substr(dots + 2));
  } catch (const std::exception&) {
    fail(ErrorKind::ParseError, "range must look like 2..10, got '" + range + "'");
  }
  if (lo < 1 || hi < lo)
    fail(ErrorKind::InvalidSpec, "range bounds must satisfy 1 <= lo <= hi");

  std::vector<OutputRecord> rows;
  for (long long n = lo; n <= hi; ++n) {
    std::string spec_str = fam + std::to_string(n);
    Clock::time_point t0 = Clock::now();
    GroupTable g = GroupTable::build(parse_group_spec(spec_str), opts.order_cap);
    ChiGenResult res = opts.search_only
                           ? sigma_search(g, opts.lattice_cap, opts.canonical)
                           : chigen(g, opts.lattice_cap, opts.canonical);
    rows.push_back(make_record(spec_str, g, res, ms_since(t0)));
  }

  if (opts.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const OutputRecord& rec : rows) arr.push_back(record_to_json(rec));
    out << arr.dump(2) << "\n";
    return 0;
  }
  out << std::left << std::setw(10) << "spec" << std::right << std::setw(7)
      << "order" << std::setw(9) << "chigen" << std::setw(7) << "sigma"
      << "  method\n";
  for (const OutputRecord& rec : rows) {
    out << std::left << std::setw(10) << rec.spec << std::right << std::setw(7)
        << rec.order << std::setw(9) << rec.chigen.to_string();
    if (rec.chigen.is_infinite())
      out << std::setw(7) << "-";
    else
      out << std::setw(7) << rec.chigen.value() + 1;
    out << "  " << rec.method << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"generating chromatic number engine for finite groups"};
  app.name("chigen");

  CommonOpts cg, cc, cl, ct;
  std::vector<std::string> suite_names;
  bool verify_json = false;
  long long budget = kDefaultColoringBudget;
  std::string family, range;

  const char* spec_help = "group or space spec, e.g. A4, Z2xZ4, D15, SD(3,4,2), V(3,2)";

  CLI::App* sub_chigen =
      app.add_subcommand("chigen", "compute the generating chromatic number");
  sub_chigen->add_option("spec", cg.spec, spec_help)->required();
  sub_chigen->add_flag("--json", cg.json, "emit a JSON record");
  sub_chigen->add_flag("--search-only", cg.search_only,
                       "bypass closed forms; always run the exact search");
  sub_chigen->add_flag("--canonical,!--no-canonical", cg.canonical,
                       "lexicographically least witness (default on)");
  sub_chigen->add_option("--cap", cg.order_cap, "order / point-count cap")
      ->check(CLI::PositiveNumber);
  sub_chigen->add_option("--lattice-cap", cg.lattice_cap, "subgroup enumeration cap")
      ->check(CLI::PositiveNumber);

  CLI::App* sub_cover =
      app.add_subcommand("cover", "exact minimum cover with the parts listed");
  sub_cover->add_option("spec", cc.spec, spec_help)->required();
  sub_cover->add_flag("--json", cc.json, "emit a JSON record");
  sub_cover->add_flag("--canonical,!--no-canonical", cc.canonical,
                      "lexicographically least witness (default on)");
  sub_cover->add_option("--cap", cc.order_cap, "order / point-count cap")
      ->check(CLI::PositiveNumber);
  sub_cover->add_option("--lattice-cap", cc.lattice_cap, "subgroup enumeration cap")
      ->check(CLI::PositiveNumber);

  CLI::App* sub_lattice =
      app.add_subcommand("lattice", "list every subgroup (or subspace)");
  sub_lattice->add_option("spec", cl.spec, spec_help)->required();
  sub_lattice->add_flag("--json", cl.json, "emit JSON");
  sub_lattice->add_option("--cap", cl.order_cap, "order / point-count cap")
      ->check(CLI::PositiveNumber);
  sub_lattice->add_option("--lattice-cap", cl.lattice_cap, "subgroup enumeration cap")
      ->check(CLI::PositiveNumber);

  CLI::App* sub_verify =
      app.add_subcommand("verify", "run consistency suites (default: all)");
  sub_verify->add_option("suite", suite_names, "suite names");
  sub_verify->add_flag("--json", verify_json, "emit JSON");
  sub_verify->add_option("--budget", budget, "coloring-oracle enumeration budget")
      ->check(CLI::PositiveNumber);

  CLI::App* sub_table =
      app.add_subcommand("table", "one record per family member, e.g. table D 2..10");
  sub_table->add_option("family", family, "family letter: Z, D, S or A")->required();
  sub_table->add_option("range", range, "inclusive range lo..hi")->required();
  sub_table->add_flag("--json", ct.json, "emit a JSON array");
  sub_table->add_flag("--search-only", ct.search_only,
                      "bypass closed forms; always run the exact search");
  sub_table->add_flag("--canonical,!--no-canonical", ct.canonical,
                      "lexicographically least witness (default on)");
  sub_table->add_option("--cap", ct.order_cap, "order cap")->check(CLI::PositiveNumber);
  sub_table->add_option("--lattice-cap", ct.lattice_cap, "subgroup enumeration cap")
      ->check(CLI::PositiveNumber);

  app.require_subcommand(0, 1);

  // Bare specs run the chigen command: `chigen A4 --json`.
  std::vector<std::string> argv = args;
  static const char* kCommands[] = {"chigen", "cover", "lattice", "verify", "table"};
  if (argv.empty()) {
    argv = {"--help"};
  } else if (argv[0][0] != '-' &&
             std::find(std::begin(kCommands), std::end(kCommands), argv[0]) ==
                 std::end(kCommands)) {
    argv.insert(argv.begin(), "chigen");
  }

  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(sub_chigen)) {
      cg.cap_explicit = sub_chigen->count("--cap") > 0;
      return cmd_chigen(cg, out);
    }
    if (app.got_subcommand(sub_cover)) {
      cc.cap_explicit = sub_cover->count("--cap") > 0;
      return cmd_cover(cc, out);
    }
    if (app.got_subcommand(sub_lattice)) {
      cl.cap_explicit = sub_lattice->count("--cap") > 0;
      return cmd_lattice(cl, out);
    }
    if (app.got_subcommand(sub_verify))
      return cmd_verify(suite_names, verify_json, budget, out);
    if (app.got_subcommand(sub_table)) return cmd_table(family, range, ct, out);
    fail(ErrorKind::Internal, "no command dispatched");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.is_user_error()) return 2;
    if (e.is_cap_error()) return 3;
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace chigen
