#include "brq/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <iostream>
#include <sstream>

#include "brq/brauer.hpp"
#include "brq/error.hpp"
#include "brq/io.hpp"
#include "brq/verify.hpp"

namespace brq {

namespace {

using io::Json;

struct Options {
  std::string verb;
  std::string input;
  std::string kind;
  std::string suite;
  std::string fixture_dir;
  std::vector<int> r;
  bool json = false;
  bool witness = false;
  bool all_subgroups = false;
  bool stamp = false;
  std::size_t max_order = 0;
  std::size_t max_rank = 0;
};

Limits limits_of(const Options& o) {
  Limits l = Limits::defaults();
  if (o.max_order) {
    l.finite_cohomology = l.lattice_cohomology = o.max_order;
    l.group_order = std::max(l.group_order, o.max_order);
  }
  if (o.max_rank) l.lattice_rank = o.max_rank;
  return l;
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

void emit(const Options& o, std::ostream& out, Json j, std::string text) {
  if (o.json) {
    if (o.stamp) j["generated_at"] = utc_now();
    out << j.dump(2) << "\n";
  } else {
    if (o.stamp) text += "generated at " + utc_now() + "\n";
    out << text;
  }
}

void emit_report(const Options& o, std::ostream& out, const BrauerReport& r) {
  emit(o, out, io::report_json(r, o.witness), io::report_text(r, o.witness));
}

void reject(bool bad, const std::string& what) {
  if (bad) throw ValidationError(what);
}

int run_verify(const Options& o, std::ostream& out) {
  SuiteOptions so;
  so.fixture_dir = o.fixture_dir;
  std::vector<std::string> names;
  if (o.suite == "all")
    names = suite_names();
  else
    names = {o.suite};
  for (const auto& n : names)
    if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
      throw DomainError("unknown suite '" + n + "'");
  bool ok = true;
  Json all = Json::array();
  std::string text;
  for (const auto& n : names) {
    const SuiteResult r = run_suite(n, so);
    ok = ok && r.ok();
    Json cases = Json::array();
    for (const auto& c : r.cases) cases.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    all.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"total", r.cases.size()}, {"cases", cases}});
    text += r.transcript();
  }
  emit(o, out, names.size() == 1 ? all[0] : Json{{"suites", all}}, text);
  return ok ? 0 : 1;
}

int dispatch(const Options& o, std::ostream& out) {
  const Limits limits = limits_of(o);
  reject(o.all_subgroups && o.verb != "b0" && o.verb != "group-info",
         "--all-subgroups applies to b0 and group-info only");
  reject(!o.r.empty() && (o.verb != "brnr" || (o.kind != "grassmannian" && o.kind != "flag")),
         "--r applies to brnr grassmannian and brnr flag only");
  if (o.verb == "verify") return run_verify(o, out);

  const io::Document doc = io::parse_document(io::load_json(o.input), limits);
  const FiniteGroup& g = doc.group;

  if (o.verb == "group-info") {
    emit(o, out, io::group_info_json(g, o.all_subgroups), io::group_info_text(g, o.all_subgroups));
  } else if (o.verb == "h1" || o.verb == "h2") {
    const GModule m = doc.module ? *doc.module : GModule::trivial_qz(g);
    const CohomologyGroup h = o.verb == "h1" ? h1(m, 0, limits)
                              : m.kind() == GModule::Kind::trivial_qz ? h2_qz(g, 0, limits)
                                                                      : h2(m, 0, limits);
    emit(o, out, io::cohomology_json(h, o.witness), io::cohomology_text(h, o.witness));
  } else if (o.verb == "b0") {
    emit_report(o, out, unramified_report(BrauerContext(g, 0, !o.all_subgroups, limits), {}, "bogomolov"));
  } else if (o.verb == "brnr") {
    if (o.kind == "linear") {
      emit_report(o, out, br_nr_linear(g, limits));
    } else if (o.kind == "toric") {
      reject(!doc.toric, "brnr toric: the document has no \"toric\" lattice");
      emit_report(o, out, br_nr_toric(*doc.toric, limits));
    } else {
      reject(!doc.semilinear, "brnr " + o.kind + ": the document has no \"projective\" action");
      const SemilinearAction& a = *doc.semilinear;
      if (o.kind == "projective") {
        reject(a.has_correlations(), "brnr projective: correlations act on a Grassmannian, use brnr grassmannian");
        emit_report(o, out, br_nr_projective(collineation_action(a), limits));
      } else if (o.kind == "grassmannian") {
        reject(o.r.size() != 1, "brnr grassmannian: give a single --r");
        emit_report(o, out, br_nr_grassmannian(a, o.r[0], limits));
      } else {
        reject(o.r.empty(), "brnr flag: give --r r1,r2,...");
        emit_report(o, out, br_nr_flag(a, o.r, limits));
      }
    }
  } else if (o.verb == "stack") {
    reject(!doc.pic, "stack: the document has no \"pic\" lattice");
    const AbelianStructure s = br_stack_fixed_point(g, *doc.pic, doc.fixed_point.value_or(false), limits);
    Json j = {{"kind", "stack"}, {"fixed_point", true}, {"invariant_factors", s.invariant_factors()}};
    if (o.witness) j["witnesses"] = io::structure_json(s, true)["witnesses"];
    emit(o, out, j, "Br([V/G]) = " + io::structure_text(s) + "\n");
  }
  return 0;
}

void print_error(bool json, const std::string& kind, const std::string& message, std::ostream& out,
                 std::ostream& err) {
  if (json)
    out << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump(2) << "\n";
  else
    err << "error: " << message << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Bogomolov multipliers and unramified Brauer groups of quotients", "brq"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "JSON output");
  app.add_flag("--witness", o.witness, "include witness cocycles or class coordinates");
  app.add_flag("--stamp", o.stamp, "append a UTC timestamp");
  app.add_option("--max-order", o.max_order, "group order limit for cohomology");
  app.add_option("--max-rank", o.max_rank, "lattice rank limit");

  auto* gi = app.add_subcommand("group-info", "order, center, abelianization and bicyclic subgroups");
  gi->add_option("input", o.input, "JSON document")->required();
  gi->add_flag("--all-subgroups", o.all_subgroups, "list the bicyclic subgroup representatives");
  for (const char* verb : {"h1", "h2"}) {
    auto* c = app.add_subcommand(verb, std::string(verb) + " of the document's module (Q/Z if absent)");
    c->add_option("input", o.input, "JSON document")->required();
  }
  auto* b0 = app.add_subcommand("b0", "Bogomolov multiplier");
  b0->add_option("input", o.input, "JSON document")->required();
  b0->add_flag("--all-subgroups", o.all_subgroups, "check every bicyclic subgroup, not one per conjugacy class");
  auto* br = app.add_subcommand("brnr", "unramified Brauer group of V/G");
  br->add_option("kind", o.kind, "linear, projective, grassmannian, flag or toric")
      ->required()
      ->check(CLI::IsMember({"linear", "projective", "grassmannian", "flag", "toric"}));
  br->add_option("input", o.input, "JSON document")->required();
  br->add_option("--r", o.r, "subspace dimension(s)")->delimiter(',');
  auto* st = app.add_subcommand("stack", "Br([V/G]) when G has a fixed point");
  st->add_option("input", o.input, "JSON document with \"pic\" and \"flags\"")->required();
  auto* ve = app.add_subcommand("verify", "run a bundled verification suite");
  ve->add_option("suite", o.suite, "suite name or 'all'")->required();
  ve->add_option("--fixture-dir", o.fixture_dir, "fixture directory");

  const bool json = std::find(args.begin(), args.end(), "--json") != args.end();
  const auto verb = std::find_if(args.begin(), args.end(), [](const std::string& a) { return a.empty() || a[0] != '-'; });
  if (verb != args.end() && verb == args.begin() && !app.get_subcommand_no_throw(*verb)) {
    print_error(json, "usage", "unknown verb '" + *verb + "'", out, err);
    return 2;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    print_error(json, "usage", e.what(), out, err);
    return 2;
  }
  for (auto* sub : app.get_subcommands()) o.verb = sub->get_name();
  o.json = json || o.json;

  try {
    return dispatch(o, out);
  } catch (const SizeLimitError& e) {
    print_error(o.json, e.kind(), e.what(), out, err);
    return 3;
  } catch (const Error& e) {
    print_error(o.json, e.kind(), e.what(), out, err);
    return 2;
  } catch (const std::exception& e) {
    print_error(o.json, "internal", e.what(), out, err);
    return 2;
  }
}

}  // namespace brq
