// Acceptance criteria 1-12: one PASS/FAIL line each.

#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "brq/verify.hpp"

using namespace brq;

namespace {

std::map<std::string, SuiteResult> run_all() {
  std::map<std::string, SuiteResult> out;
  for (const auto& name : suite_names()) out[name] = run_suite(name);
  return out;
}

std::string summary(const SuiteResult& r) {
  std::ostringstream s;
  s << r.passed() << "/" << r.cases.size() << " cases, " << std::fixed << std::setprecision(1) << r.seconds << " s";
  return s.str();
}

struct Line {
  bool pass;
  std::string detail;
};

Line suite_line(const SuiteResult& r, double max_seconds = 0) {
  const bool in_time = max_seconds == 0 || r.seconds < max_seconds;
  std::string detail = summary(r);
  for (const auto& c : r.cases)
    if (!c.pass) detail += "; failed " + c.name + ": " + c.detail;
  if (!in_time) detail += "; over the time budget";
  return {r.ok() && in_time, detail};
}

Line cases_line(const SuiteResult& r, const std::vector<std::string>& names) {
  bool pass = true;
  std::string detail;
  for (const auto& n : names) {
    bool found = false;
    for (const auto& c : r.cases)
      if (c.name == n) {
        found = true;
        pass = pass && c.pass;
        detail += (detail.empty() ? "" : "; ") + c.name + ": " + c.detail;
      }
    if (!found) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + n + ": missing";
    }
  }
  return {pass, detail};
}

}  // namespace

int main() {
  setenv("BRQ_THREADS", "1", 1);
  const auto first = run_all();
  setenv("BRQ_THREADS", "4", 1);
  const auto second = run_all();

  bool same = true;
  std::string differing;
  for (const auto& [name, r] : first)
    if (r.transcript() != second.at(name).transcript()) {
      same = false;
      differing += " " + name;
    }
  const Line fixtures = suite_line(first.at("fixtures"));

  const std::vector<std::pair<std::string, Line>> lines = {
      {"abelian H2 sweep", suite_line(first.at("abelian-sweep"), 300)},
      {"cyclic vanishing", suite_line(first.at("cyclic-vanishing"))},
      {"B0 vanishing corpus", suite_line(first.at("b0-corpus"), 600)},
      {"B0 of the order 64 group", suite_line(first.at("b0-order64"), 600)},
      {"Klein four quotient stack", cases_line(first.at("stack"), {"Klein four on P3"})},
      {"A4 and the moduli space of six points",
       cases_line(first.at("stack"), {"A4 restriction to Klein four", "A4 on the moduli space of six points"})},
      {"bar resolution and small complex agree", suite_line(first.at("oracle-equivalence"))},
      {"corestriction after restriction", suite_line(first.at("transfer"))},
      {"Plucker correlation oracle", suite_line(first.at("plucker-oracle"))},
      {"formula degeneracies", suite_line(first.at("degeneracies"))},
      {"toric quotients by subgroups of GL2(Z)", suite_line(first.at("toric"))},
      {"determinism", {same && fixtures.pass,
                       (same ? std::string("transcripts identical with 1 and 4 threads")
                             : "transcripts differ:" + differing) +
                           "; stored fixtures " + fixtures.detail}},
  };

  int failed = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& [title, line] = lines[i];
    std::cout << "criterion " << i + 1 << " " << (line.pass ? "PASS" : "FAIL") << " " << title << " (" << line.detail
              << ")\n";
    failed += line.pass ? 0 : 1;
  }
  std::cout << (lines.size() - static_cast<std::size_t>(failed)) << "/" << lines.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
