#pragma once

// Named verification bundles, shared by `brq verify` and the acceptance test.

#include <string>
#include <vector>

namespace brq {

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail;  // computed values; deterministic
};

struct SuiteResult {
  std::string suite;
  std::vector<CaseResult> cases;
  double seconds = 0;

  std::size_t passed() const;
  bool ok() const { return !cases.empty() && passed() == cases.size(); }
  /// Case names, outcomes and details, without timings.
  std::string transcript() const;
};

struct SuiteOptions {
  std::string fixture_dir;  // defaults to the bundled fixtures
};

/// abelian-sweep, cyclic-vanishing, b0-corpus, oracle-equivalence, transfer,
/// plucker-oracle, degeneracies, toric, fixtures.
const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});

std::string default_fixture_dir();

}  // namespace brq
