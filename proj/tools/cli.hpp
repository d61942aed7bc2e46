#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "rnlab/mealy.hpp"

namespace rnlab::cli {

enum ExitCode : int {
  kPass = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kBudget = 3,
};

enum class Status { pass, fail, inconclusive };

struct Check {
  std::string name;
  Status status = Status::pass;
  std::string diagnostic;
};

struct RunReport {
  unsigned seed = 0;
  std::vector<Check> checks;

  bool passed() const;
  /// 0 if every check passed, 1 if any failed, otherwise 3.
  int exit_code() const;
  std::string to_string() const;
};

struct VerifyOptions {
  int n = 2;
  unsigned seed = 0;
  std::size_t max_tuples = kDefaultMaxTuples;
  std::size_t oracle_pairs = 500;
};

/// Re-checks every property claimed for the BS(1,n) recursion on a machine
/// with states "a" and "b": arity n+1 for the plain recursion, n+2 for the
/// persistent one (which adds the persistence and restriction checks).
RunReport verify_bs_machine(const MealyMachine& m, const VerifyOptions& opts);

/// Entry point shared by the executable and the tests; args exclude argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rnlab::cli
