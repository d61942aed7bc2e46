#include <functional>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "rnlab/bs_selfsim.hpp"
#include "rnlab/errors.hpp"

namespace rnlab::cli {

bool RunReport::passed() const {
  for (const auto& c : checks) {
    if (c.status != Status::pass) return false;
  }
  return true;
}

int RunReport::exit_code() const {
  bool inconclusive = false;
  for (const auto& c : checks) {
    if (c.status == Status::fail) return kCheckFailed;
    if (c.status == Status::inconclusive) inconclusive = true;
  }
  return inconclusive ? kBudget : kPass;
}

std::string RunReport::to_string() const {
  std::ostringstream out;
  out << "seed " << seed << '\n';
  for (const auto& c : checks) {
    const char* tag = c.status == Status::pass ? "PASS" : (c.status == Status::fail ? "FAIL" : "INCONCLUSIVE");
    out << '[' << tag << "] " << c.name << ": " << c.diagnostic << '\n';
  }
  out << (passed() ? "all checks passed" : "verification failed") << '\n';
  return out.str();
}

namespace {

using bs::kA;
using bs::kB;

GroupWord b_pow(long long k) { return GroupWord::power(gen(kB), k); }

GroupWord b_pow_a(long long k) { return b_pow(k) * GroupWord{gen(kA)}; }

// Runs one check, turning exhausted budgets into INCONCLUSIVE.
void run_check(RunReport& report, const std::string& name, const std::function<std::string(bool&)>& body) {
  Check c{name, Status::pass, {}};
  try {
    bool ok = true;
    c.diagnostic = body(ok);
    c.status = ok ? Status::pass : Status::fail;
  } catch (const SearchBudgetExceeded& e) {
    c.status = Status::inconclusive;
    c.diagnostic = e.what();
  }
  report.checks.push_back(std::move(c));
}

}  // namespace

RunReport verify_bs_machine(const MealyMachine& m, const VerifyOptions& opts) {
  const int n = opts.n;
  const int d = m.arity();
  const bool persistent = d == n + 2;
  RunReport report;
  report.seed = opts.seed;

  if (d != n + 1 && d != n + 2) {
    report.checks.push_back({"arity", Status::fail,
                             "arity " + std::to_string(d) + " is neither n+1 nor n+2 for n = " + std::to_string(n)});
    return report;
  }
  report.checks.push_back({"arity", Status::pass,
                           "arity " + std::to_string(d) + (persistent ? " (persistent form)" : " (n+1)")});

  auto to_m = [&](const GroupWord& w) { return bs::to_machine(w, m); };
  const std::size_t budget = opts.max_tuples;

  run_check(report, "relation b^-1 a^-1 b^n a acts trivially", [&](bool& ok) {
    ok = m.is_trivial(to_m(bs::relation_check_word(n)), budget);
    return ok ? std::string("trivial") : std::string("acts non-trivially");
  });

  run_check(report, "ab and b^n a have the same action", [&](bool& ok) {
    ok = m.equal(to_m(bs::parse("a b")), to_m(b_pow_a(n)), budget);
    return ok ? std::string("equal") : std::string("differ");
  });

  run_check(report, "state closure of {a, b}", [&](bool& ok) {
    const auto mp = std::make_shared<const MealyMachine>(m);
    const std::vector<Element> seeds{{mp, to_m(bs::parse("a"))}, {mp, to_m(bs::parse("b"))}};
    std::vector<Element> reps;
    const std::size_t expected = static_cast<std::size_t>(n) + 2;
    try {
      reps = state_closure(seeds, expected, budget);
    } catch (const SearchBudgetExceeded&) {
      ok = false;
      return "more than " + std::to_string(expected) + " state classes";
    }
    std::vector<GroupWord> targets{GroupWord{}, b_pow(1)};
    for (int k = 0; k < n; ++k) targets.push_back(b_pow_a(k));
    std::vector<bool> hit(targets.size(), false);
    for (const auto& r : reps) {
      bool matched = false;
      for (std::size_t t = 0; t < targets.size(); ++t) {
        if (!hit[t] && bs::bs_equal(bs::from_machine(r.word, m), targets[t], n)) {
          hit[t] = matched = true;
          break;
        }
      }
      if (!matched) {
        ok = false;
        return "unexpected state " + r.to_string();
      }
    }
    ok = reps.size() == expected;
    return std::to_string(reps.size()) + " classes, expected " + std::to_string(expected);
  });

  run_check(report, "b^k a sections", [&](bool& ok) {
    const Permutation alpha = bs::build_alpha(n).extended(d);
    const Permutation beta = bs::build_beta(n).extended(d);
    for (int k = 0; k < n; ++k) {
      const GroupWord g = to_m(b_pow_a(k));
      if (m.root_permutation(g) != compose(beta.pow(k), alpha)) {
        ok = false;
        return "root permutation of b^" + std::to_string(k) + " a is not beta^k alpha";
      }
      // (a, ba, ..., b^k a, b^k a, ..., b^(n-1) a)
      for (int i = 1; i <= n + 1; ++i) {
        const int j = i == 1 ? 0 : (i <= k + 1 ? i - 1 : i - 2);
        if (!m.equal(m.section(g, i), to_m(b_pow_a(j)), budget)) {
          ok = false;
          return "section " + std::to_string(i) + " of b^" + std::to_string(k) + " a is not b^" + std::to_string(j) + " a";
        }
      }
      if (persistent && !m.equal(m.section(g, d), g, budget)) {
        ok = false;
        return "last section of b^" + std::to_string(k) + " a is not itself";
      }
    }
    return std::string("0 <= k <= n-1 confirmed");
  });

  run_check(report, "powers of b act non-trivially", [&](bool& ok) {
    for (int k = 1; k <= 100; ++k) {
      if (m.is_trivial(to_m(b_pow(k)), budget)) {
        ok = false;
        return "b^" + std::to_string(k) + " acts trivially";
      }
    }
    return std::string("b^k non-trivial for 1 <= k <= 100");
  });

  run_check(report, "weakly diagonal on {a, b}", [&](bool& ok) {
    const auto r = bs::check_weakly_diagonal(m, {"a", "b"}, n);
    ok = r.verdict;
    for (const auto& line : r.lines) {
      if (!line.image.finite_order()) {
        return line.generator + "_" + std::to_string(line.letter) + " " + line.generator + "^-1 = " +
               bs::format(line.quotient) + " has infinite order";
      }
    }
    return std::string("every s_i s^-1 is torsion in Z + Z/(n-1)");
  });

  run_check(report, "automaton agrees with the affine model", [&](bool& ok) {
    std::mt19937_64 rng(opts.seed);
    std::size_t disagreements = 0;
    std::string first;
    for (std::size_t t = 0; t < opts.oracle_pairs; ++t) {
      const GroupWord u = random_word(2, 8, rng);
      const GroupWord v = random_word(2, 8, rng);
      const bool affine = bs::bs_equal(u, v, n);
      const bool automaton = m.equal(to_m(u), to_m(v), budget);
      if (affine != automaton) {
        if (disagreements++ == 0) first = bs::format(u) + " vs " + bs::format(v);
      }
    }
    ok = disagreements == 0;
    if (ok) return std::to_string(opts.oracle_pairs) + " random pairs, 0 disagreements";
    return std::to_string(disagreements) + " disagreements, first " + first;
  });

  if (persistent) {
    run_check(report, "persistent", [&](bool& ok) {
      ok = is_persistent(m, 200, opts.seed);
      return ok ? std::string("every state fixes the last letter with itself as section")
                : std::string("some state is not persistent");
    });
    run_check(report, "restriction matches the (n+1)-ary action", [&](bool& ok) {
      const auto ref = bs::build_machine(n);
      std::mt19937_64 rng(opts.seed + 1);
      std::uniform_int_distribution<std::size_t> depth(0, 8);
      for (int t = 0; t < 100; ++t) {
        const GroupWord g = random_word(2, 6, rng);
        const TreeVertex v = random_vertex(n + 1, depth(rng), rng);
        const TreeVertex lifted(d, v.letters());
        if (m.act(to_m(g), lifted).letters() != ref->act(g, v).letters()) {
          ok = false;
          return "mismatch for " + bs::format(g) + " on " + v.to_string();
        }
      }
      return std::string("100 random vertices agree");
    });
  }
  return report;
}

}  // namespace rnlab::cli
