#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <optional>

#include "rnlab/bs_selfsim.hpp"
#include "rnlab/dehn.hpp"
#include "rnlab/errors.hpp"
#include "rnlab/machine_format.hpp"
#include "rnlab/rn_format.hpp"
#include "rnlab/roever.hpp"

namespace rnlab::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MachineSource {
  std::string file;
  std::optional<int> n;
  bool persistent = false;

  MachinePtr load() const {
    if (!file.empty()) return std::make_shared<const MealyMachine>(load_machine(file));
    if (!n) throw UsageError("give --machine FILE or --n N");
    if (*n < 2) throw UsageError("n must be >= 2");
    return persistent ? bs::build_persistent_machine(*n) : bs::build_machine(*n);
  }
};

RNElement load_valid_element(const std::string& path, const MachinePtr& m) {
  RNElement e = load_rn_element(path, m);
  if (auto v = rn_validate(e); !v) throw UsageError(path + ": invalid element: " + v.diagnostic);
  return e;
}

int verdict(std::ostream& out, bool ok, const char* yes, const char* no) {
  out << (ok ? yes : no) << '\n';
  return ok ? kPass : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Self-similar groups, Roever-Nekrashevych groups and BS(1,n) Dehn areas"};
  app.require_subcommand(1);

  std::size_t max_tuples = kDefaultMaxTuples;

  // gen-bs
  int gen_n = 0;
  bool gen_persistent = false;
  auto* gen_cmd = app.add_subcommand("gen-bs", "Print the canonical BS(1,n) machine file");
  gen_cmd->add_option("n,--n", gen_n, "n >= 2")->required();
  gen_cmd->add_flag("--persistent", gen_persistent, "Persistent extension on the (n+2)-ary tree");

  // verify
  std::string verify_file;
  std::optional<int> verify_n;
  unsigned seed = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Check the BS(1,n) recursion properties of a machine file");
  verify_cmd->add_option("machine", verify_file, "Machine file")->required();
  verify_cmd->add_option("--n", verify_n, "n (default: inferred from the arity)");
  verify_cmd->add_option("--seed", seed, "Seed for sampled checks");
  verify_cmd->add_option("--max-tuples", max_tuples, "Budget for each triviality search");

  // rn
  MachineSource source;
  auto* rn_cmd = app.add_subcommand("rn", "Arithmetic in V_d(G)");
  rn_cmd->require_subcommand(1);
  auto add_source = [&](CLI::App* c) {
    c->add_option("--machine", source.file, "Machine file");
    c->add_option("--n", source.n, "Use the generated BS(1,n) machine");
    c->add_flag("--persistent", source.persistent, "With --n: use the persistent machine");
    c->add_option("--max-tuples", max_tuples, "Budget for each triviality search");
  };
  std::vector<std::string> files;
  std::string prefix;
  std::string state_name;
  auto* rn_compose_cmd = rn_cmd->add_subcommand("compose", "Print f o h");
  rn_compose_cmd->add_option("elements", files, "f h")->required()->expected(2);
  auto* rn_invert_cmd = rn_cmd->add_subcommand("invert", "Print the inverse");
  rn_invert_cmd->add_option("element", files)->required()->expected(1);
  auto* rn_equal_cmd = rn_cmd->add_subcommand("equal", "Decide equality");
  rn_equal_cmd->add_option("elements", files, "x y")->required()->expected(2);
  auto* rn_iota_cmd = rn_cmd->add_subcommand("iota", "Print iota_w(h)");
  rn_iota_cmd->add_option("prefix", prefix, "Prefix w as digits, - for the root")->required();
  rn_iota_cmd->add_option("element", files)->required()->expected(1);
  auto* rn_sigma_cmd = rn_cmd->add_subcommand("sigma-check", "Check iota_1(s) = sigma iota_11(s_1)...iota_1d(s_d)");
  rn_sigma_cmd->add_option("state", state_name)->required();
  for (auto* c : {rn_compose_cmd, rn_invert_cmd, rn_equal_cmd, rn_iota_cmd, rn_sigma_cmd}) add_source(c);

  // dehn
  int dehn_n = 2;
  int dehn_k = 1;
  int dehn_k_max = 6;
  std::string format = "text";
  dehn::AreaLimits limits;
  std::vector<std::string> word_tokens;
  auto* dehn_cmd = app.add_subcommand("dehn", "Areas of BS(1,n) relations");
  dehn_cmd->require_subcommand(1);
  auto* table_cmd = dehn_cmd->add_subcommand("table", "Strategy areas of the witness words w_1..w_kmax");
  table_cmd->add_option("--n", dehn_n)->required();
  table_cmd->add_option("--k-max", dehn_k_max)->required();
  table_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));
  auto* strategy_cmd = dehn_cmd->add_subcommand("strategy", "Corridor strategy area of w_k");
  strategy_cmd->add_option("--n", dehn_n)->required();
  strategy_cmd->add_option("--k", dehn_k)->required();
  auto* area_cmd = dehn_cmd->add_subcommand("area", "Exact area of a short relation");
  area_cmd->add_option("--n", dehn_n)->required();
  area_cmd->add_option("--max-area", limits.max_area);
  area_cmd->add_option("--max-len", limits.max_len);
  area_cmd->add_option("word", word_tokens, "Word over a, b; ' marks inverses")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*gen_cmd) {
      if (gen_n < 2) throw UsageError("n must be >= 2");
      out << serialize_machine(gen_persistent ? *bs::build_persistent_machine(gen_n) : *bs::build_machine(gen_n));
      return kPass;
    }

    if (*verify_cmd) {
      const MealyMachine m = load_machine(verify_file);
      if (!m.alphabet().contains("a") || !m.alphabet().contains("b")) {
        throw UsageError("machine must declare states 'a' and 'b'");
      }
      VerifyOptions opts;
      opts.n = verify_n.value_or(is_persistent(m, 0) ? m.arity() - 2 : m.arity() - 1);
      if (opts.n < 2) throw UsageError("n must be >= 2");
      opts.seed = seed;
      opts.max_tuples = max_tuples;
      const RunReport report = verify_bs_machine(m, opts);
      out << report.to_string();
      return report.exit_code();
    }

    if (*rn_cmd) {
      const MachinePtr m = source.load();
      if (*rn_compose_cmd) {
        out << serialize_rn_element(rn_compose(load_valid_element(files[0], m), load_valid_element(files[1], m)));
        return kPass;
      }
      if (*rn_invert_cmd) {
        out << serialize_rn_element(rn_inverse(load_valid_element(files[0], m)));
        return kPass;
      }
      if (*rn_equal_cmd) {
        const bool eq = rn_equal(load_valid_element(files[0], m), load_valid_element(files[1], m), max_tuples);
        return verdict(out, eq, "equal", "not equal");
      }
      if (*rn_iota_cmd) {
        TreeVertex w;
        try {
          w = TreeVertex::parse(m->arity(), prefix);
        } catch (const std::exception& e) {
          throw UsageError(std::string("bad prefix: ") + e.what());
        }
        out << serialize_rn_element(iota(w, load_valid_element(files[0], m)));
        return kPass;
      }
      if (*rn_sigma_cmd) {
        if (!m->alphabet().contains(state_name)) throw UsageError("unknown state '" + state_name + "'");
        const bool ok = verify_sigma_identity(m->alphabet().symbol(state_name), m, max_tuples);
        return verdict(out, ok, "pass", "fail");
      }
    }

    if (*dehn_cmd) {
      if (dehn_n < 2) throw UsageError("n must be >= 2");
      if (*table_cmd) {
        if (dehn_k_max < 2) throw UsageError("k-max must be >= 2");
        const auto rows = dehn::growth_table(dehn_n, dehn_k_max);
        out << (format == "csv" ? dehn::format_growth_csv(rows) : dehn::format_growth_text(rows));
        return kPass;
      }
      if (*strategy_cmd) {
        if (dehn_k < 1) throw UsageError("k must be >= 1");
        out << dehn::area_strategy(dehn_k, dehn_n).area.str() << '\n';
        return kPass;
      }
      if (*area_cmd) {
        GroupWord w;
        try {
          w = bs::alphabet().parse_tokens(word_tokens);
        } catch (const ParseError& e) {
          throw UsageError(e.what());
        }
        if (!dehn::is_relation(w, dehn_n)) throw UsageError("word is not a relation of BS(1," + std::to_string(dehn_n) + ")");
        const auto r = dehn::area_oracle(w, dehn_n, limits);
        if (r.exact) {
          out << r.area.str() << '\n';
        } else {
          out << "<= " << r.area.str() << " (upper bound: length cap " << limits.max_len << " pruned the search)\n";
        }
        return kPass;
      }
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const SearchBudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << " (bound " << e.bound() << ")\n";
    return kBudget;
  } catch (const AreaBudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << " (bound " << e.bound() << ")\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace rnlab::cli
