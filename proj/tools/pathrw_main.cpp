// pathrw: command-line frontend for the computational-path rewrite engine.
// Subcommands: normalize, equal, winding, rules, check, random. Exit codes:
// 0 success, 1 semantic negative (distinct / failed checks), 2 usage or parse
// error, 3 budget exhausted.
#include "CLI11.hpp"
#include "pathrw/checks.hpp"
#include "pathrw/parse.hpp"
#include "pathrw/spaces.hpp"

#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace pathrw;

int guarded(const std::function<int()>& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what()
              << "\n";
    return e.kind() == ErrorKind::BudgetExceeded ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "pathrw — normalize and compare computational paths with the "
      "LND-EQ-TRS rewrite rules"};
  app.require_subcommand(1);

  std::string env_file;
  int budget = 10000;
  bool use_ext = false;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--env", env_file,
                  "environment file (default: the built-in circle)");
    c->add_option("--budget", budget, "contraction budget (default 10000)")
        ->check(CLI::PositiveNumber);
    c->add_flag("--ext", use_ext,
                "enable the extensionality rule group (extl, extr, exp)");
  };
  auto load_env = [&]() {
    return env_file.empty() ? circle_env() : load_env_file(env_file);
  };
  auto eopts = [&]() {
    EngineOptions o;
    o.budget = budget;
    o.include_ext = use_ext;
    return o;
  };

  std::string nexpr, trace_fmt;
  CLI::App* cmd_normalize =
      app.add_subcommand("normalize", "rewrite an expression to normal form");
  add_common(cmd_normalize);
  cmd_normalize->add_option("expr", nexpr, "path expression")->required();
  cmd_normalize
      ->add_option("--trace", trace_fmt,
                   "print the rewrite trace (--trace or --trace=json)")
      ->expected(0, 1)
      ->default_str("text")
      ->check(CLI::IsMember({"text", "json"}));

  std::string eq1, eq2;
  CLI::App* cmd_equal =
      app.add_subcommand("equal", "decide rw-equality of two expressions");
  add_common(cmd_equal);
  cmd_equal->add_option("expr1", eq1, "first path expression")->required();
  cmd_equal->add_option("expr2", eq2, "second path expression")->required();

  std::string wexpr;
  CLI::App* cmd_winding = app.add_subcommand(
      "winding", "winding number of a loop at the circle's base point");
  add_common(cmd_winding);
  cmd_winding->add_option("expr", wexpr, "circle path expression")->required();

  CLI::App* cmd_rules =
      app.add_subcommand("rules", "list the rewrite-rule catalog");
  add_common(cmd_rules);

  std::string suite;
  std::uint64_t check_seed = 1;
  int check_samples = 0;
  bool serial = false;
  std::string persist;
  CLI::App* cmd_check =
      app.add_subcommand("check", "run a property-check suite");
  add_common(cmd_check);
  cmd_check
      ->add_option("suite", suite,
                   "one of: rules groupoid rho confluence circle nat "
                   "functorial naturality axiomk")
      ->required();
  cmd_check->add_option("--seed", check_seed, "PRNG seed (default 1)");
  cmd_check->add_option("--samples", check_samples,
                        "sample count (default: per-suite)");
  cmd_check->add_flag("--serial", serial,
                      "run the sample loop serially (reference mode)");
  cmd_check->add_option("--persist", persist,
                        "write confluence counterexamples to this file");

  std::uint64_t rand_seed = 1;
  int rand_count = 5, rand_depth = 5;
  bool rand_rho = false, rand_full = false;
  CLI::App* cmd_random =
      app.add_subcommand("random", "generate seeded random path terms");
  add_common(cmd_random);
  cmd_random->add_option("--seed", rand_seed, "PRNG seed (default 1)");
  cmd_random->add_option("--samples", rand_count,
                         "how many terms (default 5)");
  cmd_random->add_option("--depth", rand_depth, "maximum depth (default 5)");
  cmd_random->add_flag("--rho", rand_rho,
                       "reflexivity-built loop terms only");
  cmd_random->add_flag(
      "--full", rand_full,
      "also generate pair, substitution, and homotopy nodes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (app.got_subcommand(cmd_normalize))
    return guarded([&]() -> int {
      Environment env = load_env();
      PathPtr p = parse_path(nexpr, env);
      Trace t = normalize(p, eopts(), env);
      if (trace_fmt == "json")
        std::cout << trace_json(t) << "\n";
      else if (trace_fmt == "text")
        std::cout << trace_text(t);
      else
        std::cout << print_path(t.result) << "\n";
      return 0;
    });

  if (app.got_subcommand(cmd_equal))
    return guarded([&]() -> int {
      Environment env = load_env();
      PathPtr a = parse_path(eq1, env);
      PathPtr b = parse_path(eq2, env);
      bool eq = rw_equal(a, b, eopts(), env);
      std::cout << (eq ? "equal" : "distinct") << "\n";
      return eq ? 0 : 1;
    });

  if (app.got_subcommand(cmd_winding))
    return guarded([&]() -> int {
      Environment env = load_env();
      std::cout << winding(parse_path(wexpr, env), eopts(), env) << "\n";
      return 0;
    });

  if (app.got_subcommand(cmd_rules))
    return guarded([&]() -> int {
      for (const RewriteRule& r : catalog(use_ext)) {
        std::ostringstream head;
        head << std::setw(2) << r.id << "  " << std::left << std::setw(6)
             << r.name << " " << r.lhs << " |> " << r.rhs;
        std::cout << head.str() << "\n        [" << r.citation << "]\n";
      }
      return 0;
    });

  if (app.got_subcommand(cmd_check))
    return guarded([&]() -> int {
      CheckOptions co;
      co.samples = check_samples;
      co.seed = check_seed;
      co.mode = serial ? RunMode::Serial : RunMode::Parallel;
      co.include_ext = use_ext;
      co.budget = budget;
      co.persist_path = persist;
      CheckResult r = run_check(suite, co);
      std::cout << print_check(r) << "\n";
      return r.passed() ? 0 : 1;
    });

  if (app.got_subcommand(cmd_random))
    return guarded([&]() -> int {
      Environment env = load_env();
      for (int i = 0; i < rand_count; ++i) {
        std::uint64_t s = rand_seed + 0x9e3779b97f4a7c15ull *
                                          static_cast<std::uint64_t>(i);
        PathPtr p = rand_rho
                        ? random_rho_term(env, rand_depth, use_ext, s)
                        : random_term(env, rand_depth,
                                      rand_full ? full_weights() : GenWeights{},
                                      s);
        std::cout << print_path(p) << "\n";
      }
      return 0;
    });

  std::cerr << "error: no subcommand\n";
  return 2;
}
