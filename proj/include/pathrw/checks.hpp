// Property-check suites over the rewrite engine: per-rule fidelity against a
// curated instance table, the groupoid laws on random strict terms,
// reflexivity collapse, termination/local-confluence sampling with persisted
// counterexamples, the circle's winding-number group structure, the naturals
// path space, functoriality, homotopy naturality, and the axiom-K separation.
//
// Every sampled suite draws its i-th case from a seed derived only from
// (seed, i), so serial and parallel runs produce identical reports; the
// parallel mode fans the sample loop out with OpenMP when available.
#pragma once

#include "pathrw/engine.hpp"
#include "pathrw/env.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pathrw {

enum class RunMode { Serial, Parallel };

struct CheckResult {
  std::string suite;
  int total = 0;
  int failures = 0;
  // First few failures in canonical syntax (the confluence suite persists the
  // complete list to a file as well).
  std::vector<std::string> counterexamples;
  double seconds = 0.0;
  bool passed() const { return failures == 0; }
};

struct CheckOptions {
  int samples = 0;            // 0 = suite default
  std::uint64_t seed = 1;
  RunMode mode = RunMode::Parallel;
  bool include_ext = false;   // extensionality group in generated grammars
  int budget = 10000;
  std::string persist_path;   // confluence counterexample file; "" = skip
};

// One catalog rule with a concrete instance of its left-hand side and the
// exact term it must contract to.
struct RuleCase {
  std::string rule;
  std::string input;
  std::string expect;
};

// The environment the fidelity table and the term samplers draw from: a chain
// of atoms (variable- and pair-typed), opaque functions, a constructor, a
// product map, and one declared homotopy.
const Environment& check_env();

// As check_env but without the product map and the homotopy: the environment
// under which one-step reducts of the sampled fragment provably rejoin.
const Environment& sampling_env();

// One instance per catalog rule (the extensionality group included).
const std::vector<RuleCase>& rule_fidelity_cases();

CheckResult check_rules();
CheckResult check_groupoid(const CheckOptions& opt);
CheckResult check_rho(const CheckOptions& opt);
CheckResult check_confluence(const CheckOptions& opt);
CheckResult check_circle(const CheckOptions& opt);
CheckResult check_nat(const CheckOptions& opt);
CheckResult check_functorial(const CheckOptions& opt);
CheckResult check_naturality(const CheckOptions& opt);
CheckResult check_axiomk(const CheckOptions& opt);

// Suite names known to run_check, in display order.
const std::vector<std::string>& check_suite_names();

// Runs the named suite; throws Error{Parse} for an unknown name.
CheckResult run_check(const std::string& suite, const CheckOptions& opt);

std::string print_check(const CheckResult& r);

} // namespace pathrw
