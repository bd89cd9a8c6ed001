#include "doctest.h"

#include "pathrw/checks.hpp"
#include "pathrw/error.hpp"

#include <cstdio>
#include <fstream>

using namespace pathrw;

namespace {

CheckOptions small(int samples, RunMode mode) {
  CheckOptions opt;
  opt.samples = samples;
  opt.seed = 1729;
  opt.mode = mode;
  return opt;
}

} // namespace

TEST_CASE("the suite registry and dispatcher agree") {
  const auto& names = check_suite_names();
  CHECK(names.size() == 9);
  for (const auto& n : names) {
    CheckOptions opt = small(n == "confluence" ? 50 : 20, RunMode::Serial);
    CheckResult r = run_check(n, opt);
    CHECK(r.suite == n);
    CHECK(r.total > 0);
    CHECK(r.passed());
  }
  CHECK_THROWS_AS(run_check("bogus", small(1, RunMode::Serial)), Error);
}

TEST_CASE("parallel runs reproduce serial results exactly") {
  // Same seed, same samples: the aggregate and every counterexample string
  // must match, which pins the kernels to per-sample determinism.
  for (const char* suite : {"groupoid", "confluence", "rho", "circle",
                            "functorial", "naturality"}) {
    CAPTURE(suite);
    int n = std::string(suite) == "confluence" ? 300 : 100;
    CheckResult s = run_check(suite, small(n, RunMode::Serial));
    CheckResult p = run_check(suite, small(n, RunMode::Parallel));
    CHECK(s.total == p.total);
    CHECK(s.failures == p.failures);
    REQUIRE(s.counterexamples.size() == p.counterexamples.size());
    for (std::size_t i = 0; i < s.counterexamples.size(); ++i)
      CHECK(s.counterexamples[i] == p.counterexamples[i]);
  }
}

TEST_CASE("seeds move the sample, sample counts scale the total") {
  CheckResult a = run_check("groupoid", small(50, RunMode::Serial));
  CHECK(a.total == 50);
  CheckOptions other = small(50, RunMode::Serial);
  other.seed = 99;
  CheckResult b = run_check("groupoid", other);
  CHECK(b.total == 50);
  // Different seeds both pass; determinism per seed is what test above pins.
  CHECK(a.passed());
  CHECK(b.passed());
}

TEST_CASE("rule fidelity reports one slot per rule") {
  CheckResult r = check_rules();
  CHECK(r.total == 50);
  CHECK(r.passed());
}

TEST_CASE("reports render as suite: n/m pass") {
  CheckResult r = check_rules();
  std::string line = print_check(r);
  CHECK(line.find("suite rules: 50/50 pass") == 0);

  CheckResult fake;
  fake.suite = "demo";
  fake.total = 3;
  fake.failures = 1;
  fake.counterexamples.push_back("sample 2: it broke");
  std::string bad = print_check(fake);
  CHECK(bad.find("demo: 2/3 pass") != std::string::npos);
  CHECK(bad.find("it broke") != std::string::npos);
}

TEST_CASE("confluence counterexamples persist only on failure") {
  std::string path = "checks_persist_probe.txt";
  std::remove(path.c_str());
  CheckOptions opt = small(200, RunMode::Serial);
  opt.persist_path = path;
  CheckResult r = run_check("confluence", opt);
  CHECK(r.passed());
  std::ifstream f(path);
  CHECK_FALSE(f.good()); // nothing failed, nothing written
  std::remove(path.c_str());
}

TEST_CASE("the sampling environments parse and disagree as intended") {
  const Environment& chk = check_env();
  const Environment& smp = sampling_env();
  // The fidelity environment carries the full generator set...
  CHECK(chk.has_hom("H"));
  CHECK(chk.has_fun("pm"));
  CHECK(chk.funs.at("pm").kind == FunDeclKind::ProductMap);
  // ...while the confluence soup omits the one-directional generators.
  CHECK(smp.homs.empty());
  for (const auto& [name, fd] : smp.funs)
    CHECK(fd.kind != FunDeclKind::ProductMap);
  CHECK(smp.has_atom("a"));
  CHECK(smp.has_atom("e"));
}
