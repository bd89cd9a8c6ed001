#include "doctest.h"

#include "pathrw/checks.hpp"
#include "pathrw/engine.hpp"
#include "pathrw/parse.hpp"
#include "pathrw/random_term.hpp"

#include "json.hpp"

using namespace pathrw;

TEST_CASE("normalization reaches the expected forms") {
  Environment env = circle_env();
  EngineOptions opt;
  CHECK(print_path(normalize(parse_path("sigma(sigma(loop))", env), opt, env)
                       .result) == "loop");

  Trace t = normalize(parse_path("tau(loop,sigma(loop))", env), opt, env);
  CHECK(t.complete);
  CHECK(print_path(t.result) == "rho(base)");
  REQUIRE(t.steps.size() == 1);
  CHECK(t.steps[0].rule == "tr");
  CHECK(t.steps[0].pos == Position{});
}

TEST_CASE("a trace replays step by step") {
  const Environment& env = check_env();
  EngineOptions opt;
  for (int i = 0; i < 200; ++i) {
    PathPtr p = random_term(env, 5, full_weights(), 61000 + i);
    Trace t = normalize(p, opt, env);
    CHECK(t.complete);
    CHECK(path_eq(t.initial, p));
    PathPtr cur = p;
    for (const StepRecord& s : t.steps) {
      CAPTURE(print_path(cur));
      CAPTURE(s.rule);
      REQUIRE(path_eq(cur, s.before));
      const RewriteRule* rule = find_rule(s.rule);
      REQUIRE(rule != nullptr);
      cur = contract_at(cur, s.pos, *rule, env);
      REQUIRE(path_eq(cur, s.after));
    }
    CHECK(path_eq(cur, t.result));
    // The result really is a normal form.
    CHECK(redexes(t.result, opt.include_ext, env).empty());
  }
}

TEST_CASE("the recorded step is the leftmost-outermost redex") {
  const Environment& env = check_env();
  EngineOptions opt;
  for (int i = 0; i < 200; ++i) {
    PathPtr p = random_term(env, 4, full_weights(), 62000 + i);
    auto s = step(p, opt, env);
    auto r = first_redex(p, opt.include_ext, env);
    REQUIRE(s.has_value() == r.has_value());
    if (s) {
      CHECK(s->pos == r->first);
      CHECK(s->rule == r->second->name);
      CHECK(path_eq(s->before, p));
      CHECK(path_eq(s->after, contract_at(p, r->first, *r->second, env)));
    }
  }
}

TEST_CASE("normalization is deterministic") {
  const Environment& env = check_env();
  EngineOptions opt;
  PathPtr p = random_term(env, 6, full_weights(), 424242);
  Trace t1 = normalize(p, opt, env);
  Trace t2 = normalize(p, opt, env);
  REQUIRE(t1.steps.size() == t2.steps.size());
  for (std::size_t i = 0; i < t1.steps.size(); ++i) {
    CHECK(t1.steps[i].rule == t2.steps[i].rule);
    CHECK(t1.steps[i].pos == t2.steps[i].pos);
    CHECK(path_eq(t1.steps[i].after, t2.steps[i].after));
  }
}

TEST_CASE("the budget cuts off long normalizations with a partial trace") {
  Environment env = circle_env();
  PathPtr p = parse_path(
      "tau(tau(loop,sigma(loop)),tau(loop,sigma(loop)))", env);
  EngineOptions generous;
  Trace full = normalize(p, generous, env);
  REQUIRE(full.steps.size() > 1);

  EngineOptions tiny{1, false};
  try {
    normalize(p, tiny, env);
    FAIL("expected BudgetError");
  } catch (const BudgetError& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
    const Trace& partial = e.partial();
    CHECK_FALSE(partial.complete);
    CHECK(partial.steps.size() == 1);
    CHECK(path_eq(partial.steps[0].after, partial.result));
    CHECK(path_eq(partial.steps[0].after, full.steps[0].after));
  }
}

TEST_CASE("rw_equal is an equivalence relation connected by contraction") {
  const Environment& env = check_env();
  EngineOptions opt;
  for (int i = 0; i < 200; ++i) {
    PathPtr p = random_term(env, 5, GenWeights{}, 63000 + i);
    CHECK(rw_equal(p, p, opt, env));
    // Any one-step reduct stays rw-equal (soundness of contraction).
    auto rs = redexes(p, false, env);
    if (!rs.empty()) {
      auto& [pos, rule] = rs[i % rs.size()];
      PathPtr q = contract_at(p, pos, *rule, env);
      CHECK(rw_equal(p, q, opt, env));
      CHECK(rw_equal(q, p, opt, env));
    }
    // A doubled inversion is invisible.
    CHECK(rw_equal(p, sigma(sigma(p)), opt, env));
  }
}

TEST_CASE("rw_equal rejects proofs of different equations") {
  const Environment& env = check_env();
  EngineOptions opt;
  CHECK_THROWS_AS(rw_equal(parse_path("a", env), parse_path("b", env), opt, env),
                  Error);
  try {
    rw_equal(parse_path("a", env), parse_path("b", env), opt, env);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EndpointMismatch);
  }
  // Distinct proofs of the same equation compare as unequal, not as errors.
  CHECK_FALSE(rw_equal(parse_path("l", env), parse_path("rho(x)", env), opt, env));
}

TEST_CASE("one-step reducts of sampled terms rejoin") {
  const Environment& env = sampling_env();
  EngineOptions opt;
  int with_choice = 0;
  for (int i = 0; i < 500; ++i) {
    PathPtr p = random_term_sized(env, 10, GenWeights{}, 64000 + i);
    ConfluenceReport rep = check_local_confluence(p, opt, env);
    CAPTURE(print_path(p));
    CHECK(rep.confluent);
    CHECK(rep.normal_forms.size() <= 1);
    if (rep.redex_count > 1) ++with_choice;
  }
  // The sample must actually contain branching terms for this to mean much.
  CHECK(with_choice > 100);
}

TEST_CASE("traces render as text and json") {
  Environment env = circle_env();
  EngineOptions opt;
  Trace t = normalize(parse_path("tau(loop,sigma(loop))", env), opt, env);
  std::string text = trace_text(t);
  CHECK(text.find("initial: tau(loop,sigma(loop))") != std::string::npos);
  CHECK(text.find("tr") != std::string::npos);
  CHECK(text.find("normal form: rho(base)") != std::string::npos);

  auto j = nlohmann::json::parse(trace_json(t));
  CHECK(j["initial"] == "tau(loop,sigma(loop))");
  CHECK(j["result"] == "rho(base)");
  CHECK(j["complete"] == true);
  REQUIRE(j["steps"].size() == 1);
  CHECK(j["steps"][0]["rule"] == "tr");
  CHECK(j["steps"][0]["pos"].size() == 0);
}
