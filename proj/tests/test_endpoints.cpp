#include "doctest.h"

#include "pathrw/checks.hpp"
#include "pathrw/endpoints.hpp"
#include "pathrw/error.hpp"
#include "pathrw/parse.hpp"
#include "pathrw/random_term.hpp"

using namespace pathrw;

namespace {

void expect_ends(const char* text, const char* s, const char* t) {
  const Environment& env = check_env();
  PathPtr p = parse_path(text, env);
  Endpoints e = endpoints(p, env);
  CAPTURE(text);
  CHECK(print_point(e.first) == s);
  CHECK(print_point(e.second) == t);
}

} // namespace

TEST_CASE("each constructor determines its endpoints") {
  expect_ends("a", "x", "y");
  expect_ends("rho(x)", "x", "x");
  expect_ends("rho(fst(<x,y>))", "x", "x"); // points are normalized
  expect_ends("sigma(a)", "y", "x");
  expect_ends("tau(a,b)", "x", "z");
  expect_ends("tau(tau(a,b),c)", "x", "w");
  expect_ends("mu[f](a)", "f(x)", "f(y)");
  expect_ends("mu[comp(g,f)](a)", "g(f(x))", "g(f(y))");
  expect_ends("mu1(e)", "x", "y");
  expect_ends("mu2(e)", "y", "z");
  expect_ends("pair(a,b)", "<x,y>", "<y,z>");
  expect_ends("nu(a)", "x", "y");
  expect_ends("xi(a)", "x", "y");
  expect_ends("ext(a)", "x", "y");
  expect_ends("H[H](x)", "f(x)", "g(x)");
  expect_ends("eta(y)", "*", "y");
  // subL(r,pos,s) rewrites tgt(r) at pos along s.
  expect_ends("subL(e,[0],b)", "<x,y>", "<z,z>");
  expect_ends("subL(a,[],b)", "x", "z"); // the hole is the whole target point
}

TEST_CASE("substitution endpoints respect the hole on either side") {
  const Environment& env = check_env();
  // subL: tgt(e) = <y,z>, hole [0] holds y = src(b); result <tgt(b),z>.
  Endpoints el = endpoints(parse_path("subL(e,[0],b)", env), env);
  CHECK(print_point(el.second) == "<z,z>");
  // subR(s,pos,r): src(r) gets the hole rewritten backwards along s.
  // src(e) = <x,y>, hole [1] holds y = tgt(a); result <x,src(a)>.
  Endpoints er = endpoints(parse_path("subR(a,[1],e)", env), env);
  CHECK(print_point(er.first) == "<x,x>");
  CHECK(print_point(er.second) == "<y,z>");
}

TEST_CASE("side conditions are enforced") {
  const Environment& env = check_env();
  // tau needs a shared midpoint.
  CHECK_THROWS_AS(endpoints(parse_path("tau(a,c)", env), env), Error);
  try {
    endpoints(parse_path("tau(a,c)", env), env);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EndpointMismatch);
  }
  // Substitution holes must address an actual subpoint...
  CHECK_THROWS_AS(endpoints(parse_path("subL(a,[0],b)", env), env), Error);
  // ...and its content must match the substituent's source.
  CHECK_THROWS_AS(endpoints(parse_path("subL(e,[1],a)", env), env), Error);
}

TEST_CASE("loose constructors have no endpoint semantics") {
  const Environment& env = check_env();
  for (const char* text : {"muE(a,b)", "muE(a,b,k)", "xi1(a)", "xi2(a)"}) {
    CAPTURE(text);
    try {
      endpoints(parse_path(text, env), env);
      FAIL("expected LooseTerm");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::LooseTerm);
    }
  }
}

TEST_CASE("src and tgt agree with endpoints") {
  const Environment& env = check_env();
  PathPtr p = parse_path("tau(sigma(b),tau(sigma(a),tau(a,b)))", env);
  Endpoints e = endpoints(p, env);
  CHECK(point_eq(src(p, env), e.first));
  CHECK(point_eq(tgt(p, env), e.second));
}

TEST_CASE("generated strict terms are well formed, loose shapes are flagged") {
  const Environment& env = check_env();
  for (int i = 0; i < 300; ++i) {
    PathPtr p = random_term(env, 5, full_weights(), 40000 + i);
    Diagnostics d = well_formed(p, env, WfMode::Strict);
    CAPTURE(print_path(p));
    CHECK(d.empty());
  }

  PathPtr loose = parse_path("tau(a,muE(b,k))", env);
  Diagnostics strict = well_formed(loose, env, WfMode::Strict);
  REQUIRE_FALSE(strict.empty());
  CHECK(strict.front().code == "loose-term");
  CHECK(strict.front().where == Position{1});
  // Loose mode admits the eliminator but still resolves names.
  CHECK(well_formed(loose, env, WfMode::Loose).empty());

  Environment empty = parse_env("point x\n");
  PathPtr foreign = parse_path("a", env); // `a` is not declared in `empty`
  Diagnostics unknown = well_formed(foreign, empty, WfMode::Loose);
  REQUIRE_FALSE(unknown.empty());
  CHECK(unknown.front().code == "unknown-atom");
}

TEST_CASE("endpoint mismatches report the offending position") {
  const Environment& env = check_env();
  PathPtr p = parse_path("sigma(tau(a,c))", env);
  Diagnostics d = well_formed(p, env, WfMode::Strict);
  REQUIRE_FALSE(d.empty());
  CHECK(d.front().code == "endpoint-mismatch");
  CHECK(d.front().where == Position{0});
}
