#include "doctest.h"

#include "pathrw/checks.hpp"
#include "pathrw/error.hpp"
#include "pathrw/parse.hpp"
#include "pathrw/random_term.hpp"

#include <string>
#include <vector>

using namespace pathrw;

TEST_CASE("every constructor form parses and reprints verbatim") {
  const Environment& env = check_env();
  std::vector<std::string> forms = {
      "a",
      "rho(x)",
      "rho(<x,y>)",
      "rho(*)",
      "rho(3)",
      "rho(f(x))",
      "rho(fst(<x,y>))",
      "rho(snd(z))",
      "sigma(a)",
      "tau(a,b)",
      "mu[f](a)",
      "mu[id](a)",
      "mu[comp(f,g)](a)",
      "mu[comp(comp(f,g),h)](a)",
      "mu[pairmap(f,g)](e)",
      "mu1(e)",
      "mu2(e)",
      "muE(a,b)",
      "muE(a,b,k)",
      "nu(a)",
      "xi(a)",
      "xi1(a)",
      "xi2(a)",
      "pair(a,b)",
      "subL(e,[0],b)",
      "subL(e,[1],a)",
      "subL(e4,[],a)",
      "subR(b,[0],e)",
      "ext(a)",
      "H[H](x)",
      "eta(x)",
      "eta(*)",
  };
  for (const auto& s : forms) {
    CAPTURE(s);
    PathPtr p = parse_path(s, env);
    CHECK(print_path(p) == s);
  }
}

TEST_CASE("printing and reparsing random terms is the identity") {
  const Environment& env = check_env();
  for (int i = 0; i < 400; ++i) {
    PathPtr p = random_term(env, 5, full_weights(), 7000 + i);
    PathPtr q = parse_path(print_path(p), env);
    CAPTURE(print_path(p));
    CHECK(path_eq(p, q));
  }
  for (int i = 0; i < 400; ++i) {
    PathPtr p = random_term(env, 6, GenWeights{}, 9000 + i);
    PathPtr q = parse_path(print_path(p), env);
    CHECK(path_eq(p, q));
  }
}

TEST_CASE("malformed inputs raise parse errors") {
  const Environment& env = check_env();
  std::vector<std::string> bad = {
      "",          "tau(a",      "tau(a,)",     "sigma()",   "rho",
      "mu[f]",     "mu[](a)",    "pair(a,b,c)", "subL(e,b)", "subL(e,[x],b)",
      "a b",       "tau(a,b))",  "mu[comp(f](a)", "H[H]",    "<x,y>",
  };
  for (const auto& s : bad) {
    CAPTURE(s);
    CHECK_THROWS_AS(parse_path(s, env), Error);
    try {
      parse_path(s, env);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Parse);
    }
  }
}

TEST_CASE("undeclared atoms and homotopies are rejected, functions are open") {
  const Environment& env = check_env();
  try {
    parse_path("tau(a,nosuch)", env);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownAtom);
  }
  CHECK_THROWS_AS(parse_path("H[nosuch](x)", env), Error);
  // Atoms and homotopy families carry endpoint data, so they must be
  // declared; a plain function name stands for an opaque map and needs no
  // declaration (declaring one only adds behavior, e.g. constructor folding).
  PathPtr open = parse_path("mu[undeclared](a)", env);
  CHECK(print_path(open) == "mu[undeclared](a)");
}

TEST_CASE("point and function expressions parse standalone") {
  CHECK(print_point(parse_point("<fst(p),snd(p)>")) == "<fst(p),snd(p)>");
  CHECK(print_point(parse_point("42")) == "42");
  CHECK(print_fun(parse_fun("comp(f,pairmap(g,id))")) ==
        "comp(f,pairmap(g,id))");
  CHECK_THROWS_AS(parse_point("<x"), Error);
  CHECK_THROWS_AS(parse_fun("comp(f)"), Error);
}

TEST_CASE("environment files declare atoms, functions, and homotopies") {
  Environment env = parse_env("# sample\n"
                              "point x\n"
                              "point y\n"
                              "atom a : x = y\n"
                              "atom w : <x,x> = f(y)\n"
                              "fun f : opaque\n"
                              "fun succ : constructor\n"
                              "fun pm : pairmap(f,f)\n"
                              "hom K : f ~ f\n");
  CHECK(env.has_atom("a"));
  CHECK(env.has_atom("w"));
  CHECK(env.has_fun("pm"));
  CHECK(env.funs.at("pm").kind == FunDeclKind::ProductMap);
  CHECK(env.funs.at("succ").kind == FunDeclKind::Constructor);
  CHECK(env.has_hom("K"));
  CHECK(env.points.size() == 2);
  CHECK(point_eq(env.atoms.at("a").source, pvar("x")));

  CHECK_THROWS_AS(parse_env("atom broken x = y\n"), Error);
  CHECK_THROWS_AS(parse_env("fun f : mystery\n"), Error);
  CHECK_THROWS_AS(parse_env("frob z\n"), Error);
}

TEST_CASE("substitution positions print as bracket lists") {
  CHECK(print_pos(PointPos{}) == "[]");
  CHECK(print_pos(PointPos{0}) == "[0]");
  CHECK(print_pos(PointPos{1, 0}) == "[1,0]");
}
