#include "doctest.h"

#include "oracles.hpp"
#include "pathrw/endpoints.hpp"
#include "pathrw/parse.hpp"
#include "pathrw/spaces.hpp"

using namespace pathrw;

TEST_CASE("winding numbers of written-out words") {
  Environment env = circle_env();
  EngineOptions opt;
  auto w = [&](const char* s) {
    return winding(parse_path(s, env), opt, env);
  };
  CHECK(w("rho(base)") == 0);
  CHECK(w("loop") == 1);
  CHECK(w("sigma(loop)") == -1);
  CHECK(w("tau(loop,tau(loop,loop))") == 3);
  CHECK(w("tau(tau(loop,loop),loop)") == 3);
  CHECK(w("tau(loop,sigma(loop))") == 0);
  CHECK(w("tau(sigma(loop),tau(loop,loop))") == 1);
  CHECK(w("sigma(tau(loop,loop))") == -2);
  CHECK(w("mu[id](loop)") == 1);
}

TEST_CASE("loop powers have the advertised shape and winding") {
  Environment env = circle_env();
  EngineOptions opt;
  // The power is built by the recursion tau(letter, rest), grounded in the
  // constant path, so every power carries a trailing rho(base).
  CHECK(print_path(loop_power(0, env)) == "rho(base)");
  CHECK(print_path(loop_power(1, env)) == "tau(loop,rho(base))");
  CHECK(print_path(loop_power(2, env)) == "tau(loop,tau(loop,rho(base)))");
  CHECK(print_path(loop_power(-1, env)) == "tau(sigma(loop),rho(base))");
  CHECK(print_path(loop_power(-2, env)) ==
        "tau(sigma(loop),tau(sigma(loop),rho(base)))");
  for (long long n = -12; n <= 12; ++n) {
    CHECK(winding(loop_power(n, env), opt, env) == n);
    CHECK(oracle::phi(loop_power(n, env)) == n);
  }
}

TEST_CASE("winding agrees with the exponent-sum oracle on random words") {
  Environment env = circle_env();
  EngineOptions opt;
  for (int i = 0; i < 1000; ++i) {
    PathPtr p = random_circle_path(env, 2 + i % 12, 71000 + i);
    CAPTURE(print_path(p));
    CHECK(winding(p, opt, env) == oracle::phi(p));
  }
}

TEST_CASE("winding is a group homomorphism") {
  Environment env = circle_env();
  EngineOptions opt;
  for (int i = 0; i < 300; ++i) {
    PathPtr p = random_circle_path(env, 2 + i % 10, 72000 + i);
    PathPtr q = random_circle_path(env, 2 + (i / 3) % 10, 73000 + i);
    long long wp = winding(p, opt, env), wq = winding(q, opt, env);
    CHECK(winding(circle_compose(p, q, env), opt, env) == wp + wq);
    CHECK(winding(sigma(p), opt, env) == -wp);
  }
}

TEST_CASE("winding rejects non-circle paths") {
  Environment env = parse_env("point base\n"
                              "atom loop : base = base\n"
                              "atom rogue : base = base\n");
  EngineOptions opt;
  CHECK(winding(parse_path("loop", env), opt, env) == 1);
  CHECK_THROWS_AS(winding(parse_path("rogue", env), opt, env), Error);
  CHECK_THROWS_AS(
      winding(parse_path("tau(loop,rogue)", env), opt, env), Error);
}

TEST_CASE("the naturals code family distinguishes equal from unequal") {
  CHECK(print_code(nat_code(0, 0)) == "Unit");
  CHECK(print_code(nat_code(3, 3)) == "Recur(Recur(Recur(Unit)))");
  CHECK(print_code(nat_code(2, 5)) == "Recur(Recur(Empty))");
  CHECK(print_code(nat_code(4, 0)) == "Empty");
  CHECK(code_eq(nat_code(7, 7), nat_code(7, 7)));
  CHECK_FALSE(code_eq(nat_code(7, 7), nat_code(7, 8)));
  // r(n) flattens through the tower to the unit value.
  for (long long n = 0; n <= 10; ++n) {
    CHECK(nat_r(n).base == CodeValue::Base::Unit);
    CHECK(nat_r(n).recur == 0);
  }
}

TEST_CASE("decode produces the canonical numeral path") {
  Environment env = nat_env();
  EngineOptions opt;
  for (long long n = 0; n <= 12; ++n) {
    PathPtr p = nat_decode(n, n, nat_code(n, n));
    Endpoints e = endpoints(p, env);
    CHECK(point_eq(e.first, pnat(n)));
    CHECK(point_eq(e.second, pnat(n)));
    CHECK(print_path(normalize(p, opt, env).result) ==
          "rho(" + std::to_string(n) + ")");
  }
  CHECK_THROWS_AS(nat_decode(2, 3, nat_code(2, 3)), Error);
  try {
    nat_decode(2, 3, nat_code(2, 3));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyCode);
  }
}

TEST_CASE("encode inverts decode") {
  Environment env = nat_env();
  EngineOptions opt;
  for (long long m = 0; m <= 12; ++m) {
    PathPtr p = nat_decode(m, m, nat_code(m, m));
    CHECK(code_eq(nat_encode(m, m, p, opt, env), nat_code(m, m)));
  }
  // Any proof of m = m encodes to the same code, not just the canonical one.
  PathPtr fancy = tau(nat_decode(4, 4, nat_code(4, 4)),
                      sigma(nat_decode(4, 4, nat_code(4, 4))));
  CHECK(code_eq(nat_encode(4, 4, fancy, opt, env), nat_code(4, 4)));
  // Endpoint mismatches are rejected.
  CHECK_THROWS_AS(
      nat_encode(3, 4, nat_decode(3, 3, nat_code(3, 3)), opt, env), Error);
}

TEST_CASE("equality of naturals is decided with evidence") {
  for (long long m = 0; m <= 15; ++m)
    for (long long n = 0; n <= 15; ++n) {
      NatDecision d = nat_dec_eq(m, n);
      if (m == n) {
        REQUIRE(d.path.has_value());
        CHECK(d.refutation.empty());
      } else {
        CHECK_FALSE(d.path.has_value());
        CHECK_FALSE(d.refutation.empty());
      }
    }
}

TEST_CASE("coproduct paths classify by constructor") {
  Environment env = coprod_env();
  EngineOptions opt;
  CoprodClass left = coprod_classify(parse_path("mu[inl](p)", env), opt, env);
  CHECK(left.tag == CoprodClass::Tag::Left);
  CHECK(print_path(left.inner) == "p");

  // The congruence wrapper is recovered even from a composite proof.
  CoprodClass flipped =
      coprod_classify(parse_path("sigma(mu[inl](p))", env), opt, env);
  CHECK(flipped.tag == CoprodClass::Tag::Left);
  CHECK(print_path(flipped.inner) == "sigma(p)");

  CoprodClass right = coprod_classify(parse_path("mu[inr](q)", env), opt, env);
  CHECK(right.tag == CoprodClass::Tag::Right);
  CHECK(print_path(right.inner) == "q");

  CoprodClass refl =
      coprod_classify(parse_path("rho(inl(a))", env), opt, env);
  CHECK(refl.tag == CoprodClass::Tag::Left);

  // A path between distinct constructors cannot be realized.
  Environment cross = parse_env("fun inl : constructor\n"
                                "fun inr : constructor\n"
                                "point a\npoint b\n"
                                "atom evil : inl(a) = inr(b)\n");
  CHECK(coprod_classify(parse_path("evil", cross), opt, cross).tag ==
        CoprodClass::Tag::Impossible);

  // Paths not between constructor applications are rejected.
  CHECK_THROWS_AS(coprod_classify(parse_path("rho(a)", env), opt, env), Error);
}

TEST_CASE("the unit type is path-connected") {
  Environment env = unit_env();
  EngineOptions opt;
  PathPtr p = unit_connect(pvar("u"), pvar("v"));
  Endpoints e = endpoints(p, env);
  CHECK(print_point(e.first) == "u");
  CHECK(print_point(e.second) == "v");
  // Connecting a point to itself collapses to reflexivity.
  CHECK(print_path(normalize(unit_connect(pvar("u"), pvar("u")), opt, env)
                       .result) == "rho(u)");
}

TEST_CASE("loop collapse separates the naturals from the circle") {
  EngineOptions opt;
  Environment nat = nat_env();
  KReport kn = axiom_k_sample(KSpace::Nat, pnat(3), 100, 5, opt, nat);
  CHECK(kn.total == 100);
  CHECK(kn.collapsed == 100);
  CHECK(kn.witness == nullptr);

  Environment circ = circle_env();
  KReport kc = axiom_k_sample(KSpace::Circle, pvar("base"), 100, 5, opt, circ);
  CHECK(kc.total == 100);
  CHECK(kc.collapsed < kc.total);
  REQUIRE(kc.witness != nullptr);
  // The witness is a genuine non-reflexivity normal form.
  CHECK(kc.witness->kind != PathKind::Rho);
  CHECK(redexes(kc.witness, false, circ).empty());

  std::string report = print_k_report(kc);
  CHECK(report.find("100") != std::string::npos);
}
