#include "doctest.h"

#include "pathrw/parse.hpp"
#include "pathrw/point.hpp"

using namespace pathrw;

TEST_CASE("point constructors print and compare structurally") {
  CHECK(print_point(pvar("x")) == "x");
  CHECK(print_point(pstar()) == "*");
  CHECK(print_point(pnat(7)) == "7");
  CHECK(print_point(ppair(pvar("x"), pnat(0))) == "<x,0>");
  CHECK(print_point(pfst(pvar("z"))) == "fst(z)");
  CHECK(print_point(psnd(ppair(pvar("a"), pvar("b")))) == "snd(<a,b>)");
  CHECK(print_point(papp(fnamed("f"), pvar("x"))) == "f(x)");

  CHECK(point_eq(pvar("x"), pvar("x")));
  CHECK_FALSE(point_eq(pvar("x"), pvar("y")));
  CHECK(point_eq(ppair(pvar("x"), pvar("y")), ppair(pvar("x"), pvar("y"))));
  CHECK_FALSE(point_eq(pnat(1), pnat(2)));
  CHECK_FALSE(point_eq(pstar(), pvar("star")));
}

TEST_CASE("projection redexes and surjective pairing normalize away") {
  CHECK(point_eq(normalize_point(pfst(ppair(pvar("x"), pvar("y")))), pvar("x")));
  CHECK(point_eq(normalize_point(psnd(ppair(pvar("x"), pvar("y")))), pvar("y")));
  // <fst(z),snd(z)> collapses to z.
  PointPtr eta = ppair(pfst(pvar("z")), psnd(pvar("z")));
  CHECK(point_eq(normalize_point(eta), pvar("z")));
  // ...but only when both components project the same point.
  PointPtr mixed = ppair(pfst(pvar("z")), psnd(pvar("w")));
  CHECK(print_point(normalize_point(mixed)) == "<fst(z),snd(w)>");
  // Normalization reaches inside applications.
  PointPtr inside = papp(fnamed("f"), pfst(ppair(pnat(1), pnat(2))));
  CHECK(print_point(normalize_point(inside)) == "f(1)");
}

TEST_CASE("function application computes for special function forms") {
  CHECK(point_eq(apply_fun(fnamed("succ"), pnat(3)), pnat(4)));
  CHECK(point_eq(normalize_point(papp(fnamed("succ"), pnat(3))), pnat(4)));
  // Opaque functions stay symbolic.
  CHECK(print_point(apply_fun(fnamed("f"), pvar("x"))) == "f(x)");
  // Identity and composition compute.
  CHECK(point_eq(apply_fun(fid(), pvar("x")), pvar("x")));
  CHECK(print_point(apply_fun(fcomp(fnamed("g"), fnamed("f")), pvar("x"))) ==
        "g(f(x))");
  // A pair map acts componentwise on a literal pair.
  PointPtr v = apply_fun(fpairmap(fnamed("f"), fnamed("g")),
                         ppair(pvar("x"), pvar("y")));
  CHECK(print_point(v) == "<f(x),g(y)>");
}

TEST_CASE("function normalization strips identities and right-associates") {
  CHECK(fun_eq(normalize_fun(fcomp(fnamed("f"), fid())), fnamed("f")));
  CHECK(fun_eq(normalize_fun(fcomp(fid(), fnamed("f"))), fnamed("f")));
  CHECK(fun_eq(normalize_fun(fcomp(fid(), fid())), fid()));
  CHECK(print_fun(normalize_fun(
            fcomp(fcomp(fnamed("f"), fnamed("g")), fnamed("h")))) ==
        "comp(f,comp(g,h))");
  // Both bracketings of a three-fold composite normalize identically.
  CHECK(fun_eq(normalize_fun(fcomp(fcomp(fnamed("f"), fnamed("g")), fnamed("h"))),
               normalize_fun(fcomp(fnamed("f"), fcomp(fnamed("g"), fnamed("h"))))));
  // Pair maps normalize componentwise.
  CHECK(print_fun(normalize_fun(fpairmap(fcomp(fid(), fnamed("f")), fid()))) ==
        "pairmap(f,id)");
  // fun_eq is literal; normalization is what makes comp(f,id) equal f.
  CHECK_FALSE(fun_eq(fcomp(fnamed("f"), fid()), fnamed("f")));
}

TEST_CASE("point positions address pair components") {
  PointPtr p = ppair(ppair(pvar("a"), pvar("b")), pvar("c"));
  PointPos left0{0, 0};
  CHECK(point_eq(point_subterm(p, left0), pvar("a")));
  PointPtr q = point_replace(p, left0, pnat(9));
  CHECK(print_point(q) == "<<9,b>,c>");
  // The original is untouched (terms are shared immutable values).
  CHECK(print_point(p) == "<<a,b>,c>");
}
