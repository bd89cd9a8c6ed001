// Point terms and function expressions: the object-level language that paths
// connect. Points are first-order terms (variables, applications, pairs,
// projections, the unit star, and natural-number literals); function
// expressions are names, the identity, compositions, and product maps.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace pathrw {

struct PointTerm;
struct FunExpr;
using PointPtr = std::shared_ptr<const PointTerm>;
using FunPtr = std::shared_ptr<const FunExpr>;

enum class FunKind { Named, Identity, Compose, PairMap };

struct FunExpr {
  FunKind kind = FunKind::Named;
  std::string name;  // Named
  FunPtr a, b;       // Compose(a,b) = a after b; PairMap(a,b)
};

enum class PointKind { Var, App, Pair, Fst, Snd, Star, Nat };

struct PointTerm {
  PointKind kind = PointKind::Var;
  std::string name;      // Var
  FunPtr fun;            // App
  PointPtr a, b;         // App arg = a; Pair(a,b); Fst(a); Snd(a)
  std::uint64_t nat = 0; // Nat
};

// Constructors.
FunPtr fnamed(std::string name);
FunPtr fid();
FunPtr fcomp(FunPtr f, FunPtr g);
FunPtr fpairmap(FunPtr f, FunPtr g);

PointPtr pvar(std::string name);
PointPtr papp(FunPtr f, PointPtr x);
PointPtr ppair(PointPtr a, PointPtr b);
PointPtr pfst(PointPtr a);
PointPtr psnd(PointPtr a);
PointPtr pstar();
PointPtr pnat(std::uint64_t n);

// Structural equality (no normalization).
bool fun_eq(const FunPtr& f, const FunPtr& g);
bool point_eq(const PointPtr& a, const PointPtr& b);

// Canonical text, matching the concrete grammar accepted by the parser.
std::string print_fun(const FunPtr& f);
std::string print_point(const PointPtr& p);

// Identity is a two-sided unit for composition, and composition spines are
// right-associated (associativity makes the bracketing canonical).
FunPtr normalize_fun(const FunPtr& f);

// Evaluates the definable redexes inside a point: fst/snd of a literal pair,
// the surjective-pairing eta rule <fst(x),snd(x)> -> x, identity and
// composition unfolding, product maps applied to literal pairs, and succ
// applied to a numeral. The result is the canonical form used whenever
// endpoints are compared.
PointPtr normalize_point(const PointPtr& p);

// Applies a function expression to a point and normalizes.
PointPtr apply_fun(const FunPtr& f, const PointPtr& x);

// Point-term positions address constructor arguments: App's argument is child
// 0, Pair has children 0 and 1, Fst/Snd have child 0. Returns null when the
// position does not exist.
using PointPos = std::vector<int>;
PointPtr point_subterm(const PointPtr& p, const PointPos& pos);
// Returns null when the position does not exist.
PointPtr point_replace(const PointPtr& p, const PointPos& pos, const PointPtr& sub);

} // namespace pathrw
