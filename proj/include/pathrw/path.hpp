// Path terms: proof terms for propositional equality between points. The
// constructors mirror the equality axioms — rho (reflexivity), sigma
// (symmetry), tau (transitivity), the application/abstraction congruences
// (mu, nu, xi and friends), pair paths, left/right substitution, functional
// extensionality, declared homotopies, and the unit-type eta path.
#pragma once

#include "pathrw/point.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pathrw {

enum class PathKind {
  Atom,     // declared generator with cached endpoints
  Rho,      // rho(x): reflexivity at a point
  Sigma,    // sigma(p): inverse
  Tau,      // tau(p,q): composition (p then q)
  MuF,      // mu[f](p): image of p under the function expression f
  Mu1,      // mu1(p): first-projection congruence
  Mu2,      // mu2(p): second-projection congruence
  MuE2,     // muE(p,q): two-argument eliminator congruence (loose)
  MuE3,     // muE(p,q,r): three-argument eliminator congruence (loose)
  Nu,       // nu(p): application congruence on the function side
  Xi,       // xi(p): abstraction congruence
  Xi1,      // xi1(p): left-injection congruence (loose)
  Xi2,      // xi2(p): right-injection congruence (loose)
  PairPath, // pair(p,q): componentwise path between pairs
  SubL,     // subL(main,pos,sub): substitute inside the target of main
  SubR,     // subR(sub,pos,main): substitute inside the source of main
  Ext,      // ext(p): functional extensionality
  Hom,      // H[name](x): a declared homotopy H : f ~ g at the point x
  Eta,      // eta(x): the unit-type path * = x
};

struct PathTerm;
using PathPtr = std::shared_ptr<const PathTerm>;

// A position is the list of path-children indices from the root, each child
// counted in constructor-argument order (positions never descend into points
// or function expressions).
using Position = std::vector<int>;

struct PathTerm {
  PathKind kind = PathKind::Rho;
  std::string name;   // Atom name; Hom family name
  PointPtr at, at2;   // Rho/Eta/Hom point = at; Atom caches source=at, target=at2
  FunPtr fun, fun2;   // MuF's f; Hom's f and g
  PointPos pos;       // SubL/SubR hole position (a *point* position)
  PathPtr a, b, c;    // path children in declaration order
};

PathPtr atom(std::string name, PointPtr source, PointPtr target);
PathPtr rho(PointPtr x);
PathPtr sigma(PathPtr p);
PathPtr tau(PathPtr p, PathPtr q);
PathPtr mu(FunPtr f, PathPtr p);
PathPtr mu1(PathPtr p);
PathPtr mu2(PathPtr p);
PathPtr muE(PathPtr p, PathPtr q);
PathPtr muE(PathPtr p, PathPtr q, PathPtr r);
PathPtr nu(PathPtr p);
PathPtr xi(PathPtr p);
PathPtr xi1(PathPtr p);
PathPtr xi2(PathPtr p);
PathPtr pairpath(PathPtr p, PathPtr q);
PathPtr subL(PathPtr main, PointPos pos, PathPtr sub);
PathPtr subR(PathPtr sub, PointPos pos, PathPtr main);
PathPtr ext(PathPtr p);
PathPtr hom(std::string family, FunPtr f, FunPtr g, PointPtr x);
PathPtr eta(PointPtr x);

bool path_eq(const PathPtr& p, const PathPtr& q);

// Canonical text in the concrete grammar; parse_path(print_path(p)) == p.
std::string print_path(const PathPtr& p);
std::string print_pos(const PointPos& pos);

// Number of path-term nodes (points and function expressions not counted).
int path_size(const PathPtr& p);

int child_count(const PathPtr& p);
PathPtr child(const PathPtr& p, int i);
// Null when the position does not exist.
PathPtr subterm(const PathPtr& p, const Position& pos);
PathPtr replace(const PathPtr& p, const Position& pos, const PathPtr& sub);

// All positions of p in preorder (root first, children left to right) — the
// leftmost-outermost visiting order.
std::vector<Position> all_positions(const PathPtr& p);

// Rebuilds p with every embedded point and function expression normalized;
// used before structural comparison of normal forms.
PathPtr normalize_points_in_path(const PathPtr& p);

} // namespace pathrw
