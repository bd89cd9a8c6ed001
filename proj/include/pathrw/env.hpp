// Environments declare the generators a path term may mention: named atoms
// with their endpoints, function symbols with their kind, homotopy families,
// and named points. Environments are loaded from a small line-oriented file
// format or built in for the standard spaces (circle, naturals, coproducts).
#pragma once

#include "pathrw/point.hpp"

#include <map>
#include <string>
#include <vector>

namespace pathrw {

struct AtomDecl {
  std::string name;
  PointPtr source, target;
};

enum class FunDeclKind { Opaque, Constructor, ProductMap };

struct FunDecl {
  std::string name;
  FunDeclKind kind = FunDeclKind::Opaque;
  // ProductMap components: the declared f acts as pairmap(left,right).
  std::string left, right;
};

struct HomDecl {
  std::string name;
  FunPtr f, g;
};

struct Environment {
  std::map<std::string, AtomDecl> atoms;
  std::map<std::string, FunDecl> funs;
  std::map<std::string, HomDecl> homs;
  std::vector<std::string> points; // declared point names, for generators

  bool has_atom(const std::string& n) const { return atoms.count(n) != 0; }
  bool has_fun(const std::string& n) const { return funs.count(n) != 0; }
  bool has_hom(const std::string& n) const { return homs.count(n) != 0; }
};

// The circle: one point `base`, one loop atom `loop : base = base`.
Environment circle_env();
// The naturals: the constructor `succ`; points are numerals.
Environment nat_env();
// A coproduct A+B: constructors `inl`, `inr`, points a/a2 (in A), b/b2 (in B),
// and atoms p : a = a2, q : b = b2 to generate from.
Environment coprod_env();
// The unit type: points u/v plus `*`; paths come from eta.
Environment unit_env();

// Parses the line-oriented environment format:
//   point base
//   atom loop : base = base
//   fun succ : constructor
//   fun f : opaque
//   fun p : pairmap(g,h)
//   hom H : f ~ g
// '#' starts a comment; blank lines are ignored.
Environment parse_env(const std::string& text);
Environment load_env_file(const std::string& path);

} // namespace pathrw
