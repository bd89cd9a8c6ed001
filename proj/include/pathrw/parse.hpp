// Recursive-descent parsers for the concrete syntax of points, function
// expressions, and paths. Path parsing resolves atom and homotopy names
// against an environment; point parsing is environment-free.
//
//   path  := atom | rho(point) | sigma(path) | tau(path,path)
//          | mu[fexpr](path) | mu1(path) | mu2(path)
//          | muE(path,path) | muE(path,path,path)
//          | nu(path) | xi(path) | xi1(path) | xi2(path)
//          | pair(path,path) | subL(path,pos,path) | subR(path,pos,path)
//          | ext(path) | H[ident](point) | eta(point)
//   fexpr := ident | id | comp(fexpr,fexpr) | pairmap(fexpr,fexpr)
//   point := ident | nat | * | fexpr(point) | <point,point>
//          | fst(point) | snd(point)
//   pos   := [ nat {, nat} ] | []
#pragma once

#include "pathrw/env.hpp"
#include "pathrw/path.hpp"

namespace pathrw {

// All three throw Error{Parse} on malformed input and Error{UnknownAtom} when
// a path mentions an undeclared atom or homotopy family.
PointPtr parse_point(const std::string& text);
FunPtr parse_fun(const std::string& text);
PathPtr parse_path(const std::string& text, const Environment& env);

} // namespace pathrw
