// Endpoint computation and well-formedness checking.
//
// Every constructor in the strict fragment determines the two points its path
// connects:
//   rho(x) : x = x            sigma(p) : tgt(p) = src(p)
//   tau(p,q) : src(p) = tgt(q)            (requires tgt(p) == src(q))
//   mu[f](p) : f(src(p)) = f(tgt(p))
//   mu1/mu2(p) : fst/snd of p's endpoints
//   pair(p,q) : <src p,src q> = <tgt p,tgt q>
//   subL(r,pos,s) : src(r) = tgt(r)[pos <- tgt(s)]   (tgt(r)[pos] == src(s))
//   subR(r,pos,s) : src(s)[pos <- src(r)] = tgt(s)   (src(s)[pos] == tgt(r))
//   H[fam](x) : f(x) = g(x)   eta(x) : * = x
//   nu/xi/ext(p) : endpoints of p (the congruence is endpoint-transparent;
//                  the type change it performs is not tracked here)
// muE(..)/xi1/xi2 have no endpoint semantics and are admitted in loose mode
// only. All points are normalized before comparison or reporting.
#pragma once

#include "pathrw/env.hpp"
#include "pathrw/path.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pathrw {

using Endpoints = std::pair<PointPtr, PointPtr>; // (source, target)

// Throws Error{LooseTerm, EndpointMismatch, UnknownAtom, BadPosition}.
Endpoints endpoints(const PathPtr& p, const Environment& env);

PointPtr src(const PathPtr& p, const Environment& env);
PointPtr tgt(const PathPtr& p, const Environment& env);

enum class WfMode { Strict, Loose };

struct Diagnostic {
  Position where;
  std::string code; // stable machine-readable tag, e.g. "endpoint-mismatch"
  std::string message;
};

using Diagnostics = std::vector<Diagnostic>;

// Strict mode checks every endpoint side condition and rejects the loose
// constructors; loose mode checks only name resolution and substitution
// positions. An empty result means well-formed.
Diagnostics well_formed(const PathPtr& p, const Environment& env, WfMode mode);

} // namespace pathrw
