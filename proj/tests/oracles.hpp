// Independent oracles the tests compare engine results against. These are
// deliberately defined on the raw syntax, without consulting the rewrite
// rules, so agreement with the engine is evidence rather than tautology.
#pragma once

#include "pathrw/path.hpp"

#include <stdexcept>

namespace pathrw::oracle {

// Exponent sum of a circle word: the group-theoretic image of a loop under
// the abelianization loop -> 1. Defined for the sigma/tau closure of the
// loop atom and reflexivities; anything else is out of the word's alphabet.
inline long long phi(const PathPtr& p) {
  if (!p) throw std::runtime_error("phi: null term");
  switch (p->kind) {
    case PathKind::Atom:
      if (p->name == "loop") return 1;
      throw std::runtime_error("phi: foreign atom " + p->name);
    case PathKind::Rho:
      return 0;
    case PathKind::Sigma:
      return -phi(p->a);
    case PathKind::Tau:
      return phi(p->a) + phi(p->b);
    default:
      throw std::runtime_error("phi: not a circle word");
  }
}

} // namespace pathrw::oracle
