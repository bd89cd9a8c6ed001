// The rewrite-rule catalog: 47 core rules (the 39 classic inverse/composition/
// congruence/substitution rules plus 8 functorial and homotopy rules) and 3
// extensionality rules behind a flag. The catalog is the single source of
// truth for matching; ids fix the tie-break order at equal positions.
//
// Several rules are context schemes, e.g. tau(C[r],C[sigma(r)]) |> C[rho].
// The context C is a single hole reached through unary constructors only
// (sigma, mu[f], mu1, mu2, nu, xi, xi1, xi2, ext): along such a spine the
// wrapped composite C[r].C[sigma(r)] really is C[rho] (the congruences are
// groupoid homomorphisms and sigma an anti-homomorphism), whereas a context
// with a tau/pair/sub sibling would duplicate that sibling and prove
// identifications that are false in the path groupoid (it would collapse
// every loop). The hole position is resolved leftmost-outermost.
#pragma once

#include "pathrw/endpoints.hpp"
#include "pathrw/env.hpp"
#include "pathrw/path.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pathrw {

struct MatchBinding {
  std::string rule;
  PathPtr redex;                          // the whole matched subterm
  std::map<std::string, PathPtr> captures; // metavariable -> subterm
  std::optional<Position> context;        // hole position for context rules
  PathPtr replacement;                    // fully instantiated right-hand side
};

struct RewriteRule {
  int id = 0;
  std::string name;
  std::string group;    // "core" or "ext"
  std::string lhs, rhs; // schematic display text
  std::string citation; // rule-table reference, with notes where behavior differs
  std::function<std::optional<MatchBinding>(const PathPtr&, const Environment&)>
      match;
};

// Rules in id order; the extensionality group (extl, extr, exp) is appended
// when include_ext is set. The returned vector is a shared immutable table.
const std::vector<RewriteRule>& catalog(bool include_ext);

const RewriteRule* find_rule(const std::string& name);

std::optional<MatchBinding> match_at_root(const RewriteRule& rule, const PathPtr& p,
                                          const Environment& env);

// Returns the instantiated right-hand side after verifying that the rewrite
// preserved endpoints whenever the redex has computable endpoints. A failed
// check means the catalog itself is broken and throws Error{IllFormedResult}.
PathPtr apply(const RewriteRule& rule, const MatchBinding& binding,
              const Environment& env);

// Every (position, rule) pair whose subterm matches, preorder positions first
// (leftmost-outermost), catalog id breaking ties at the same position.
std::vector<std::pair<Position, const RewriteRule*>>
redexes(const PathPtr& p, bool include_ext, const Environment& env);

// First redex in the leftmost-outermost order, if any.
std::optional<std::pair<Position, const RewriteRule*>>
first_redex(const PathPtr& p, bool include_ext, const Environment& env);

} // namespace pathrw
