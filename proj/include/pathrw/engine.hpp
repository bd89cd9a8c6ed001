// The rewrite engine: deterministic leftmost-outermost normalization with a
// step budget and a full trace, rw-equality (same normal form), and the
// sampling-oriented checks (reflexivity collapse, one-step local confluence).
#pragma once

#include "pathrw/error.hpp"
#include "pathrw/rules.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pathrw {

struct EngineOptions {
  int budget = 10000;      // maximum number of contractions per normalization
  bool include_ext = false; // enable the extensionality rule group
};

// One contraction, recorded with the whole term on both sides so a trace can
// be replayed and checked independently of the engine.
struct StepRecord {
  Position pos;
  std::string rule;
  PathPtr before, after;
};

struct Trace {
  PathPtr initial;
  std::vector<StepRecord> steps;
  PathPtr result;       // the last term reached
  bool complete = true; // false when the budget ran out before a normal form
};

// Thrown when normalization exceeds its budget; carries the partial trace.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& msg, Trace partial)
      : Error(ErrorKind::BudgetExceeded, msg), partial_(std::move(partial)) {}
  const Trace& partial() const { return partial_; }

 private:
  Trace partial_;
};

// The first leftmost-outermost contraction, or nullopt at a normal form.
std::optional<StepRecord> step(const PathPtr& p, const EngineOptions& opt,
                               const Environment& env);

// Contracts the redex of `rule` at `pos` (which must match there).
PathPtr contract_at(const PathPtr& p, const Position& pos,
                    const RewriteRule& rule, const Environment& env);

// Normalizes to a rule-free term, throwing BudgetError past opt.budget.
Trace normalize(const PathPtr& p, const EngineOptions& opt,
                const Environment& env);

// Two paths are rw-equal when their normal forms coincide structurally (with
// embedded points normalized). Requires both sides to prove the same
// equation; differing endpoints throw Error{EndpointMismatch}.
bool rw_equal(const PathPtr& p, const PathPtr& q, const EngineOptions& opt,
              const Environment& env);

// Does p normalize to a reflexivity?
bool check_rho_collapse(const PathPtr& p, const EngineOptions& opt,
                        const Environment& env);

struct ConfluenceReport {
  bool confluent = true;
  int redex_count = 0;
  // Distinct normal forms reached by contracting each one-step redex and then
  // normalizing; a singleton (or empty, for a normal form) set is confluent.
  std::vector<PathPtr> normal_forms;
};

ConfluenceReport check_local_confluence(const PathPtr& p,
                                        const EngineOptions& opt,
                                        const Environment& env);

// Human-readable and machine-readable renderings of a trace.
std::string trace_text(const Trace& t);
std::string trace_json(const Trace& t);

} // namespace pathrw
