#include "pathrw/engine.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace pathrw {

std::optional<StepRecord> step(const PathPtr& p, const EngineOptions& opt,
                               const Environment& env) {
  auto red = first_redex(p, opt.include_ext, env);
  if (!red) return std::nullopt;
  PathPtr after = contract_at(p, red->first, *red->second, env);
  StepRecord rec;
  rec.pos = red->first;
  rec.rule = red->second->name;
  rec.before = p;
  rec.after = after;
  return rec;
}

PathPtr contract_at(const PathPtr& p, const Position& pos,
                    const RewriteRule& rule, const Environment& env) {
  PathPtr sub = subterm(p, pos);
  if (!sub)
    throw Error(ErrorKind::Internal,
                "contract_at: no subterm at " + print_pos(pos));
  auto m = match_at_root(rule, sub, env);
  if (!m)
    throw Error(ErrorKind::Internal, "contract_at: rule " + rule.name +
                                         " does not match " + print_path(sub));
  return replace(p, pos, apply(rule, *m, env));
}

Trace normalize(const PathPtr& p, const EngineOptions& opt,
                const Environment& env) {
  Trace t;
  t.initial = p;
  t.result = p;
  while (auto rec = step(t.result, opt, env)) {
    if (static_cast<int>(t.steps.size()) >= opt.budget) {
      t.complete = false;
      throw BudgetError("normalization exceeded its budget of " +
                            std::to_string(opt.budget) + " steps",
                        t);
    }
    t.result = rec->after;
    t.steps.push_back(std::move(*rec));
  }
  t.complete = true;
  return t;
}

bool rw_equal(const PathPtr& p, const PathPtr& q, const EngineOptions& opt,
              const Environment& env) {
  Endpoints ep = endpoints(p, env);
  Endpoints eq = endpoints(q, env);
  if (!point_eq(ep.first, eq.first) || !point_eq(ep.second, eq.second))
    throw Error(ErrorKind::EndpointMismatch,
                "rw_equal compares proofs of different equations: " +
                    print_point(ep.first) + " = " + print_point(ep.second) +
                    " versus " + print_point(eq.first) + " = " +
                    print_point(eq.second));
  PathPtr np = normalize_points_in_path(normalize(p, opt, env).result);
  PathPtr nq = normalize_points_in_path(normalize(q, opt, env).result);
  return path_eq(np, nq);
}

bool check_rho_collapse(const PathPtr& p, const EngineOptions& opt,
                        const Environment& env) {
  return normalize(p, opt, env).result->kind == PathKind::Rho;
}

ConfluenceReport check_local_confluence(const PathPtr& p,
                                        const EngineOptions& opt,
                                        const Environment& env) {
  ConfluenceReport report;
  auto reds = redexes(p, opt.include_ext, env);
  report.redex_count = static_cast<int>(reds.size());
  for (const auto& [pos, rule] : reds) {
    PathPtr contracted = contract_at(p, pos, *rule, env);
    PathPtr nf =
        normalize_points_in_path(normalize(contracted, opt, env).result);
    bool seen = std::any_of(report.normal_forms.begin(),
                            report.normal_forms.end(),
                            [&](const PathPtr& q) { return path_eq(nf, q); });
    if (!seen) report.normal_forms.push_back(nf);
  }
  report.confluent = report.normal_forms.size() <= 1;
  return report;
}

std::string trace_text(const Trace& t) {
  std::ostringstream out;
  out << "initial: " << print_path(t.initial) << "\n";
  for (size_t i = 0; i < t.steps.size(); ++i) {
    const StepRecord& s = t.steps[i];
    out << "  " << (i + 1) << ". " << s.rule << " at " << print_pos(s.pos)
        << " => " << print_path(s.after) << "\n";
  }
  out << (t.complete ? "normal form: " : "stopped (budget) at: ")
      << print_path(t.result) << "\n";
  return out.str();
}

std::string trace_json(const Trace& t) {
  nlohmann::json j;
  j["initial"] = print_path(t.initial);
  j["complete"] = t.complete;
  j["result"] = print_path(t.result);
  j["steps"] = nlohmann::json::array();
  for (const StepRecord& s : t.steps) {
    nlohmann::json js;
    js["pos"] = s.pos;
    js["rule"] = s.rule;
    js["before"] = print_path(s.before);
    js["after"] = print_path(s.after);
    j["steps"].push_back(std::move(js));
  }
  return j.dump(2);
}

} // namespace pathrw
