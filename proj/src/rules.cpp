#include "pathrw/rules.hpp"

#include "pathrw/error.hpp"

#include <utility>

namespace pathrw {

namespace {

using Match = std::optional<MatchBinding>;
using Caps = std::initializer_list<std::pair<const char*, PathPtr>>;

// Heads agree: same constructor and same non-child attributes (atom name and
// cached endpoints, reflexivity point, function expressions, hole position).
bool same_head(const PathPtr& a, const PathPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case PathKind::Atom:
      return a->name == b->name && point_eq(a->at, b->at) &&
             point_eq(a->at2, b->at2);
    case PathKind::Rho:
    case PathKind::Eta:
      return point_eq(a->at, b->at);
    case PathKind::Hom:
      return a->name == b->name && fun_eq(a->fun, b->fun) &&
             fun_eq(a->fun2, b->fun2) && point_eq(a->at, b->at);
    case PathKind::MuF:
      return fun_eq(a->fun, b->fun);
    case PathKind::SubL:
    case PathKind::SubR:
      return a->pos == b->pos;
    default:
      return true;
  }
}

bool unary(const PathPtr& p) { return child_count(p) == 1; }

// b == a with the subterm at the returned position wrapped in one sigma; the
// hole is reached through unary constructors only, outermost match first.
// Returns the position and the unwrapped subterm a|pos.
std::optional<std::pair<Position, PathPtr>> sigma_edit(const PathPtr& a,
                                                       const PathPtr& b) {
  if (b->kind == PathKind::Sigma && path_eq(b->a, a))
    return std::make_pair(Position{}, a);
  if (!same_head(a, b) || !unary(a) || !unary(b)) return std::nullopt;
  if (auto inner = sigma_edit(a->a, b->a)) {
    inner->first.insert(inner->first.begin(), 0);
    return inner;
  }
  return std::nullopt;
}

// a|pos == sigma(x) and b == a with that sigma dropped; unary spine only,
// outermost match first. Returns the position and the unwrapped x == b|pos.
std::optional<std::pair<Position, PathPtr>> sigma_drop(const PathPtr& a,
                                                       const PathPtr& b) {
  if (a->kind == PathKind::Sigma && path_eq(a->a, b))
    return std::make_pair(Position{}, b);
  if (!same_head(a, b) || !unary(a) || !unary(b)) return std::nullopt;
  if (auto inner = sigma_drop(a->a, b->a)) {
    inner->first.insert(inner->first.begin(), 0);
    return inner;
  }
  return std::nullopt;
}

// b == a with the subterm at the returned position replaced by a reflexivity;
// unary spine only, outermost match first.
std::optional<Position> rho_edit(const PathPtr& a, const PathPtr& b) {
  if (b->kind == PathKind::Rho) return Position{};
  if (!same_head(a, b) || !unary(a) || !unary(b)) return std::nullopt;
  if (auto inner = rho_edit(a->a, b->a)) {
    inner->insert(inner->begin(), 0);
    return inner;
  }
  return std::nullopt;
}

// Number of sigma nodes strictly above pos. An even count means the context
// preserves orientation, odd means it flips source and target; the identity
// contractum of the cancellation rules sits at the corresponding endpoint.
int sigma_count_above(const PathPtr& p, const Position& pos) {
  int n = 0;
  PathPtr cur = p;
  for (int step : pos) {
    if (cur->kind == PathKind::Sigma) ++n;
    cur = child(cur, step);
  }
  return n;
}

std::optional<Endpoints> try_endpoints(const PathPtr& p, const Environment& env) {
  try {
    return endpoints(p, env);
  } catch (const Error&) {
    return std::nullopt;
  }
}

Match hit(const PathPtr& redex, PathPtr repl, Caps caps = {},
          std::optional<Position> ctx = std::nullopt) {
  MatchBinding m;
  m.redex = redex;
  m.replacement = std::move(repl);
  for (const auto& kv : caps) m.captures.emplace(kv.first, kv.second);
  m.context = std::move(ctx);
  return m;
}

using MatchFn = std::function<Match(const PathPtr&, const Environment&)>;

RewriteRule make(int id, const char* name, const char* group, const char* lhs,
                 const char* rhs, const char* citation, MatchFn fn) {
  RewriteRule r;
  r.id = id;
  r.name = name;
  r.group = group;
  r.lhs = lhs;
  r.rhs = rhs;
  r.citation = citation;
  r.match = [fn = std::move(fn), nm = r.name](const PathPtr& p,
                                              const Environment& env) -> Match {
    Match m = fn(p, env);
    if (m) m->rule = nm;
    return m;
  };
  return r;
}

bool is(const PathPtr& p, PathKind k) { return p->kind == k; }

std::vector<RewriteRule> build_core() {
  using K = PathKind;
  std::vector<RewriteRule> v;

  v.push_back(make(1, "sr", "core", "sigma(rho(x))", "rho(x)", "LND-EQ-TRS 1",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::Sigma) && is(p->a, K::Rho))
                       return hit(p, p->a);
                     return std::nullopt;
                   }));

  v.push_back(make(2, "ss", "core", "sigma(sigma(r))", "r", "LND-EQ-TRS 2",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::Sigma) && is(p->a, K::Sigma))
                       return hit(p, p->a->a, {{"r", p->a->a}});
                     return std::nullopt;
                   }));

  v.push_back(make(
      3, "tr", "core", "tau(C[r],C[sigma(r)])", "C[rho]", "LND-EQ-TRS 3",
      [](const PathPtr& p, const Environment& env) -> Match {
        if (!is(p, K::Tau)) return std::nullopt;
        auto se = sigma_edit(p->a, p->b);
        if (!se) return std::nullopt;
        auto ep = try_endpoints(se->second, env);
        if (!ep) return std::nullopt;
        bool even = sigma_count_above(p->a, se->first) % 2 == 0;
        PointPtr pt = even ? ep->first : ep->second;
        return hit(p, replace(p->a, se->first, rho(pt)), {{"r", se->second}},
                   se->first);
      }));

  v.push_back(make(
      4, "tsr", "core", "tau(C[sigma(r)],C[r])", "C[rho]", "LND-EQ-TRS 4",
      [](const PathPtr& p, const Environment& env) -> Match {
        if (!is(p, K::Tau)) return std::nullopt;
        auto sd = sigma_drop(p->a, p->b);
        if (!sd) return std::nullopt;
        auto ep = try_endpoints(sd->second, env);
        if (!ep) return std::nullopt;
        bool even = sigma_count_above(p->b, sd->first) % 2 == 0;
        PointPtr pt = even ? ep->second : ep->first;
        return hit(p, replace(p->b, sd->first, rho(pt)), {{"r", sd->second}},
                   sd->first);
      }));

  v.push_back(make(5, "trr", "core", "tau(C[r],C[rho])", "C[r]", "LND-EQ-TRS 5",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (!is(p, K::Tau)) return std::nullopt;
                     auto re = rho_edit(p->a, p->b);
                     if (!re) return std::nullopt;
                     return hit(p, p->a, {{"r", subterm(p->a, *re)}}, *re);
                   }));

  v.push_back(make(6, "tlr", "core", "tau(C[rho],C[r])", "C[r]", "LND-EQ-TRS 6",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (!is(p, K::Tau)) return std::nullopt;
                     auto re = rho_edit(p->b, p->a);
                     if (!re) return std::nullopt;
                     return hit(p, p->b, {{"r", subterm(p->b, *re)}}, *re);
                   }));

  v.push_back(make(7, "slr", "core", "subL(C[r],pos,C[rho])", "C[r]",
                   "LND-EQ-TRS 7",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (!is(p, K::SubL)) return std::nullopt;
                     auto re = rho_edit(p->a, p->b);
                     if (!re) return std::nullopt;
                     return hit(p, p->a, {{"r", subterm(p->a, *re)}}, *re);
                   }));

  v.push_back(make(8, "srr", "core", "subR(C[rho],pos,C[r])", "C[r]",
                   "LND-EQ-TRS 8",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (!is(p, K::SubR)) return std::nullopt;
                     auto re = rho_edit(p->b, p->a);
                     if (!re) return std::nullopt;
                     return hit(p, p->b, {{"r", subterm(p->b, *re)}}, *re);
                   }));

  v.push_back(make(
      9, "sls", "core", "subL(subL(s,pos,C[r]),pos,C[sigma(r)])", "s",
      "LND-EQ-TRS 9",
      [](const PathPtr& p, const Environment&) -> Match {
        if (!is(p, K::SubL) || !is(p->a, K::SubL) || p->pos != p->a->pos)
          return std::nullopt;
        auto se = sigma_edit(p->a->b, p->b);
        if (!se) return std::nullopt;
        return hit(p, p->a->a, {{"s", p->a->a}, {"r", se->second}}, se->first);
      }));

  v.push_back(make(
      10, "slss", "core", "subL(subL(s,pos,C[sigma(r)]),pos,C[r])", "s",
      "LND-EQ-TRS 10",
      [](const PathPtr& p, const Environment&) -> Match {
        if (!is(p, K::SubL) || !is(p->a, K::SubL) || p->pos != p->a->pos)
          return std::nullopt;
        auto sd = sigma_drop(p->a->b, p->b);
        if (!sd) return std::nullopt;
        return hit(p, p->a->a, {{"s", p->a->a}, {"r", sd->second}}, sd->first);
      }));

  v.push_back(make(
      11, "srs", "core", "subR(C[s],pos,subR(C[sigma(s)],pos,r))", "r",
      "LND-EQ-TRS 11",
      [](const PathPtr& p, const Environment&) -> Match {
        if (!is(p, K::SubR) || !is(p->b, K::SubR) || p->pos != p->b->pos)
          return std::nullopt;
        auto se = sigma_edit(p->a, p->b->a);
        if (!se) return std::nullopt;
        return hit(p, p->b->b, {{"r", p->b->b}, {"s", se->second}}, se->first);
      }));

  v.push_back(make(
      12, "srrr", "core", "subR(C[sigma(s)],pos,subR(C[s],pos,r))", "r",
      "LND-EQ-TRS 12",
      [](const PathPtr& p, const Environment&) -> Match {
        if (!is(p, K::SubR) || !is(p->b, K::SubR) || p->pos != p->b->pos)
          return std::nullopt;
        auto sd = sigma_drop(p->a, p->b->a);
        if (!sd) return std::nullopt;
        return hit(p, p->b->b, {{"r", p->b->b}, {"s", sd->second}}, sd->first);
      }));

  v.push_back(make(13, "mx2l1", "core", "mu1(xi1(r))", "r", "LND-EQ-TRS 13",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::Mu1) && is(p->a, K::Xi1))
                       return hit(p, p->a->a, {{"r", p->a->a}});
                     return std::nullopt;
                   }));

  v.push_back(make(14, "mx2l2", "core", "mu1(pair(r,s))", "r", "LND-EQ-TRS 14",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::Mu1) && is(p->a, K::PairPath))
                       return hit(p, p->a->a,
                                  {{"r", p->a->a}, {"s", p->a->b}});
                     return std::nullopt;
                   }));

  v.push_back(make(15, "mx2r1", "core", "mu2(pair(r,s))", "s", "LND-EQ-TRS 15",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::Mu2) && is(p->a, K::PairPath))
                       return hit(p, p->a->b,
                                  {{"r", p->a->a}, {"s", p->a->b}});
                     return std::nullopt;
                   }));

  v.push_back(make(16, "mx2r2", "core", "mu2(xi2(s))", "s", "LND-EQ-TRS 16",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::Mu2) && is(p->a, K::Xi2))
                       return hit(p, p->a->a, {{"s", p->a->a}});
                     return std::nullopt;
                   }));

  v.push_back(make(17, "mx3l", "core", "muE(xi1(r),s,u)", "s", "LND-EQ-TRS 17",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::MuE3) && is(p->a, K::Xi1))
                       return hit(p, p->b, {{"r", p->a->a}, {"s", p->b}});
                     return std::nullopt;
                   }));

  v.push_back(make(18, "mx3r", "core", "muE(xi2(r),s,u)", "u", "LND-EQ-TRS 18",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::MuE3) && is(p->a, K::Xi2))
                       return hit(p, p->c, {{"r", p->a->a}, {"u", p->c}});
                     return std::nullopt;
                   }));

  v.push_back(make(19, "mxl", "core", "nu(xi(r))", "r", "LND-EQ-TRS 19",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::Nu) && is(p->a, K::Xi))
                       return hit(p, p->a->a, {{"r", p->a->a}});
                     return std::nullopt;
                   }));

  v.push_back(make(20, "mxr", "core", "muE(xi2(r),s)", "s", "LND-EQ-TRS 20",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::MuE2) && is(p->a, K::Xi2))
                       return hit(p, p->b, {{"r", p->a->a}, {"s", p->b}});
                     return std::nullopt;
                   }));

  v.push_back(make(21, "mx", "core", "pair(mu1(r),mu2(r))", "r", "LND-EQ-TRS 21",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::PairPath) && is(p->a, K::Mu1) &&
                         is(p->b, K::Mu2) && path_eq(p->a->a, p->b->a))
                       return hit(p, p->a->a, {{"r", p->a->a}});
                     return std::nullopt;
                   }));

  v.push_back(make(22, "mxx", "core", "muE(t,xi1(r),xi2(s))", "t",
                   "LND-EQ-TRS 22",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::MuE3) && is(p->b, K::Xi1) && is(p->c, K::Xi2))
                       return hit(p, p->a, {{"t", p->a}});
                     return std::nullopt;
                   }));

  v.push_back(make(23, "xmr", "core", "xi(nu(r))", "r", "LND-EQ-TRS 23",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::Xi) && is(p->a, K::Nu))
                       return hit(p, p->a->a, {{"r", p->a->a}});
                     return std::nullopt;
                   }));

  v.push_back(make(24, "mx1r", "core", "muE(s,xi2(r))", "s", "LND-EQ-TRS 24",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::MuE2) && is(p->b, K::Xi2))
                       return hit(p, p->a, {{"s", p->a}});
                     return std::nullopt;
                   }));

  v.push_back(make(25, "stss", "core", "sigma(tau(r,s))",
                   "tau(sigma(s),sigma(r))", "LND-EQ-TRS 25",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::Sigma) && is(p->a, K::Tau))
                       return hit(p, tau(sigma(p->a->b), sigma(p->a->a)),
                                  {{"r", p->a->a}, {"s", p->a->b}});
                     return std::nullopt;
                   }));

  v.push_back(make(26, "ssbl", "core", "sigma(subL(r,pos,s))",
                   "subR(sigma(s),pos,sigma(r))", "LND-EQ-TRS 26",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::Sigma) && is(p->a, K::SubL))
                       return hit(p,
                                  subR(sigma(p->a->b), p->a->pos,
                                       sigma(p->a->a)),
                                  {{"r", p->a->a}, {"s", p->a->b}});
                     return std::nullopt;
                   }));

  v.push_back(make(27, "ssbr", "core", "sigma(subR(s,pos,r))",
                   "subL(sigma(r),pos,sigma(s))", "LND-EQ-TRS 27",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::Sigma) && is(p->a, K::SubR))
                       return hit(p,
                                  subL(sigma(p->a->b), p->a->pos,
                                       sigma(p->a->a)),
                                  {{"s", p->a->a}, {"r", p->a->b}});
                     return std::nullopt;
                   }));

  v.push_back(make(28, "sx", "core", "sigma(xi(r))", "xi(sigma(r))",
                   "LND-EQ-TRS 28",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::Sigma) && is(p->a, K::Xi))
                       return hit(p, xi(sigma(p->a->a)), {{"r", p->a->a}});
                     return std::nullopt;
                   }));

  v.push_back(make(29, "sxss", "core", "sigma(pair(s,r))",
                   "pair(sigma(s),sigma(r))", "LND-EQ-TRS 29",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::Sigma) && is(p->a, K::PairPath))
                       return hit(p, pairpath(sigma(p->a->a), sigma(p->a->b)),
                                  {{"s", p->a->a}, {"r", p->a->b}});
                     return std::nullopt;
                   }));

  v.push_back(make(30, "sm", "core", "sigma(mu(r))", "mu(sigma(r))",
                   "LND-EQ-TRS 30; mu ranges over the unary application and "
                   "projection congruences mu[f], mu1, mu2 and nu — without "
                   "the generic reading, a cancellation redex wrapped in "
                   "sigma(mu1(..)) or sigma(nu(..)) loses its shape for good",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (!is(p, K::Sigma)) return std::nullopt;
                     const PathPtr& q = p->a;
                     switch (q->kind) {
                       case K::MuF:
                         return hit(p, mu(q->fun, sigma(q->a)), {{"r", q->a}});
                       case K::Mu1:
                         return hit(p, mu1(sigma(q->a)), {{"r", q->a}});
                       case K::Mu2:
                         return hit(p, mu2(sigma(q->a)), {{"r", q->a}});
                       case K::Nu:
                         return hit(p, nu(sigma(q->a)), {{"r", q->a}});
                       default:
                         return std::nullopt;
                     }
                   }));

  v.push_back(make(31, "smss", "core", "sigma(muE(s,r))",
                   "muE(sigma(s),sigma(r))", "LND-EQ-TRS 31",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::Sigma) && is(p->a, K::MuE2))
                       return hit(p, muE(sigma(p->a->a), sigma(p->a->b)),
                                  {{"s", p->a->a}, {"r", p->a->b}});
                     return std::nullopt;
                   }));

  v.push_back(make(32, "smsss", "core", "sigma(muE(r,u,v))",
                   "muE(sigma(r),sigma(u),sigma(v))", "LND-EQ-TRS 32",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::Sigma) && is(p->a, K::MuE3))
                       return hit(p,
                                  muE(sigma(p->a->a), sigma(p->a->b),
                                      sigma(p->a->c)),
                                  {{"r", p->a->a},
                                   {"u", p->a->b},
                                   {"v", p->a->c}});
                     return std::nullopt;
                   }));

  v.push_back(make(33, "tsbll", "core", "tau(r,subL(rho,pos,s))",
                   "subL(r,pos,s)", "LND-EQ-TRS 33",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::Tau) && is(p->b, K::SubL) &&
                         is(p->b->a, K::Rho))
                       return hit(p, subL(p->a, p->b->pos, p->b->b),
                                  {{"r", p->a}, {"s", p->b->b}});
                     return std::nullopt;
                   }));

  v.push_back(make(34, "tsbrl", "core", "tau(r,subR(s,pos,rho))",
                   "subL(r,pos,s)", "LND-EQ-TRS 34",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::Tau) && is(p->b, K::SubR) &&
                         is(p->b->b, K::Rho))
                       return hit(p, subL(p->a, p->b->pos, p->b->a),
                                  {{"r", p->a}, {"s", p->b->a}});
                     return std::nullopt;
                   }));

  v.push_back(make(35, "tsblr", "core", "tau(subL(r,pos,s),t)",
                   "tau(r,subR(s,pos,t))", "LND-EQ-TRS 35",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::Tau) && is(p->a, K::SubL))
                       return hit(p,
                                  tau(p->a->a,
                                      subR(p->a->b, p->a->pos, p->b)),
                                  {{"r", p->a->a},
                                   {"s", p->a->b},
                                   {"t", p->b}});
                     return std::nullopt;
                   }));

  v.push_back(make(36, "tsbrr", "core", "tau(subR(s,pos,t),u)",
                   "subR(s,pos,tau(t,u))", "LND-EQ-TRS 36",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::Tau) && is(p->a, K::SubR))
                       return hit(p,
                                  subR(p->a->a, p->a->pos,
                                       tau(p->a->b, p->b)),
                                  {{"s", p->a->a},
                                   {"t", p->a->b},
                                   {"u", p->b}});
                     return std::nullopt;
                   }));

  v.push_back(make(37, "tt", "core", "tau(tau(t,r),s)", "tau(t,tau(r,s))",
                   "LND-EQ-TRS 37",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::Tau) && is(p->a, K::Tau))
                       return hit(p, tau(p->a->a, tau(p->a->b, p->b)),
                                  {{"t", p->a->a},
                                   {"r", p->a->b},
                                   {"s", p->b}});
                     return std::nullopt;
                   }));

  v.push_back(make(
      38, "tts", "core", "tau(C[u],tau(C[sigma(u)],v))", "v", "LND-EQ-TRS 38",
      [](const PathPtr& p, const Environment&) -> Match {
        if (!is(p, K::Tau) || !is(p->b, K::Tau)) return std::nullopt;
        auto se = sigma_edit(p->a, p->b->a);
        if (!se) return std::nullopt;
        return hit(p, p->b->b, {{"u", se->second}, {"v", p->b->b}}, se->first);
      }));

  v.push_back(make(
      39, "tst", "core", "tau(C[sigma(u)],tau(C[u],v))", "v",
      "LND-EQ-TRS 39; the traditional table prints u as the contractum, which "
      "has the wrong endpoints — v is the sound reading",
      [](const PathPtr& p, const Environment&) -> Match {
        if (!is(p, K::Tau) || !is(p->b, K::Tau)) return std::nullopt;
        auto sd = sigma_drop(p->a, p->b->a);
        if (!sd) return std::nullopt;
        return hit(p, p->b->b, {{"u", sd->second}, {"v", p->b->b}}, sd->first);
      }));

  v.push_back(make(
      40, "tf", "core", "tau(mu[f](r),mu[f](s))", "mu[f](tau(r,s))",
      "LND-EQ-TRS 40",
      [](const PathPtr& p, const Environment&) -> Match {
        if (!is(p, K::Tau) || !is(p->a, K::MuF) || !is(p->b, K::MuF))
          return std::nullopt;
        if (!fun_eq(normalize_fun(p->a->fun), normalize_fun(p->b->fun)))
          return std::nullopt;
        return hit(p, mu(p->a->fun, tau(p->a->a, p->b->a)),
                   {{"r", p->a->a}, {"s", p->b->a}});
      }));

  v.push_back(make(
      41, "cf", "core", "mu[g](mu[f](p))", "mu[comp(g,f)](p)", "LND-EQ-TRS 41",
      [](const PathPtr& p, const Environment&) -> Match {
        if (!is(p, K::MuF) || !is(p->a, K::MuF)) return std::nullopt;
        return hit(p, mu(normalize_fun(fcomp(p->fun, p->a->fun)), p->a->a),
                   {{"p", p->a->a}});
      }));

  v.push_back(make(42, "ci", "core", "mu[id](p)", "p", "LND-EQ-TRS 42",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::MuF) &&
                         normalize_fun(p->fun)->kind == FunKind::Identity)
                       return hit(p, p->a, {{"p", p->a}});
                     return std::nullopt;
                   }));

  v.push_back(make(
      43, "hp", "core", "tau(H[fam](x),mu[g](p))", "tau(mu[f](p),H[fam](y))",
      "LND-EQ-TRS 43; H : f ~ g declared, x = src(p), y = tgt(p)",
      [](const PathPtr& p, const Environment& env) -> Match {
        if (!is(p, K::Tau) || !is(p->a, K::Hom) || !is(p->b, K::MuF))
          return std::nullopt;
        if (!env.has_hom(p->a->name)) return std::nullopt;
        if (!fun_eq(normalize_fun(p->b->fun), normalize_fun(p->a->fun2)))
          return std::nullopt;
        auto ep = try_endpoints(p->b->a, env);
        if (!ep || !point_eq(ep->first, normalize_point(p->a->at)))
          return std::nullopt;
        PathPtr moved = mu(p->a->fun, p->b->a);
        PathPtr at_tgt = hom(p->a->name, p->a->fun, p->a->fun2, ep->second);
        return hit(p, tau(moved, at_tgt), {{"p", p->b->a}});
      }));

  v.push_back(make(
      44, "mxc", "core", "mu[pairmap(g,h)](pair(p,q))",
      "pair(mu[g](p),mu[h](q))", "LND-EQ-TRS 44",
      [](const PathPtr& p, const Environment&) -> Match {
        if (!is(p, K::MuF) || !is(p->a, K::PairPath)) return std::nullopt;
        FunPtr f = normalize_fun(p->fun);
        if (f->kind != FunKind::PairMap) return std::nullopt;
        return hit(p, pairpath(mu(f->a, p->a->a), mu(f->b, p->a->b)),
                   {{"p", p->a->a}, {"q", p->a->b}});
      }));

  v.push_back(make(45, "mxp", "core", "mu(rho(x))", "rho(mu x)",
                   "LND-EQ-TRS 45; mu ranges over mu[f] (giving rho(f(x))) "
                   "and the projections mu1/mu2 (rho at the projected point), "
                   "matching the generic reading of rule 30",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (!p->a || !is(p->a, K::Rho)) return std::nullopt;
                     switch (p->kind) {
                       case K::MuF:
                         return hit(p, rho(apply_fun(p->fun, p->a->at)));
                       case K::Mu1:
                         return hit(p, rho(normalize_point(pfst(p->a->at))));
                       case K::Mu2:
                         return hit(p, rho(normalize_point(psnd(p->a->at))));
                       default:
                         return std::nullopt;
                     }
                   }));

  v.push_back(make(
      46, "nxp", "core", "nu(rho(x))", "rho(x)",
      "LND-EQ-TRS 46; the traditional table prints rho at the applied value "
      "f(x) — here nu is endpoint-transparent, so the point is unchanged",
      [](const PathPtr& p, const Environment&) -> Match {
        if (is(p, K::Nu) && is(p->a, K::Rho)) return hit(p, p->a);
        return std::nullopt;
      }));

  v.push_back(make(47, "xxp", "core", "xi(rho(x))", "rho(x)", "LND-EQ-TRS 47",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::Xi) && is(p->a, K::Rho)) return hit(p, p->a);
                     return std::nullopt;
                   }));

  return v;
}

std::vector<RewriteRule> build_ext() {
  using K = PathKind;
  std::vector<RewriteRule> v;

  v.push_back(make(48, "extl", "ext", "nu(ext(t))", "t", "LND-EQ-TRS ext/extl",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::Nu) && is(p->a, K::Ext))
                       return hit(p, p->a->a, {{"t", p->a->a}});
                     return std::nullopt;
                   }));

  v.push_back(make(49, "extr", "ext", "ext(nu(s))", "s", "LND-EQ-TRS ext/extr",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::Ext) && is(p->a, K::Nu))
                       return hit(p, p->a->a, {{"s", p->a->a}});
                     return std::nullopt;
                   }));

  v.push_back(make(50, "exp", "ext", "ext(rho(x))", "rho(x)",
                   "LND-EQ-TRS ext/exp",
                   [](const PathPtr& p, const Environment&) -> Match {
                     if (is(p, K::Ext) && is(p->a, K::Rho)) return hit(p, p->a);
                     return std::nullopt;
                   }));

  return v;
}

const std::vector<RewriteRule>& core_rules() {
  static const std::vector<RewriteRule> v = build_core();
  return v;
}

const std::vector<RewriteRule>& all_rules() {
  static const std::vector<RewriteRule> v = [] {
    std::vector<RewriteRule> all = build_core();
    for (auto& r : build_ext()) all.push_back(std::move(r));
    return all;
  }();
  return v;
}

void collect(const PathPtr& p, Position& at, const std::vector<RewriteRule>& rules,
             const Environment& env,
             std::vector<std::pair<Position, const RewriteRule*>>& out) {
  for (const auto& r : rules)
    if (r.match(p, env)) out.emplace_back(at, &r);
  for (int i = 0; i < child_count(p); ++i) {
    at.push_back(i);
    collect(child(p, i), at, rules, env, out);
    at.pop_back();
  }
}

bool find_first(const PathPtr& p, Position& at,
                const std::vector<RewriteRule>& rules, const Environment& env,
                std::pair<Position, const RewriteRule*>& out) {
  for (const auto& r : rules)
    if (r.match(p, env)) {
      out = {at, &r};
      return true;
    }
  for (int i = 0; i < child_count(p); ++i) {
    at.push_back(i);
    if (find_first(child(p, i), at, rules, env, out)) return true;
    at.pop_back();
  }
  return false;
}

} // namespace

const std::vector<RewriteRule>& catalog(bool include_ext) {
  return include_ext ? all_rules() : core_rules();
}

const RewriteRule* find_rule(const std::string& name) {
  for (const auto& r : all_rules())
    if (r.name == name) return &r;
  return nullptr;
}

std::optional<MatchBinding> match_at_root(const RewriteRule& rule,
                                          const PathPtr& p,
                                          const Environment& env) {
  return rule.match(p, env);
}

PathPtr apply(const RewriteRule& rule, const MatchBinding& binding,
              const Environment& env) {
  std::optional<Endpoints> before = [&]() -> std::optional<Endpoints> {
    try {
      return endpoints(binding.redex, env);
    } catch (const Error&) {
      return std::nullopt; // loose or ill-formed redex: nothing to preserve
    }
  }();
  if (before) {
    std::optional<Endpoints> after;
    try {
      after = endpoints(binding.replacement, env);
    } catch (const Error&) {
    }
    if (!after || !point_eq(before->first, after->first) ||
        !point_eq(before->second, after->second))
      throw Error(ErrorKind::IllFormedResult,
                  "rule " + rule.name + " changed endpoints of " +
                      print_path(binding.redex) + " rewriting to " +
                      print_path(binding.replacement));
  }
  return binding.replacement;
}

std::vector<std::pair<Position, const RewriteRule*>>
redexes(const PathPtr& p, bool include_ext, const Environment& env) {
  std::vector<std::pair<Position, const RewriteRule*>> out;
  Position at;
  collect(p, at, catalog(include_ext), env, out);
  return out;
}

std::optional<std::pair<Position, const RewriteRule*>>
first_redex(const PathPtr& p, bool include_ext, const Environment& env) {
  Position at;
  std::pair<Position, const RewriteRule*> out;
  if (find_first(p, at, catalog(include_ext), env, out)) return out;
  return std::nullopt;
}

} // namespace pathrw
