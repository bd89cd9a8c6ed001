#include "pathrw/endpoints.hpp"

#include "pathrw/error.hpp"

namespace pathrw {

Endpoints endpoints(const PathPtr& p, const Environment& env) {
  switch (p->kind) {
    case PathKind::Atom: {
      if (!env.has_atom(p->name))
        throw Error(ErrorKind::UnknownAtom, "undeclared atom: " + p->name);
      return {normalize_point(p->at), normalize_point(p->at2)};
    }
    case PathKind::Rho: {
      PointPtr x = normalize_point(p->at);
      return {x, x};
    }
    case PathKind::Eta:
      return {pstar(), normalize_point(p->at)};
    case PathKind::Hom: {
      if (!env.has_hom(p->name))
        throw Error(ErrorKind::UnknownAtom, "undeclared homotopy family: " + p->name);
      PointPtr x = normalize_point(p->at);
      return {apply_fun(p->fun, x), apply_fun(p->fun2, x)};
    }
    case PathKind::Sigma: {
      Endpoints e = endpoints(p->a, env);
      return {e.second, e.first};
    }
    case PathKind::Tau: {
      Endpoints l = endpoints(p->a, env);
      Endpoints r = endpoints(p->b, env);
      if (!point_eq(l.second, r.first))
        throw Error(ErrorKind::EndpointMismatch,
                    "tau: target " + print_point(l.second) +
                        " does not meet source " + print_point(r.first));
      return {l.first, r.second};
    }
    case PathKind::MuF: {
      Endpoints e = endpoints(p->a, env);
      return {apply_fun(p->fun, e.first), apply_fun(p->fun, e.second)};
    }
    case PathKind::Mu1: {
      Endpoints e = endpoints(p->a, env);
      return {normalize_point(pfst(e.first)), normalize_point(pfst(e.second))};
    }
    case PathKind::Mu2: {
      Endpoints e = endpoints(p->a, env);
      return {normalize_point(psnd(e.first)), normalize_point(psnd(e.second))};
    }
    case PathKind::PairPath: {
      Endpoints l = endpoints(p->a, env);
      Endpoints r = endpoints(p->b, env);
      return {normalize_point(ppair(l.first, r.first)),
              normalize_point(ppair(l.second, r.second))};
    }
    // nu, xi and ext change the type of the equation (application to an
    // implicit argument, abstraction, extensionality) but not the points the
    // proof relates as terms; they are endpoint-transparent here.
    case PathKind::Nu:
    case PathKind::Xi:
    case PathKind::Ext:
      return endpoints(p->a, env);
    case PathKind::SubL: {
      Endpoints main = endpoints(p->a, env);
      Endpoints sub = endpoints(p->b, env);
      PointPtr hole = point_subterm(main.second, p->pos);
      if (!hole)
        throw Error(ErrorKind::BadPosition,
                    "subL: position " + print_pos(p->pos) + " not in " +
                        print_point(main.second));
      if (!point_eq(hole, sub.first))
        throw Error(ErrorKind::EndpointMismatch,
                    "subL: hole " + print_point(hole) + " does not match " +
                        print_point(sub.first));
      return {main.first, point_replace(main.second, p->pos, sub.second)};
    }
    case PathKind::SubR: {
      Endpoints sub = endpoints(p->a, env);
      Endpoints main = endpoints(p->b, env);
      PointPtr hole = point_subterm(main.first, p->pos);
      if (!hole)
        throw Error(ErrorKind::BadPosition,
                    "subR: position " + print_pos(p->pos) + " not in " +
                        print_point(main.first));
      if (!point_eq(hole, sub.second))
        throw Error(ErrorKind::EndpointMismatch,
                    "subR: hole " + print_point(hole) + " does not match " +
                        print_point(sub.second));
      return {point_replace(main.first, p->pos, sub.first), main.second};
    }
    case PathKind::MuE2:
    case PathKind::MuE3:
    case PathKind::Xi1:
    case PathKind::Xi2:
      throw Error(ErrorKind::LooseTerm,
                  "no endpoint semantics for " + print_path(p));
  }
  throw Error(ErrorKind::Internal, "endpoints: unhandled constructor");
}

PointPtr src(const PathPtr& p, const Environment& env) {
  return endpoints(p, env).first;
}

PointPtr tgt(const PathPtr& p, const Environment& env) {
  return endpoints(p, env).second;
}

namespace {

void check(const PathPtr& p, const Environment& env, WfMode mode, Position& at,
           Diagnostics& out) {
  switch (p->kind) {
    case PathKind::Atom:
      if (!env.has_atom(p->name))
        out.push_back({at, "unknown-atom", "undeclared atom: " + p->name});
      break;
    case PathKind::Hom:
      if (!env.has_hom(p->name))
        out.push_back({at, "unknown-hom", "undeclared homotopy family: " + p->name});
      break;
    case PathKind::MuE2:
    case PathKind::MuE3:
    case PathKind::Xi1:
    case PathKind::Xi2:
      if (mode == WfMode::Strict)
        out.push_back({at, "loose-term",
                       "connective-only constructor in strict mode: " +
                           print_path(p)});
      break;
    default: break;
  }
  // Local endpoint side conditions; children are checked on their own, so
  // only report a mismatch whose children are themselves clean.
  if (mode == WfMode::Strict &&
      (p->kind == PathKind::Tau || p->kind == PathKind::SubL ||
       p->kind == PathKind::SubR)) {
    try {
      endpoints(p, env);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::EndpointMismatch || e.kind() == ErrorKind::BadPosition) {
        bool child_broken = false;
        for (int i = 0; i < child_count(p); ++i) {
          try {
            endpoints(child(p, i), env);
          } catch (const Error&) {
            child_broken = true;
          }
        }
        if (!child_broken)
          out.push_back({at,
                         e.kind() == ErrorKind::BadPosition ? "bad-position"
                                                            : "endpoint-mismatch",
                         e.what()});
      }
      // LooseTerm/UnknownAtom surface via the per-node checks above.
    }
  }
  for (int i = 0; i < child_count(p); ++i) {
    at.push_back(i);
    check(child(p, i), env, mode, at, out);
    at.pop_back();
  }
}

} // namespace

Diagnostics well_formed(const PathPtr& p, const Environment& env, WfMode mode) {
  Diagnostics out;
  Position at;
  check(p, env, mode, at, out);
  return out;
}

} // namespace pathrw
