#include "pathrw/point.hpp"

namespace pathrw {

FunPtr fnamed(std::string name) {
  auto f = std::make_shared<FunExpr>();
  f->kind = FunKind::Named;
  f->name = std::move(name);
  return f;
}

FunPtr fid() {
  auto f = std::make_shared<FunExpr>();
  f->kind = FunKind::Identity;
  return f;
}

FunPtr fcomp(FunPtr a, FunPtr b) {
  auto f = std::make_shared<FunExpr>();
  f->kind = FunKind::Compose;
  f->a = std::move(a);
  f->b = std::move(b);
  return f;
}

FunPtr fpairmap(FunPtr a, FunPtr b) {
  auto f = std::make_shared<FunExpr>();
  f->kind = FunKind::PairMap;
  f->a = std::move(a);
  f->b = std::move(b);
  return f;
}

PointPtr pvar(std::string name) {
  auto p = std::make_shared<PointTerm>();
  p->kind = PointKind::Var;
  p->name = std::move(name);
  return p;
}

PointPtr papp(FunPtr f, PointPtr x) {
  auto p = std::make_shared<PointTerm>();
  p->kind = PointKind::App;
  p->fun = std::move(f);
  p->a = std::move(x);
  return p;
}

PointPtr ppair(PointPtr a, PointPtr b) {
  auto p = std::make_shared<PointTerm>();
  p->kind = PointKind::Pair;
  p->a = std::move(a);
  p->b = std::move(b);
  return p;
}

PointPtr pfst(PointPtr a) {
  auto p = std::make_shared<PointTerm>();
  p->kind = PointKind::Fst;
  p->a = std::move(a);
  return p;
}

PointPtr psnd(PointPtr a) {
  auto p = std::make_shared<PointTerm>();
  p->kind = PointKind::Snd;
  p->a = std::move(a);
  return p;
}

PointPtr pstar() {
  auto p = std::make_shared<PointTerm>();
  p->kind = PointKind::Star;
  return p;
}

PointPtr pnat(std::uint64_t n) {
  auto p = std::make_shared<PointTerm>();
  p->kind = PointKind::Nat;
  p->nat = n;
  return p;
}

bool fun_eq(const FunPtr& f, const FunPtr& g) {
  if (f == g) return true;
  if (!f || !g) return false;
  if (f->kind != g->kind) return false;
  switch (f->kind) {
    case FunKind::Named: return f->name == g->name;
    case FunKind::Identity: return true;
    case FunKind::Compose:
    case FunKind::PairMap: return fun_eq(f->a, g->a) && fun_eq(f->b, g->b);
  }
  return false;
}

bool point_eq(const PointPtr& a, const PointPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case PointKind::Var: return a->name == b->name;
    case PointKind::Star: return true;
    case PointKind::Nat: return a->nat == b->nat;
    case PointKind::App: return fun_eq(a->fun, b->fun) && point_eq(a->a, b->a);
    case PointKind::Pair: return point_eq(a->a, b->a) && point_eq(a->b, b->b);
    case PointKind::Fst:
    case PointKind::Snd: return point_eq(a->a, b->a);
  }
  return false;
}

std::string print_fun(const FunPtr& f) {
  switch (f->kind) {
    case FunKind::Named: return f->name;
    case FunKind::Identity: return "id";
    case FunKind::Compose:
      return "comp(" + print_fun(f->a) + "," + print_fun(f->b) + ")";
    case FunKind::PairMap:
      return "pairmap(" + print_fun(f->a) + "," + print_fun(f->b) + ")";
  }
  return "?";
}

std::string print_point(const PointPtr& p) {
  switch (p->kind) {
    case PointKind::Var: return p->name;
    case PointKind::Star: return "*";
    case PointKind::Nat: return std::to_string(p->nat);
    case PointKind::App: return print_fun(p->fun) + "(" + print_point(p->a) + ")";
    case PointKind::Pair:
      return "<" + print_point(p->a) + "," + print_point(p->b) + ">";
    case PointKind::Fst: return "fst(" + print_point(p->a) + ")";
    case PointKind::Snd: return "snd(" + print_point(p->a) + ")";
  }
  return "?";
}

FunPtr normalize_fun(const FunPtr& f) {
  switch (f->kind) {
    case FunKind::Named:
    case FunKind::Identity: return f;
    case FunKind::Compose: {
      FunPtr a = normalize_fun(f->a);
      FunPtr b = normalize_fun(f->b);
      if (a->kind == FunKind::Identity) return b;
      if (b->kind == FunKind::Identity) return a;
      // Composition is associative, so the bracketing carries no information;
      // right-associating the spine makes the composed function canonical no
      // matter which application congruence collapsed first.
      if (a->kind == FunKind::Compose) return normalize_fun(fcomp(a->a, fcomp(a->b, b)));
      if (a == f->a && b == f->b) return f;
      return fcomp(a, b);
    }
    case FunKind::PairMap: {
      FunPtr a = normalize_fun(f->a);
      FunPtr b = normalize_fun(f->b);
      if (a == f->a && b == f->b) return f;
      return fpairmap(a, b);
    }
  }
  return f;
}

PointPtr apply_fun(const FunPtr& f0, const PointPtr& x) {
  FunPtr f = normalize_fun(f0);
  switch (f->kind) {
    case FunKind::Identity: return normalize_point(x);
    case FunKind::Compose: return apply_fun(f->a, apply_fun(f->b, x));
    case FunKind::PairMap: {
      PointPtr v = normalize_point(x);
      if (v->kind == PointKind::Pair)
        return normalize_point(ppair(apply_fun(f->a, v->a), apply_fun(f->b, v->b)));
      return papp(f, v);
    }
    case FunKind::Named: {
      PointPtr v = normalize_point(x);
      if (f->name == "succ" && v->kind == PointKind::Nat) return pnat(v->nat + 1);
      return papp(f, v);
    }
  }
  return papp(f, x);
}

PointPtr normalize_point(const PointPtr& p) {
  switch (p->kind) {
    case PointKind::Var:
    case PointKind::Star:
    case PointKind::Nat: return p;
    case PointKind::App: return apply_fun(p->fun, p->a);
    case PointKind::Pair: {
      PointPtr a = normalize_point(p->a);
      PointPtr b = normalize_point(p->b);
      // Surjective pairing: <fst(x),snd(x)> -> x.
      if (a->kind == PointKind::Fst && b->kind == PointKind::Snd &&
          point_eq(a->a, b->a))
        return a->a;
      if (a == p->a && b == p->b) return p;
      return ppair(a, b);
    }
    case PointKind::Fst: {
      PointPtr a = normalize_point(p->a);
      if (a->kind == PointKind::Pair) return a->a;
      if (a == p->a) return p;
      return pfst(a);
    }
    case PointKind::Snd: {
      PointPtr a = normalize_point(p->a);
      if (a->kind == PointKind::Pair) return a->b;
      if (a == p->a) return p;
      return psnd(a);
    }
  }
  return p;
}

PointPtr point_subterm(const PointPtr& p, const PointPos& pos) {
  PointPtr cur = p;
  for (int i : pos) {
    if (!cur) return nullptr;
    switch (cur->kind) {
      case PointKind::App:
      case PointKind::Fst:
      case PointKind::Snd:
        if (i != 0) return nullptr;
        cur = cur->a;
        break;
      case PointKind::Pair:
        if (i == 0) cur = cur->a;
        else if (i == 1) cur = cur->b;
        else return nullptr;
        break;
      default: return nullptr;
    }
  }
  return cur;
}

static PointPtr point_replace_rec(const PointPtr& p, const PointPos& pos,
                                  std::size_t k, const PointPtr& sub) {
  if (k == pos.size()) return sub;
  if (!p) return nullptr;
  int i = pos[k];
  switch (p->kind) {
    case PointKind::App: {
      if (i != 0) return nullptr;
      PointPtr a = point_replace_rec(p->a, pos, k + 1, sub);
      return a ? papp(p->fun, a) : nullptr;
    }
    case PointKind::Fst: {
      if (i != 0) return nullptr;
      PointPtr a = point_replace_rec(p->a, pos, k + 1, sub);
      return a ? pfst(a) : nullptr;
    }
    case PointKind::Snd: {
      if (i != 0) return nullptr;
      PointPtr a = point_replace_rec(p->a, pos, k + 1, sub);
      return a ? psnd(a) : nullptr;
    }
    case PointKind::Pair: {
      if (i == 0) {
        PointPtr a = point_replace_rec(p->a, pos, k + 1, sub);
        return a ? ppair(a, p->b) : nullptr;
      }
      if (i == 1) {
        PointPtr b = point_replace_rec(p->b, pos, k + 1, sub);
        return b ? ppair(p->a, b) : nullptr;
      }
      return nullptr;
    }
    default: return nullptr;
  }
}

PointPtr point_replace(const PointPtr& p, const PointPos& pos, const PointPtr& sub) {
  return point_replace_rec(p, pos, 0, sub);
}

} // namespace pathrw
