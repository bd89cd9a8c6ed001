#include "pathrw/path.hpp"

namespace pathrw {

namespace {
std::shared_ptr<PathTerm> node(PathKind k) {
  auto p = std::make_shared<PathTerm>();
  p->kind = k;
  return p;
}
} // namespace

PathPtr atom(std::string name, PointPtr source, PointPtr target) {
  auto p = node(PathKind::Atom);
  p->name = std::move(name);
  p->at = std::move(source);
  p->at2 = std::move(target);
  return p;
}

PathPtr rho(PointPtr x) {
  auto p = node(PathKind::Rho);
  p->at = std::move(x);
  return p;
}

PathPtr sigma(PathPtr q) {
  auto p = node(PathKind::Sigma);
  p->a = std::move(q);
  return p;
}

PathPtr tau(PathPtr l, PathPtr r) {
  auto p = node(PathKind::Tau);
  p->a = std::move(l);
  p->b = std::move(r);
  return p;
}

PathPtr mu(FunPtr f, PathPtr q) {
  auto p = node(PathKind::MuF);
  p->fun = std::move(f);
  p->a = std::move(q);
  return p;
}

PathPtr mu1(PathPtr q) {
  auto p = node(PathKind::Mu1);
  p->a = std::move(q);
  return p;
}

PathPtr mu2(PathPtr q) {
  auto p = node(PathKind::Mu2);
  p->a = std::move(q);
  return p;
}

PathPtr muE(PathPtr q, PathPtr r) {
  auto p = node(PathKind::MuE2);
  p->a = std::move(q);
  p->b = std::move(r);
  return p;
}

PathPtr muE(PathPtr q, PathPtr r, PathPtr s) {
  auto p = node(PathKind::MuE3);
  p->a = std::move(q);
  p->b = std::move(r);
  p->c = std::move(s);
  return p;
}

PathPtr nu(PathPtr q) {
  auto p = node(PathKind::Nu);
  p->a = std::move(q);
  return p;
}

PathPtr xi(PathPtr q) {
  auto p = node(PathKind::Xi);
  p->a = std::move(q);
  return p;
}

PathPtr xi1(PathPtr q) {
  auto p = node(PathKind::Xi1);
  p->a = std::move(q);
  return p;
}

PathPtr xi2(PathPtr q) {
  auto p = node(PathKind::Xi2);
  p->a = std::move(q);
  return p;
}

PathPtr pairpath(PathPtr q, PathPtr r) {
  auto p = node(PathKind::PairPath);
  p->a = std::move(q);
  p->b = std::move(r);
  return p;
}

PathPtr subL(PathPtr main, PointPos pos, PathPtr sub) {
  auto p = node(PathKind::SubL);
  p->a = std::move(main);
  p->pos = std::move(pos);
  p->b = std::move(sub);
  return p;
}

PathPtr subR(PathPtr sub, PointPos pos, PathPtr main) {
  auto p = node(PathKind::SubR);
  p->a = std::move(sub);
  p->pos = std::move(pos);
  p->b = std::move(main);
  return p;
}

PathPtr ext(PathPtr q) {
  auto p = node(PathKind::Ext);
  p->a = std::move(q);
  return p;
}

PathPtr hom(std::string family, FunPtr f, FunPtr g, PointPtr x) {
  auto p = node(PathKind::Hom);
  p->name = std::move(family);
  p->fun = std::move(f);
  p->fun2 = std::move(g);
  p->at = std::move(x);
  return p;
}

PathPtr eta(PointPtr x) {
  auto p = node(PathKind::Eta);
  p->at = std::move(x);
  return p;
}

bool path_eq(const PathPtr& p, const PathPtr& q) {
  if (p == q) return true;
  if (!p || !q) return false;
  if (p->kind != q->kind) return false;
  switch (p->kind) {
    case PathKind::Atom:
      return p->name == q->name && point_eq(p->at, q->at) && point_eq(p->at2, q->at2);
    case PathKind::Rho:
    case PathKind::Eta:
      return point_eq(p->at, q->at);
    case PathKind::Hom:
      return p->name == q->name && fun_eq(p->fun, q->fun) &&
             fun_eq(p->fun2, q->fun2) && point_eq(p->at, q->at);
    case PathKind::MuF:
      return fun_eq(p->fun, q->fun) && path_eq(p->a, q->a);
    case PathKind::SubL:
    case PathKind::SubR:
      return p->pos == q->pos && path_eq(p->a, q->a) && path_eq(p->b, q->b);
    default:
      return path_eq(p->a, q->a) && path_eq(p->b, q->b) && path_eq(p->c, q->c);
  }
}

std::string print_pos(const PointPos& pos) {
  std::string s = "[";
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(pos[i]);
  }
  return s + "]";
}

std::string print_path(const PathPtr& p) {
  switch (p->kind) {
    case PathKind::Atom: return p->name;
    case PathKind::Rho: return "rho(" + print_point(p->at) + ")";
    case PathKind::Sigma: return "sigma(" + print_path(p->a) + ")";
    case PathKind::Tau:
      return "tau(" + print_path(p->a) + "," + print_path(p->b) + ")";
    case PathKind::MuF:
      return "mu[" + print_fun(p->fun) + "](" + print_path(p->a) + ")";
    case PathKind::Mu1: return "mu1(" + print_path(p->a) + ")";
    case PathKind::Mu2: return "mu2(" + print_path(p->a) + ")";
    case PathKind::MuE2:
      return "muE(" + print_path(p->a) + "," + print_path(p->b) + ")";
    case PathKind::MuE3:
      return "muE(" + print_path(p->a) + "," + print_path(p->b) + "," +
             print_path(p->c) + ")";
    case PathKind::Nu: return "nu(" + print_path(p->a) + ")";
    case PathKind::Xi: return "xi(" + print_path(p->a) + ")";
    case PathKind::Xi1: return "xi1(" + print_path(p->a) + ")";
    case PathKind::Xi2: return "xi2(" + print_path(p->a) + ")";
    case PathKind::PairPath:
      return "pair(" + print_path(p->a) + "," + print_path(p->b) + ")";
    case PathKind::SubL:
      return "subL(" + print_path(p->a) + "," + print_pos(p->pos) + "," +
             print_path(p->b) + ")";
    case PathKind::SubR:
      return "subR(" + print_path(p->a) + "," + print_pos(p->pos) + "," +
             print_path(p->b) + ")";
    case PathKind::Ext: return "ext(" + print_path(p->a) + ")";
    case PathKind::Hom: return "H[" + p->name + "](" + print_point(p->at) + ")";
    case PathKind::Eta: return "eta(" + print_point(p->at) + ")";
  }
  return "?";
}

int path_size(const PathPtr& p) {
  if (!p) return 0;
  return 1 + path_size(p->a) + path_size(p->b) + path_size(p->c);
}

int child_count(const PathPtr& p) {
  if (p->c) return 3;
  if (p->b) return 2;
  if (p->a) return 1;
  return 0;
}

PathPtr child(const PathPtr& p, int i) {
  switch (i) {
    case 0: return p->a;
    case 1: return p->b;
    case 2: return p->c;
    default: return nullptr;
  }
}

static PathPtr with_child(const PathPtr& p, int i, const PathPtr& c) {
  auto q = std::make_shared<PathTerm>(*p);
  switch (i) {
    case 0: q->a = c; break;
    case 1: q->b = c; break;
    case 2: q->c = c; break;
    default: return nullptr;
  }
  return q;
}

PathPtr subterm(const PathPtr& p, const Position& pos) {
  PathPtr cur = p;
  for (int i : pos) {
    if (!cur) return nullptr;
    cur = child(cur, i);
  }
  return cur;
}

static PathPtr replace_rec(const PathPtr& p, const Position& pos, std::size_t k,
                           const PathPtr& sub) {
  if (k == pos.size()) return sub;
  if (!p) return nullptr;
  PathPtr c = child(p, pos[k]);
  if (!c) return nullptr;
  PathPtr nc = replace_rec(c, pos, k + 1, sub);
  if (!nc) return nullptr;
  return with_child(p, pos[k], nc);
}

PathPtr replace(const PathPtr& p, const Position& pos, const PathPtr& sub) {
  return replace_rec(p, pos, 0, sub);
}

static void collect_positions(const PathPtr& p, Position& cur,
                              std::vector<Position>& out) {
  out.push_back(cur);
  int n = child_count(p);
  for (int i = 0; i < n; ++i) {
    cur.push_back(i);
    collect_positions(child(p, i), cur, out);
    cur.pop_back();
  }
}

std::vector<Position> all_positions(const PathPtr& p) {
  std::vector<Position> out;
  Position cur;
  collect_positions(p, cur, out);
  return out;
}

PathPtr normalize_points_in_path(const PathPtr& p) {
  auto q = std::make_shared<PathTerm>(*p);
  if (q->at) q->at = normalize_point(q->at);
  if (q->at2) q->at2 = normalize_point(q->at2);
  if (q->fun) q->fun = normalize_fun(q->fun);
  if (q->fun2) q->fun2 = normalize_fun(q->fun2);
  if (q->a) q->a = normalize_points_in_path(q->a);
  if (q->b) q->b = normalize_points_in_path(q->b);
  if (q->c) q->c = normalize_points_in_path(q->c);
  return q;
}

} // namespace pathrw
