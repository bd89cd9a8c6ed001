#include "pathrw/random_term.hpp"

#include "pathrw/error.hpp"

#include <random>
#include <vector>

namespace pathrw {

namespace {

enum class Family {
  AtomLeaf,
  RhoLeaf,
  EtaLeaf,
  HomLeaf,
  SigmaNode,
  TauNode,
  MuFunNode,
  Mu1Node,
  Mu2Node,
  NuNode,
  XiNode,
  PairNode,
  SubLNode,
  SubRNode,
  ExtNode,
};

// All positions inside a point term, the root included.
void point_positions(const PointPtr& p, PointPos& at,
                     std::vector<PointPos>& out) {
  out.push_back(at);
  switch (p->kind) {
    case PointKind::App:
    case PointKind::Fst:
    case PointKind::Snd:
      at.push_back(0);
      point_positions(p->a, at, out);
      at.pop_back();
      break;
    case PointKind::Pair:
      at.push_back(0);
      point_positions(p->a, at, out);
      at.pop_back();
      at.push_back(1);
      point_positions(p->b, at, out);
      at.pop_back();
      break;
    default:
      break;
  }
}

struct Gen {
  const Environment& env;
  const GenWeights& w;
  std::mt19937_64 rng;

  std::vector<PointPtr> pool;
  std::vector<const AtomDecl*> atoms;
  std::vector<const HomDecl*> homs;
  std::vector<FunPtr> funs;

  Gen(const Environment& e, const GenWeights& weights, std::uint64_t seed)
      : env(e), w(weights), rng(seed) {
    for (const std::string& n : env.points) pool.push_back(pvar(n));
    for (const auto& [n, decl] : env.atoms) {
      atoms.push_back(&decl);
      pool.push_back(normalize_point(decl.source));
      pool.push_back(normalize_point(decl.target));
    }
    for (const auto& [n, decl] : env.homs) homs.push_back(&decl);
    for (const auto& [n, decl] : env.funs) {
      if (decl.kind == FunDeclKind::ProductMap)
        funs.push_back(fpairmap(fnamed(decl.left), fnamed(decl.right)));
      else
        funs.push_back(fnamed(n));
    }
    if (pool.empty()) {
      if (!env.funs.empty())
        for (int i = 0; i <= 2; ++i) pool.push_back(pnat(i));
      else
        pool.push_back(pstar());
    }
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(rng() % n); }

  double unit() { return (rng() >> 11) * 0x1.0p-53; }

  PointPtr point() { return pool[index(pool.size())]; }

  FunPtr fun() {
    // The identity is always available; composites show the functor laws.
    std::size_t extra = funs.empty() ? 1 : 3;
    std::size_t k = index(funs.size() + extra);
    if (k < funs.size()) return funs[k];
    std::size_t which = k - funs.size();
    if (which == 0 || funs.empty()) return fid();
    if (which == 1) return fcomp(funs[index(funs.size())], fid());
    return fcomp(funs[index(funs.size())], funs[index(funs.size())]);
  }

  Family choose(int depth) {
    struct Option {
      Family f;
      double weight;
    };
    std::vector<Option> opts;
    auto add = [&](Family f, double weight, bool available) {
      if (weight > 0 && available) opts.push_back({f, weight});
    };
    add(Family::AtomLeaf, w.atom, !atoms.empty());
    add(Family::RhoLeaf, w.rho, true);
    add(Family::EtaLeaf, w.eta, true);
    add(Family::HomLeaf, w.hom, !homs.empty());
    if (depth > 0) {
      add(Family::SigmaNode, w.sigma, true);
      add(Family::TauNode, w.tau, true);
      add(Family::MuFunNode, w.mu_fun, true);
      add(Family::Mu1Node, w.mu1, true);
      add(Family::Mu2Node, w.mu2, true);
      add(Family::NuNode, w.nu, true);
      add(Family::XiNode, w.xi, true);
      add(Family::PairNode, w.pairp, true);
      add(Family::SubLNode, w.subl, true);
      add(Family::SubRNode, w.subr, true);
      add(Family::ExtNode, w.ext, true);
    }
    if (opts.empty()) {
      double composite = w.sigma + w.tau + w.mu_fun + w.mu1 + w.mu2 + w.nu +
                         w.xi + w.pairp + w.subl + w.subr + w.ext;
      if (depth == 0 && composite > 0)
        return Family::RhoLeaf; // depth floor: a leaf is unavoidable
      throw Error(ErrorKind::GenerationFailed,
                  "no constructor family has positive weight");
    }
    double total = 0;
    for (const Option& o : opts) total += o.weight;
    double x = unit() * total;
    for (const Option& o : opts) {
      x -= o.weight;
      if (x <= 0) return o.f;
    }
    return opts.back().f;
  }

  PathPtr leaf_from(const PointPtr& pt) {
    std::vector<PathPtr> cands = {rho(pt)};
    for (const AtomDecl* a : atoms) {
      if (point_eq(normalize_point(a->source), pt))
        cands.push_back(atom(a->name, a->source, a->target));
      if (point_eq(normalize_point(a->target), pt))
        cands.push_back(sigma(atom(a->name, a->source, a->target)));
    }
    return cands[index(cands.size())];
  }

  PathPtr leaf_to(const PointPtr& pt) {
    std::vector<PathPtr> cands = {rho(pt)};
    for (const AtomDecl* a : atoms) {
      if (point_eq(normalize_point(a->target), pt))
        cands.push_back(atom(a->name, a->source, a->target));
      if (point_eq(normalize_point(a->source), pt))
        cands.push_back(sigma(atom(a->name, a->source, a->target)));
    }
    return cands[index(cands.size())];
  }

  // Second composition argument starting where `a` ends; reuses the
  // candidate when its endpoints fit, possibly reversed.
  PathPtr compose_repair(const PathPtr& a, const PathPtr& b0) {
    PointPtr t = tgt(a, env);
    Endpoints eb = endpoints(b0, env);
    if (point_eq(eb.first, t)) return b0;
    if (point_eq(eb.second, t)) return sigma(b0);
    return leaf_from(t);
  }

  // A child with pair-shaped endpoints, for the projection congruences.
  PathPtr pairish(int depth) {
    if (depth <= 0) return rho(ppair(point(), point()));
    switch (index(3)) {
      case 0: return pairpath(build(depth - 1), build(depth - 1));
      case 1: return rho(ppair(point(), point()));
      default: return sigma(pairish(depth - 1));
    }
  }

  PathPtr build(int depth) {
    switch (choose(depth)) {
      case Family::AtomLeaf: {
        const AtomDecl* a = atoms[index(atoms.size())];
        return atom(a->name, a->source, a->target);
      }
      case Family::RhoLeaf:
        return rho(point());
      case Family::EtaLeaf:
        return eta(point());
      case Family::HomLeaf: {
        const HomDecl* h = homs[index(homs.size())];
        return hom(h->name, h->f, h->g, point());
      }
      case Family::SigmaNode:
        return sigma(build(depth - 1));
      case Family::TauNode: {
        PathPtr a = build(depth - 1);
        PathPtr b = compose_repair(a, build(depth - 1));
        return tau(a, b);
      }
      case Family::MuFunNode:
        return mu(fun(), build(depth - 1));
      case Family::Mu1Node:
        return mu1(pairish(depth - 1));
      case Family::Mu2Node:
        return mu2(pairish(depth - 1));
      case Family::NuNode:
        return nu(build(depth - 1));
      case Family::XiNode:
        return xi(build(depth - 1));
      case Family::PairNode:
        return pairpath(build(depth - 1), build(depth - 1));
      case Family::SubLNode: {
        PathPtr m = build(depth - 1);
        PointPtr t = tgt(m, env);
        std::vector<PointPos> spots;
        PointPos at;
        point_positions(t, at, spots);
        const PointPos& pos = spots[index(spots.size())];
        PathPtr s = leaf_from(point_subterm(t, pos));
        return subL(m, pos, s);
      }
      case Family::SubRNode: {
        PathPtr m = build(depth - 1);
        PointPtr s0 = src(m, env);
        std::vector<PointPos> spots;
        PointPos at;
        point_positions(s0, at, spots);
        const PointPos& pos = spots[index(spots.size())];
        PathPtr s = leaf_to(point_subterm(s0, pos));
        return subR(s, pos, m);
      }
      case Family::ExtNode:
        return ext(build(depth - 1));
    }
    throw Error(ErrorKind::Internal, "random_term: unhandled family");
  }
};

// Generator for reflexivity-built terms. Anchored positions (under the right
// leg of a composition, or a requested base point) only use constructors
// that keep the point: mu is admitted there via syntactic un-application of
// the point, or with the identity map.
struct RhoGen {
  const Environment& env;
  bool include_ext;
  std::mt19937_64 rng;
  std::vector<PointPtr> pool;
  std::vector<FunPtr> funs;

  RhoGen(const Environment& e, bool with_ext, std::uint64_t seed)
      : env(e), include_ext(with_ext), rng(seed) {
    for (const std::string& n : env.points) pool.push_back(pvar(n));
    for (const auto& [n, decl] : env.atoms) {
      pool.push_back(normalize_point(decl.source));
      pool.push_back(normalize_point(decl.target));
    }
    for (const auto& [n, decl] : env.funs) {
      if (decl.kind == FunDeclKind::ProductMap)
        funs.push_back(fpairmap(fnamed(decl.left), fnamed(decl.right)));
      else
        funs.push_back(fnamed(n));
    }
    if (pool.empty()) {
      if (!env.funs.empty())
        for (int i = 0; i <= 2; ++i) pool.push_back(pnat(i));
      else
        pool.push_back(pstar());
    }
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(rng() % n); }

  PointPtr point() { return pool[index(pool.size())]; }

  // Function/argument pairs with f(q) equal to pt, found syntactically.
  std::vector<std::pair<FunPtr, PointPtr>> unapply(const PointPtr& pt) {
    std::vector<std::pair<FunPtr, PointPtr>> out;
    if (pt->kind == PointKind::App && pt->fun->kind == FunKind::Named &&
        env.has_fun(pt->fun->name))
      out.emplace_back(pt->fun, pt->a);
    if (pt->kind == PointKind::Nat && pt->nat > 0 && env.has_fun("succ"))
      out.emplace_back(fnamed("succ"), pnat(pt->nat - 1));
    return out;
  }

  // A loop-free choice among the unary wrappers.
  PathPtr wrap(int which, const PathPtr& p) {
    switch (which) {
      case 0: return sigma(p);
      case 1: return nu(p);
      case 2: return xi(p);
      default: return ext(p);
    }
  }

  PathPtr at(int depth, const PointPtr& pt) {
    int wraps = include_ext ? 4 : 3;
    int kinds = depth <= 0 ? 1 : 3 + wraps; // rho | tau, mu, wraps
    int k = static_cast<int>(index(static_cast<std::size_t>(kinds)));
    if (depth <= 0 || k == 0) return rho(pt);
    if (k == 1) return tau(at(depth - 1, pt), at(depth - 1, pt));
    if (k == 2) {
      auto inv = unapply(pt);
      if (!inv.empty()) {
        auto& [f, q] = inv[index(inv.size())];
        return mu(f, at(depth - 1, q));
      }
      return mu(fid(), at(depth - 1, pt));
    }
    return wrap(k - 3, at(depth - 1, pt));
  }

  PathPtr free(int depth) {
    int wraps = include_ext ? 4 : 3;
    int kinds = depth <= 0 ? 1 : 3 + wraps;
    int k = static_cast<int>(index(static_cast<std::size_t>(kinds)));
    if (depth <= 0 || k == 0) return rho(point());
    if (k == 1) {
      PathPtr a = free(depth - 1);
      return tau(a, at(depth - 1, tgt(a, env)));
    }
    if (k == 2 && !funs.empty())
      return mu(funs[index(funs.size())], free(depth - 1));
    if (k == 2) return mu(fid(), free(depth - 1));
    return wrap(k - 3, free(depth - 1));
  }
};

} // namespace

GenWeights full_weights() {
  GenWeights w;
  w.pairp = 0.6;
  w.subl = 0.5;
  w.subr = 0.5;
  w.hom = 0.6;
  w.eta = 0.3;
  w.ext = 0.3;
  return w;
}

PathPtr random_term(const Environment& env, int max_depth,
                    const GenWeights& weights, std::uint64_t seed) {
  Gen g(env, weights, seed);
  for (int attempt = 0; attempt < 20; ++attempt) {
    PathPtr t = g.build(max_depth);
    try {
      endpoints(t, env);
      return t;
    } catch (const Error&) {
      // Start over with the same stream; the draw order differs, so the
      // retry explores a different term.
    }
  }
  throw Error(ErrorKind::GenerationFailed,
              "could not generate a well-formed term after 20 attempts");
}

PathPtr random_term_sized(const Environment& env, int max_size,
                          const GenWeights& weights, std::uint64_t seed) {
  int depth = 4;
  for (int attempt = 0; attempt < 64; ++attempt) {
    PathPtr t = random_term(env, depth, weights,
                            seed + 0x9e3779b97f4a7c15ull * (attempt + 1));
    if (path_size(t) <= max_size) return t;
    if (attempt % 8 == 7 && depth > 2) --depth;
  }
  throw Error(ErrorKind::GenerationFailed,
              "could not generate a term of size <= " +
                  std::to_string(max_size));
}

PathPtr random_rho_term(const Environment& env, int max_depth, bool include_ext,
                        std::uint64_t seed, const PointPtr& at) {
  RhoGen g(env, include_ext, seed);
  if (at) return g.at(max_depth, normalize_point(at));
  return g.free(max_depth);
}

PathPtr random_circle_path(const Environment& env, int letters,
                           std::uint64_t seed) {
  const AtomDecl* loop = nullptr;
  for (const auto& [n, decl] : env.atoms)
    if (point_eq(normalize_point(decl.source), normalize_point(decl.target))) {
      loop = &decl;
      break;
    }
  if (!loop)
    throw Error(ErrorKind::GenerationFailed,
                "environment declares no loop atom");
  PointPtr base = normalize_point(loop->source);
  if (letters <= 0) return rho(base);

  std::mt19937_64 rng(seed);
  std::vector<PathPtr> word;
  for (int i = 0; i < letters; ++i) {
    switch (rng() % 3) {
      case 0: word.push_back(atom(loop->name, loop->source, loop->target)); break;
      case 1:
        word.push_back(sigma(atom(loop->name, loop->source, loop->target)));
        break;
      default: word.push_back(rho(base)); break;
    }
  }
  // Random association: repeatedly join two adjacent entries.
  while (word.size() > 1) {
    std::size_t k = static_cast<std::size_t>(rng() % (word.size() - 1));
    PathPtr joined = tau(word[k], word[k + 1]);
    word[k] = joined;
    word.erase(word.begin() + static_cast<std::ptrdiff_t>(k) + 1);
  }
  return word[0];
}

} // namespace pathrw
