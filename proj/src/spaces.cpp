#include "pathrw/spaces.hpp"

#include "pathrw/error.hpp"

#include <sstream>

namespace pathrw {

namespace {

// The designated loop atom of a circle-like environment: the first atom
// whose source and target coincide.
const AtomDecl& loop_atom(const Environment& env) {
  for (const auto& [n, decl] : env.atoms)
    if (point_eq(normalize_point(decl.source), normalize_point(decl.target)))
      return decl;
  throw Error(ErrorKind::NotCirclePath,
              "environment declares no loop atom");
}

PathPtr loop_letter(const AtomDecl& a) {
  return atom(a.name, a.source, a.target);
}

// A circle path may mention only the loop atom (congruence nodes are fine);
// homotopy and unit-type leaves are foreign to the circle language.
void check_circle_language(const PathPtr& p, const AtomDecl& loop) {
  switch (p->kind) {
    case PathKind::Atom:
      if (p->name != loop.name)
        throw Error(ErrorKind::NotCirclePath,
                    "foreign atom in circle path: " + p->name);
      return;
    case PathKind::Hom:
    case PathKind::Eta:
      throw Error(ErrorKind::NotCirclePath,
                  "foreign constructor in circle path: " + print_path(p));
    default:
      break;
  }
  for (int i = 0; i < child_count(p); ++i)
    check_circle_language(child(p, i), loop);
}

// Reads one letter of a normalized loop word: +1 for the loop atom, -1 for
// its inverse.
int comb_letter(const PathPtr& p, const AtomDecl& loop) {
  if (p->kind == PathKind::Atom && p->name == loop.name) return 1;
  if (p->kind == PathKind::Sigma && p->a->kind == PathKind::Atom &&
      p->a->name == loop.name)
    return -1;
  throw Error(ErrorKind::Internal,
              "unexpected letter in a normalized loop word: " + print_path(p));
}

} // namespace

PathPtr loop_power(long long n, const Environment& env) {
  const AtomDecl& loop = loop_atom(env);
  PointPtr base = normalize_point(loop.source);
  PathPtr acc = rho(base);
  for (long long i = 0; i < (n < 0 ? -n : n); ++i)
    acc = n > 0 ? tau(loop_letter(loop), acc)
                : tau(sigma(loop_letter(loop)), acc);
  return acc;
}

PathPtr circle_compose(const PathPtr& p, const PathPtr& q,
                       const Environment& env) {
  const AtomDecl& loop = loop_atom(env);
  check_circle_language(p, loop);
  check_circle_language(q, loop);
  return tau(q, p);
}

long long winding(const PathPtr& p, const EngineOptions& opt,
                  const Environment& env) {
  const AtomDecl& loop = loop_atom(env);
  PointPtr base = normalize_point(loop.source);
  check_circle_language(p, loop);
  Endpoints ep = endpoints(p, env);
  if (!point_eq(ep.first, base) || !point_eq(ep.second, base))
    throw Error(ErrorKind::NotCirclePath,
                "winding needs a loop at " + print_point(base) + ", got " +
                    print_point(ep.first) + " = " + print_point(ep.second));

  PathPtr nf = normalize(p, opt, env).result;
  if (nf->kind == PathKind::Rho) return 0;

  long long sum = 0;
  int sign_seen = 0;
  PathPtr cur = nf;
  while (cur->kind == PathKind::Tau) {
    int s = comb_letter(cur->a, loop);
    if (sign_seen != 0 && s != sign_seen)
      throw Error(ErrorKind::Internal,
                  "mixed-sign loop word survived normalization: " +
                      print_path(nf));
    sign_seen = s;
    sum += s;
    cur = cur->b;
  }
  int s = comb_letter(cur, loop);
  if (sign_seen != 0 && s != sign_seen)
    throw Error(ErrorKind::Internal,
                "mixed-sign loop word survived normalization: " +
                    print_path(nf));
  return sum + s;
}

bool code_eq(const CodeValue& a, const CodeValue& b) {
  return a.base == b.base && a.recur == b.recur;
}

std::string print_code(const CodeValue& c) {
  std::string out;
  for (int i = 0; i < c.recur; ++i) out += "Recur(";
  out += c.base == CodeValue::Base::Unit ? "Unit" : "Empty";
  for (int i = 0; i < c.recur; ++i) out += ")";
  return out;
}

CodeValue nat_code(long long m, long long n) {
  CodeValue c;
  c.base = m == n ? CodeValue::Base::Unit : CodeValue::Base::Empty;
  c.recur = static_cast<int>(m < n ? m : n);
  return c;
}

CodeValue nat_r(long long) { return CodeValue{CodeValue::Base::Unit, 0}; }

PathPtr nat_decode(long long m, long long n, const CodeValue& c) {
  if (m != n)
    throw Error(ErrorKind::EmptyCode,
                "code(" + std::to_string(m) + "," + std::to_string(n) +
                    ") is uninhabited");
  if (c.base != CodeValue::Base::Unit)
    throw Error(ErrorKind::EmptyCode, "the code value flattens to Empty");
  PathPtr acc = rho(pnat(0));
  for (long long i = 0; i < m; ++i) acc = mu(fnamed("succ"), acc);
  return acc;
}

namespace {

void check_nat_language(const PathPtr& p) {
  switch (p->kind) {
    case PathKind::Atom:
    case PathKind::Hom:
    case PathKind::Eta:
      throw Error(ErrorKind::NotNatPath,
                  "foreign constructor in a naturals path: " + print_path(p));
    default:
      break;
  }
  for (int i = 0; i < child_count(p); ++i) check_nat_language(child(p, i));
}

} // namespace

CodeValue nat_encode(long long m, long long n, const PathPtr& p,
                     const EngineOptions& opt, const Environment& env) {
  check_nat_language(p);
  Endpoints ep = endpoints(p, env);
  if (!point_eq(ep.first, pnat(m)) || !point_eq(ep.second, pnat(n)))
    throw Error(ErrorKind::EndpointMismatch,
                "encode(" + std::to_string(m) + "," + std::to_string(n) +
                    ") given a path " + print_point(ep.first) + " = " +
                    print_point(ep.second));
  PathPtr nf = normalize(p, opt, env).result;
  if (nf->kind != PathKind::Rho)
    throw Error(ErrorKind::NotNatPath,
                "a naturals path must normalize to a reflexivity, got " +
                    print_path(nf));
  // Transport of r(m) along a reflexivity is the identity, so the result is
  // the canonical inhabitant of code(m,n).
  return nat_code(m, n);
}

NatDecision nat_dec_eq(long long m, long long n) {
  NatDecision d;
  if (m == n) {
    d.path = nat_decode(m, n, nat_code(m, n));
    return d;
  }
  long long shared = m < n ? m : n;
  long long a = m - shared, b = n - shared;
  d.refutation = "encode(" + std::to_string(a) + "," + std::to_string(b) +
                 ") : not (" + std::to_string(a) + " = " + std::to_string(b) +
                 ")";
  return d;
}

CoprodClass coprod_classify(const PathPtr& p, const EngineOptions& opt,
                            const Environment& env) {
  Endpoints ep = endpoints(p, env);
  auto constructor_head = [&](const PointPtr& pt) -> std::string {
    if (pt->kind == PointKind::App && pt->fun->kind == FunKind::Named &&
        env.has_fun(pt->fun->name) &&
        env.funs.at(pt->fun->name).kind == FunDeclKind::Constructor)
      return pt->fun->name;
    return "";
  };
  std::string hs = constructor_head(ep.first);
  std::string ht = constructor_head(ep.second);
  if (hs.empty() || ht.empty())
    throw Error(ErrorKind::NotCoprodPath,
                "endpoints are not constructor-headed: " +
                    print_point(ep.first) + " = " + print_point(ep.second));
  CoprodClass out;
  if (hs != ht) {
    out.tag = CoprodClass::Tag::Impossible;
    return out;
  }
  if (hs != "inl" && hs != "inr")
    throw Error(ErrorKind::NotCoprodPath,
                "constructor " + hs + " is not a coproduct injection");
  out.tag = hs == "inl" ? CoprodClass::Tag::Left : CoprodClass::Tag::Right;

  PathPtr nf = normalize(p, opt, env).result;
  if (nf->kind == PathKind::MuF) {
    FunPtr f = normalize_fun(nf->fun);
    if (f->kind == FunKind::Named && f->name == hs) {
      out.inner = nf->a;
      return out;
    }
  }
  if (nf->kind == PathKind::Rho) {
    PointPtr x = normalize_point(nf->at);
    if (x->kind == PointKind::App) {
      out.inner = rho(x->a);
      return out;
    }
  }
  throw Error(ErrorKind::NotCoprodPath,
              "normal form is not a constructor image: " + print_path(nf));
}

PathPtr unit_connect(const PointPtr& x, const PointPtr& y) {
  return tau(sigma(eta(x)), eta(y));
}

KReport axiom_k_sample(KSpace space, const PointPtr& at, int samples,
                       std::uint64_t seed, const EngineOptions& opt,
                       const Environment& env) {
  KReport report;
  report.total = samples;
  for (int i = 0; i < samples; ++i) {
    std::uint64_t s = seed + 0x9e3779b97f4a7c15ull * (i + 1);
    PathPtr p = space == KSpace::Nat
                    ? random_rho_term(env, 5, opt.include_ext, s, at)
                    : random_circle_path(env, 3 + i % 5, s);
    PathPtr nf = normalize(p, opt, env).result;
    if (nf->kind == PathKind::Rho)
      ++report.collapsed;
    else if (!report.witness)
      report.witness = nf;
  }
  return report;
}

std::string print_k_report(const KReport& r) {
  std::ostringstream out;
  out << r.collapsed << "/" << r.total << " loops collapsed to rho";
  if (r.witness)
    out << "; witness normal form: " << print_path(r.witness);
  else
    out << "; no non-reflexivity loop found";
  return out.str();
}

} // namespace pathrw
