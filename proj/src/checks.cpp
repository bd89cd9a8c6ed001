#include "pathrw/checks.hpp"

#include "pathrw/error.hpp"
#include "pathrw/parse.hpp"
#include "pathrw/spaces.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

namespace pathrw {

namespace {

constexpr std::size_t kMaxShown = 10; // counterexamples kept in the report

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ull * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

// Runs body(i) for i in [0,n); body returns "" on pass and a description on
// failure. Exceptions become failures. The slot vector keeps index order, so
// serial and parallel runs aggregate identically.
std::vector<std::string> run_indexed(int n, RunMode mode,
                                     const std::function<std::string(int)>& body) {
  std::vector<std::string> slot(static_cast<std::size_t>(n));
  auto guarded = [&](int i) {
    try {
      slot[static_cast<std::size_t>(i)] = body(i);
    } catch (const Error& e) {
      slot[static_cast<std::size_t>(i)] =
          std::string("error (") + error_kind_name(e.kind()) + "): " + e.what();
    } catch (const std::exception& e) {
      slot[static_cast<std::size_t>(i)] = std::string("error: ") + e.what();
    }
  };
  if (mode == RunMode::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (int i = 0; i < n; ++i) guarded(i);
  } else {
    for (int i = 0; i < n; ++i) guarded(i);
  }
  return slot;
}

void fold(CheckResult& out, const std::vector<std::string>& slot,
          const char* label) {
  out.total += static_cast<int>(slot.size());
  for (std::size_t i = 0; i < slot.size(); ++i) {
    if (slot[i].empty()) continue;
    ++out.failures;
    if (out.counterexamples.size() < kMaxShown)
      out.counterexamples.push_back(std::string(label) + " " + std::to_string(i) +
                                    ": " + slot[i]);
  }
}

// A random composite starting at `from`: atom steps (possibly inverted)
// joined with tau, or rho(from) when no atom leaves `from`.
PathPtr walk_from(const Environment& env, const PointPtr& from, int steps,
                  std::mt19937_64& rng) {
  struct Step {
    PathPtr path;
    PointPtr s, t;
  };
  std::vector<Step> all;
  for (const auto& [n, d] : env.atoms) {
    PathPtr p = atom(d.name, d.source, d.target);
    PointPtr s = normalize_point(d.source);
    PointPtr t = normalize_point(d.target);
    all.push_back({p, s, t});
    all.push_back({sigma(p), t, s});
  }
  PointPtr cur = normalize_point(from);
  PathPtr acc;
  for (int i = 0; i < steps; ++i) {
    std::vector<const Step*> fit;
    for (const auto& st : all)
      if (point_eq(st.s, cur)) fit.push_back(&st);
    if (fit.empty()) break;
    const Step* pick = fit[rng() % fit.size()];
    acc = acc ? tau(acc, pick->path) : pick->path;
    cur = pick->t;
  }
  return acc ? acc : rho(cur);
}

const char* kCheckEnvText = R"(# fidelity and sampling environment
point x
point y
point z
point w
atom a : x = y
atom b : y = z
atom c : z = w
atom k : y = x
atom l : x = x
atom e : <x,y> = <y,z>
atom e2 : <x,x> = <x,z>
atom e3 : <z,z> = <w,w>
atom e4 : <y,z> = w
fun f : opaque
fun g : opaque
fun h : opaque
fun succ : constructor
fun pm : pairmap(f,g)
hom H : f ~ g
)";

const char* kSamplingEnvText = R"(# confluence-sampling environment
point x
point y
point z
point w
atom a : x = y
atom b : y = z
atom c : z = w
atom k : y = x
atom l : x = x
atom e : <x,y> = <y,z>
atom e3 : <z,z> = <w,w>
fun f : opaque
fun g : opaque
fun h : opaque
fun succ : constructor
)";

} // namespace

const Environment& check_env() {
  static const Environment env = parse_env(kCheckEnvText);
  return env;
}

const Environment& sampling_env() {
  static const Environment env = parse_env(kSamplingEnvText);
  return env;
}

const std::vector<RuleCase>& rule_fidelity_cases() {
  static const std::vector<RuleCase> cases = {
      {"sr", "sigma(rho(x))", "rho(x)"},
      {"ss", "sigma(sigma(a))", "a"},
      {"tr", "tau(mu[f](a),mu[f](sigma(a)))", "mu[f](rho(x))"},
      {"tsr", "tau(sigma(a),a)", "rho(y)"},
      {"trr", "tau(a,rho(y))", "a"},
      {"tlr", "tau(rho(x),a)", "a"},
      {"slr", "subL(e,[0],rho(y))", "e"},
      {"srr", "subR(rho(x),[0],e)", "e"},
      {"sls", "subL(subL(e,[0],b),[0],sigma(b))", "e"},
      {"slss", "subL(subL(e,[1],sigma(b)),[1],b)", "e"},
      {"srs", "subR(a,[0],subR(sigma(a),[0],e))", "e"},
      {"srrr", "subR(sigma(a),[1],subR(a,[1],e))", "e"},
      {"mx2l1", "mu1(xi1(a))", "a"},
      {"mx2l2", "mu1(pair(a,b))", "a"},
      {"mx2r1", "mu2(pair(a,b))", "b"},
      {"mx2r2", "mu2(xi2(b))", "b"},
      {"mx3l", "muE(xi1(a),b,c)", "b"},
      {"mx3r", "muE(xi2(a),b,c)", "c"},
      {"mxl", "nu(xi(a))", "a"},
      {"mxr", "muE(xi2(a),b)", "b"},
      {"mx", "pair(mu1(e),mu2(e))", "e"},
      {"mxx", "muE(a,xi1(b),xi2(c))", "a"},
      {"xmr", "xi(nu(a))", "a"},
      {"mx1r", "muE(b,xi2(a))", "b"},
      {"stss", "sigma(tau(a,b))", "tau(sigma(b),sigma(a))"},
      {"ssbl", "sigma(subL(e,[0],b))", "subR(sigma(b),[0],sigma(e))"},
      {"ssbr", "sigma(subR(k,[0],e))", "subL(sigma(e),[0],sigma(k))"},
      {"sx", "sigma(xi(a))", "xi(sigma(a))"},
      {"sxss", "sigma(pair(a,b))", "pair(sigma(a),sigma(b))"},
      {"sm", "sigma(mu[f](a))", "mu[f](sigma(a))"},
      {"smss", "sigma(muE(a,b))", "muE(sigma(a),sigma(b))"},
      {"smsss", "sigma(muE(a,b,c))", "muE(sigma(a),sigma(b),sigma(c))"},
      {"tsbll", "tau(e,subL(rho(<y,z>),[0],b))", "subL(e,[0],b)"},
      {"tsbrl", "tau(e2,subR(a,[0],rho(<y,z>)))", "subL(e2,[0],a)"},
      {"tsblr", "tau(subL(e,[0],b),e3)", "tau(e,subR(b,[0],e3))"},
      {"tsbrr", "tau(subR(a,[1],e),e4)", "subR(a,[1],tau(e,e4))"},
      {"tt", "tau(tau(a,b),c)", "tau(a,tau(b,c))"},
      {"tts", "tau(a,tau(sigma(a),a))", "a"},
      {"tst", "tau(sigma(a),tau(a,b))", "b"},
      {"tf", "tau(mu[f](a),mu[f](b))", "mu[f](tau(a,b))"},
      {"cf", "mu[g](mu[f](a))", "mu[comp(g,f)](a)"},
      {"ci", "mu[id](a)", "a"},
      {"hp", "tau(H[H](x),mu[g](a))", "tau(mu[f](a),H[H](y))"},
      {"mxc", "mu[pairmap(f,g)](pair(a,b))", "pair(mu[f](a),mu[g](b))"},
      {"mxp", "mu[f](rho(x))", "rho(f(x))"},
      {"nxp", "nu(rho(x))", "rho(x)"},
      {"xxp", "xi(rho(x))", "rho(x)"},
      {"extl", "nu(ext(a))", "a"},
      {"extr", "ext(nu(a))", "a"},
      {"exp", "ext(rho(x))", "rho(x)"},
  };
  return cases;
}

CheckResult check_rules() {
  Timer timer;
  CheckResult out;
  out.suite = "rules";
  const Environment& env = check_env();
  const auto& cases = rule_fidelity_cases();
  const auto& table = catalog(true);

  // One slot per catalog rule: it must have exactly one fidelity case, and
  // that case must contract at the root to the expected term.
  for (const RewriteRule& rule : table) {
    ++out.total;
    std::string fail;
    const RuleCase* chosen = nullptr;
    int uses = 0;
    for (const auto& c : cases)
      if (c.rule == rule.name) {
        chosen = &c;
        ++uses;
      }
    if (uses != 1) {
      fail = "has " + std::to_string(uses) + " fidelity cases (want 1)";
    } else {
      const RuleCase& c = *chosen;
      try {
        PathPtr input = parse_path(c.input, env);
        PathPtr expect = parse_path(c.expect, env);
        auto m = match_at_root(rule, input, env);
        if (!m) {
          fail = "no match at root of " + c.input;
        } else if (!path_eq(m->redex, input)) {
          fail = "redex is " + print_path(m->redex) + ", not the whole input";
        } else {
          PathPtr result = apply(rule, *m, env);
          if (path_eq(result, input)) {
            fail = "rewrite returned the input unchanged";
          } else if (!path_eq(normalize_points_in_path(result),
                              normalize_points_in_path(expect))) {
            fail = c.input + " contracted to " + print_path(result) +
                   ", expected " + c.expect;
          }
        }
      } catch (const Error& e) {
        fail =
            std::string("error (") + error_kind_name(e.kind()) + "): " + e.what();
      }
    }
    if (!fail.empty()) {
      ++out.failures;
      if (out.counterexamples.size() < kMaxShown * 5)
        out.counterexamples.push_back(rule.name + ": " + fail);
    }
  }

  out.seconds = timer.seconds();
  return out;
}

CheckResult check_groupoid(const CheckOptions& opt) {
  Timer timer;
  CheckResult out;
  out.suite = "groupoid";
  const Environment& env = check_env();
  EngineOptions eopt{opt.budget, true};
  int n = opt.samples > 0 ? opt.samples : 1000;

  // The unit, inverse, and involution laws contract at the root with rules
  // 2-6, which outrank every other root match, so they are decided by
  // normal-form comparison for any strict term — substitution heads
  // included. Associativity contracts with rule 37, which a substitution
  // head at the left factor outranks (rules 35/36 migrate the substitution
  // to a different anchor than unit cancellation leaves it), so that law is
  // sampled over substitution-free terms, where normal forms are unique.
  GenWeights aw = full_weights();
  aw.subl = 0.0;
  aw.subr = 0.0;

  auto body = [&](int i) -> std::string {
    std::uint64_t s = mix(opt.seed, static_cast<std::uint64_t>(i));
    PathPtr p = random_term(env, 5, full_weights(), s);
    auto ep = endpoints(p, env);
    PathPtr rx = rho(ep.first);
    PathPtr ry = rho(ep.second);

    auto check = [&](const char* law, const PathPtr& sub, const PathPtr& lhs,
                     const PathPtr& rhs) -> std::string {
      if (rw_equal(lhs, rhs, eopt, env)) return "";
      return std::string(law) + " failed for p = " + print_path(sub);
    };
    std::string fail;
    if (fail.empty()) fail = check("right unit tau(p,rho)", p, tau(p, ry), p);
    if (fail.empty()) fail = check("left unit tau(rho,p)", p, tau(rx, p), p);
    if (fail.empty())
      fail = check("right inverse tau(p,sigma p)", p, tau(p, sigma(p)), rx);
    if (fail.empty())
      fail = check("left inverse tau(sigma p,p)", p, tau(sigma(p), p), ry);
    if (fail.empty())
      fail = check("involution sigma(sigma p)", p, sigma(sigma(p)), p);
    if (fail.empty()) {
      PathPtr pa = random_term(env, 5, aw, mix(s, 7));
      auto epa = endpoints(pa, env);
      std::mt19937_64 rng(mix(s, 99));
      PathPtr q =
          walk_from(env, epa.second, 1 + static_cast<int>(rng() % 3), rng);
      PathPtr r = walk_from(env, tgt(q, env), 1 + static_cast<int>(rng() % 3), rng);
      fail = check("associativity", pa, tau(tau(pa, q), r), tau(pa, tau(q, r)));
    }
    return fail;
  };

  fold(out, run_indexed(n, opt.mode, body), "sample");
  out.seconds = timer.seconds();
  return out;
}

CheckResult check_rho(const CheckOptions& opt) {
  Timer timer;
  CheckResult out;
  out.suite = "rho";
  const Environment& env = check_env();
  EngineOptions eopt{opt.budget, opt.include_ext};
  int n = opt.samples > 0 ? opt.samples : 1000;

  auto body = [&](int i) -> std::string {
    std::uint64_t s = mix(opt.seed, static_cast<std::uint64_t>(i));
    PathPtr p = random_rho_term(env, 8, opt.include_ext, s);
    if (check_rho_collapse(p, eopt, env)) return "";
    Trace t = normalize(p, eopt, env);
    return print_path(p) + " normalized to " + print_path(t.result) +
           ", not a reflexivity";
  };

  fold(out, run_indexed(n, opt.mode, body), "sample");
  out.seconds = timer.seconds();
  return out;
}

CheckResult check_confluence(const CheckOptions& opt) {
  Timer timer;
  CheckResult out;
  out.suite = "confluence";
  const Environment& env = sampling_env();
  EngineOptions eopt{opt.budget, opt.include_ext};
  int n = opt.samples > 0 ? opt.samples : 10000;

  auto body = [&](int i) -> std::string {
    std::uint64_t s = mix(opt.seed, static_cast<std::uint64_t>(i));
    PathPtr p = random_term_sized(env, 10, GenWeights{}, s);
    Trace t = normalize(p, eopt, env); // BudgetError -> failure via the guard
    (void)t;
    ConfluenceReport rep = check_local_confluence(p, eopt, env);
    if (rep.confluent) return "";
    std::ostringstream os;
    os << print_path(p) << " reaches " << rep.normal_forms.size()
       << " distinct normal forms:";
    for (const PathPtr& nf : rep.normal_forms) os << " " << print_path(nf) << " ;";
    return os.str();
  };

  std::vector<std::string> slot = run_indexed(n, opt.mode, body);

  if (!opt.persist_path.empty()) {
    bool any = std::any_of(slot.begin(), slot.end(),
                           [](const std::string& s) { return !s.empty(); });
    if (any) {
      std::ofstream f(opt.persist_path);
      f << "# local-confluence counterexamples\n";
      f << "# seed " << opt.seed << " samples " << n << " max_size 10 budget "
        << opt.budget << "\n";
      for (std::size_t i = 0; i < slot.size(); ++i)
        if (!slot[i].empty()) f << "sample " << i << ": " << slot[i] << "\n";
    }
  }

  fold(out, slot, "sample");
  out.seconds = timer.seconds();
  return out;
}

CheckResult check_circle(const CheckOptions& opt) {
  Timer timer;
  CheckResult out;
  out.suite = "circle";
  const Environment env = circle_env();
  EngineOptions eopt{opt.budget, false};
  int n = opt.samples > 0 ? opt.samples : 1000;

  // winding(loop_power(k)) == k across a symmetric range.
  auto power_body = [&](int i) -> std::string {
    long long k = static_cast<long long>(i) - 50;
    long long got = winding(loop_power(k, env), eopt, env);
    if (got == k) return "";
    return "winding(loop_power(" + std::to_string(k) + ")) = " +
           std::to_string(got);
  };
  fold(out, run_indexed(101, opt.mode, power_body), "power");

  // The group structure: winding is a homomorphism, inversion negates, and
  // the identity contributes nothing.
  auto group_body = [&](int i) -> std::string {
    std::uint64_t s = mix(opt.seed, static_cast<std::uint64_t>(i));
    PathPtr p = random_circle_path(env, 2 + i % 7, s);
    PathPtr q = random_circle_path(env, 2 + (i / 2) % 7, mix(s, 7));
    long long wp = winding(p, eopt, env);
    long long wq = winding(q, eopt, env);
    long long wc = winding(circle_compose(p, q, env), eopt, env);
    if (wc != wp + wq)
      return "winding(" + print_path(p) + " . " + print_path(q) + ") = " +
             std::to_string(wc) + ", want " + std::to_string(wp + wq);
    if (winding(sigma(p), eopt, env) != -wp)
      return "winding(sigma(" + print_path(p) + ")) != " + std::to_string(-wp);
    if (winding(circle_compose(p, loop_power(0, env), env), eopt, env) != wp)
      return "composing with loop^0 changed the winding of " + print_path(p);
    return "";
  };
  fold(out, run_indexed(n, opt.mode, group_body), "sample");

  out.seconds = timer.seconds();
  return out;
}

CheckResult check_nat(const CheckOptions& opt) {
  Timer timer;
  CheckResult out;
  out.suite = "nat";
  const Environment env = nat_env();
  EngineOptions eopt{opt.budget, false};
  const long long maxn = 30;

  // Diagonal: decode is a rho-collapsing path and encode round-trips it.
  auto diag_body = [&](int i) -> std::string {
    long long m = i;
    CodeValue code = nat_code(m, m);
    PathPtr p = nat_decode(m, m, code);
    if (!check_rho_collapse(p, eopt, env))
      return "decode(" + std::to_string(m) + "," + std::to_string(m) +
             ") does not normalize to a reflexivity";
    auto ep = endpoints(p, env);
    if (!point_eq(ep.first, pnat(static_cast<std::uint64_t>(m))) ||
        !point_eq(ep.second, pnat(static_cast<std::uint64_t>(m))))
      return "decode(" + std::to_string(m) + ") has endpoints " +
             print_point(ep.first) + " = " + print_point(ep.second);
    CodeValue back = nat_encode(m, m, p, eopt, env);
    if (!code_eq(back, code))
      return "encode(decode(" + std::to_string(m) + ")) = " + print_code(back) +
             ", want " + print_code(code);
    if (!code_eq(nat_r(m), CodeValue{CodeValue::Base::Unit, 0}))
      return "r(" + std::to_string(m) + ") does not flatten to Unit";
    return "";
  };
  fold(out, run_indexed(static_cast<int>(maxn) + 1, opt.mode, diag_body), "n");

  // Decidable equality over the full grid.
  auto grid_body = [&](int i) -> std::string {
    long long m = i / (maxn + 1);
    long long nn = i % (maxn + 1);
    NatDecision d = nat_dec_eq(m, nn);
    std::string label =
        "dec_eq(" + std::to_string(m) + "," + std::to_string(nn) + ")";
    if (m == nn) {
      if (!d.path) return label + " refuted equal numerals: " + d.refutation;
      if (!check_rho_collapse(*d.path, eopt, env))
        return label + " witness does not collapse to a reflexivity";
      auto ep = endpoints(*d.path, env);
      if (!point_eq(ep.first, pnat(static_cast<std::uint64_t>(m))) ||
          !point_eq(ep.second, pnat(static_cast<std::uint64_t>(nn))))
        return label + " witness has wrong endpoints";
    } else {
      if (d.path) return label + " produced a path between distinct numerals";
      if (d.refutation.empty()) return label + " gave no refutation";
    }
    return "";
  };
  fold(out, run_indexed(static_cast<int>((maxn + 1) * (maxn + 1)), opt.mode,
                        grid_body),
       "pair");

  out.seconds = timer.seconds();
  return out;
}

CheckResult check_functorial(const CheckOptions& opt) {
  Timer timer;
  CheckResult out;
  out.suite = "functorial";
  const Environment& env = check_env();
  EngineOptions eopt{opt.budget, true};
  int n = opt.samples > 0 ? opt.samples : 200;

  auto body = [&](int i) -> std::string {
    std::uint64_t s = mix(opt.seed, static_cast<std::uint64_t>(i));
    PathPtr p = random_term(env, 4, full_weights(), s);
    std::mt19937_64 rng(mix(s, 5));
    std::vector<FunPtr> funs = {fnamed("f"),
                                fnamed("g"),
                                fnamed("h"),
                                fcomp(fnamed("f"), fnamed("g")),
                                fcomp(fnamed("g"), fnamed("h")),
                                fpairmap(fnamed("f"), fnamed("g"))};
    FunPtr F = funs[rng() % funs.size()];
    FunPtr G = funs[rng() % funs.size()];
    PathPtr q = walk_from(env, tgt(p, env), 1 + static_cast<int>(rng() % 3), rng);

    if (!rw_equal(mu(F, tau(p, q)), tau(mu(F, p), mu(F, q)), eopt, env))
      return "mu[F](tau(p,q)) != tau(mu[F](p),mu[F](q)) for p = " + print_path(p) +
             ", q = " + print_path(q) + ", F = " + print_fun(F);
    if (!rw_equal(sigma(mu(F, p)), mu(F, sigma(p)), eopt, env))
      return "sigma(mu[F](p)) != mu[F](sigma(p)) for p = " + print_path(p) +
             ", F = " + print_fun(F);
    if (!rw_equal(mu(G, mu(F, p)), mu(fcomp(G, F), p), eopt, env))
      return "mu[G](mu[F](p)) != mu[comp(G,F)](p) for p = " + print_path(p) +
             ", F = " + print_fun(F) + ", G = " + print_fun(G);
    if (!rw_equal(mu(fid(), p), p, eopt, env))
      return "mu[id](p) != p for p = " + print_path(p);
    return "";
  };

  fold(out, run_indexed(n, opt.mode, body), "sample");
  out.seconds = timer.seconds();
  return out;
}

CheckResult check_naturality(const CheckOptions& opt) {
  Timer timer;
  CheckResult out;
  out.suite = "naturality";
  const Environment& env = check_env();
  EngineOptions eopt{opt.budget, true};
  int n = opt.samples > 0 ? opt.samples : 200;
  const HomDecl& H = env.homs.at("H");

  auto body = [&](int i) -> std::string {
    std::uint64_t s = mix(opt.seed, static_cast<std::uint64_t>(i));
    PathPtr p = random_term(env, 4, GenWeights{}, s);
    auto ep = endpoints(p, env);
    PathPtr lhs = tau(hom(H.name, H.f, H.g, ep.first), mu(H.g, p));
    PathPtr rhs = tau(mu(H.f, p), hom(H.name, H.f, H.g, ep.second));
    if (!rw_equal(lhs, rhs, eopt, env))
      return "naturality square failed for p = " + print_path(p);
    return "";
  };

  fold(out, run_indexed(n, opt.mode, body), "sample");
  out.seconds = timer.seconds();
  return out;
}

CheckResult check_axiomk(const CheckOptions& opt) {
  Timer timer;
  CheckResult out;
  out.suite = "axiomk";
  int n = opt.samples > 0 ? opt.samples : 200;
  EngineOptions eopt{opt.budget, opt.include_ext};

  // Naturals: every sampled loop collapses to a reflexivity.
  Environment nat = nat_env();
  KReport kn = axiom_k_sample(KSpace::Nat, pnat(3), n, opt.seed, eopt, nat);
  out.total += kn.total;
  out.failures += kn.total - kn.collapsed;
  if (kn.witness && out.counterexamples.size() < kMaxShown)
    out.counterexamples.push_back("naturals loop survived: " +
                                  print_path(kn.witness));

  // Circle: some sampled loop must survive (the loop atom generates Z).
  Environment circ = circle_env();
  KReport kc =
      axiom_k_sample(KSpace::Circle, pvar("base"), n, mix(opt.seed, 2), eopt, circ);
  ++out.total;
  if (!kc.witness) {
    ++out.failures;
    out.counterexamples.push_back(
        "no circle loop survived normalization in " + std::to_string(kc.total) +
        " samples — the loop space looks collapsed");
  }

  out.seconds = timer.seconds();
  return out;
}

const std::vector<std::string>& check_suite_names() {
  static const std::vector<std::string> names = {
      "rules",  "groupoid",   "rho",        "confluence", "circle",
      "nat",    "functorial", "naturality", "axiomk"};
  return names;
}

CheckResult run_check(const std::string& suite, const CheckOptions& opt) {
  if (suite == "rules") return check_rules();
  if (suite == "groupoid") return check_groupoid(opt);
  if (suite == "rho") return check_rho(opt);
  if (suite == "confluence") return check_confluence(opt);
  if (suite == "circle") return check_circle(opt);
  if (suite == "nat") return check_nat(opt);
  if (suite == "functorial") return check_functorial(opt);
  if (suite == "naturality") return check_naturality(opt);
  if (suite == "axiomk") return check_axiomk(opt);
  throw Error(ErrorKind::Parse, "unknown check suite '" + suite + "'");
}

std::string print_check(const CheckResult& r) {
  std::ostringstream os;
  os << "suite " << r.suite << ": " << (r.total - r.failures) << "/" << r.total
     << " pass";
  os.setf(std::ios::fixed);
  os.precision(2);
  os << " (" << r.seconds << " s)";
  if (!r.passed()) {
    for (const auto& c : r.counterexamples) os << "\n  " << c;
    if (static_cast<std::size_t>(r.failures) > r.counterexamples.size())
      os << "\n  ... and "
         << (r.failures - static_cast<int>(r.counterexamples.size())) << " more";
  }
  return os.str();
}

} // namespace pathrw
