#include "pathrw/env.hpp"

#include "pathrw/error.hpp"
#include "pathrw/parse.hpp"

#include <fstream>
#include <sstream>

namespace pathrw {

Environment circle_env() {
  Environment env;
  env.points.push_back("base");
  env.atoms["loop"] = AtomDecl{"loop", pvar("base"), pvar("base")};
  return env;
}

Environment nat_env() {
  Environment env;
  env.funs["succ"] = FunDecl{"succ", FunDeclKind::Constructor, "", ""};
  return env;
}

Environment coprod_env() {
  Environment env;
  env.points = {"a", "a2", "b", "b2"};
  env.funs["inl"] = FunDecl{"inl", FunDeclKind::Constructor, "", ""};
  env.funs["inr"] = FunDecl{"inr", FunDeclKind::Constructor, "", ""};
  env.atoms["p"] = AtomDecl{"p", pvar("a"), pvar("a2")};
  env.atoms["q"] = AtomDecl{"q", pvar("b"), pvar("b2")};
  return env;
}

Environment unit_env() {
  Environment env;
  env.points = {"u", "v"};
  return env;
}

namespace {

// Splits "lhs = rhs" around the first '='.
std::pair<std::string, std::string> split_eq(const std::string& s, int line) {
  auto k = s.find('=');
  if (k == std::string::npos)
    throw Error(ErrorKind::Parse,
                "line " + std::to_string(line) + ": expected 'source = target'");
  return {s.substr(0, k), s.substr(k + 1)};
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

} // namespace

Environment parse_env(const std::string& text) {
  Environment env;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::istringstream ls(line);
    std::string kw, name;
    ls >> kw >> name;
    if (kw == "point") {
      if (name.empty())
        throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) +
                                          ": expected 'point NAME'");
      env.points.push_back(name);
      continue;
    }

    std::string colon;
    ls >> colon;
    std::string rest;
    std::getline(ls, rest);
    rest = trim(rest);
    if (name.empty() || colon != ":")
      throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) +
                                        ": expected '" + kw + " NAME : ...'");

    if (kw == "atom") {
      auto [lhs, rhs] = split_eq(rest, lineno);
      env.atoms[name] =
          AtomDecl{name, parse_point(trim(lhs)), parse_point(trim(rhs))};
    } else if (kw == "fun") {
      if (rest == "opaque") {
        env.funs[name] = FunDecl{name, FunDeclKind::Opaque, "", ""};
      } else if (rest == "constructor") {
        env.funs[name] = FunDecl{name, FunDeclKind::Constructor, "", ""};
      } else if (rest.rfind("pairmap", 0) == 0) {
        FunPtr f = parse_fun(rest);
        if (f->kind != FunKind::PairMap || f->a->kind != FunKind::Named ||
            f->b->kind != FunKind::Named)
          throw Error(ErrorKind::Parse,
                      "line " + std::to_string(lineno) +
                          ": expected 'fun NAME : pairmap(g,h)' with named components");
        env.funs[name] =
            FunDecl{name, FunDeclKind::ProductMap, f->a->name, f->b->name};
      } else {
        throw Error(ErrorKind::Parse,
                    "line " + std::to_string(lineno) +
                        ": unknown function kind '" + rest + "'");
      }
    } else if (kw == "hom") {
      auto k = rest.find('~');
      if (k == std::string::npos)
        throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) +
                                          ": expected 'hom NAME : f ~ g'");
      env.homs[name] = HomDecl{name, parse_fun(trim(rest.substr(0, k))),
                               parse_fun(trim(rest.substr(k + 1)))};
    } else {
      throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) +
                                        ": unknown declaration '" + kw + "'");
    }
  }
  return env;
}

Environment load_env_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::Parse, "cannot open environment file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_env(ss.str());
}

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::UnknownAtom: return "unknown atom";
    case ErrorKind::LooseTerm: return "loose term";
    case ErrorKind::EndpointMismatch: return "endpoint mismatch";
    case ErrorKind::BadPosition: return "bad position";
    case ErrorKind::BudgetExceeded: return "budget exceeded";
    case ErrorKind::IllFormedResult: return "ill-formed result";
    case ErrorKind::NotCirclePath: return "not a circle path";
    case ErrorKind::NotNatPath: return "not a naturals path";
    case ErrorKind::NotCoprodPath: return "not a coproduct path";
    case ErrorKind::EmptyCode: return "empty code";
    case ErrorKind::GenerationFailed: return "generation failed";
    case ErrorKind::Internal: return "internal error";
  }
  return "error";
}

} // namespace pathrw
