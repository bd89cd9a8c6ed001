#include "pathrw/parse.hpp"

#include "pathrw/error.hpp"

#include <cctype>
#include <cstdint>

namespace pathrw {

namespace {

// Keywords that can never name an atom, point variable, or function.
bool reserved(const std::string& s) {
  static const char* words[] = {"rho", "sigma", "tau",  "mu",  "mu1",     "mu2",
                                "muE", "nu",    "xi",   "xi1", "xi2",     "pair",
                                "subL", "subR", "ext",  "eta", "id",      "comp",
                                "pairmap", "fst", "snd", "H"};
  for (const char* w : words)
    if (s == w) return true;
  return false;
}

struct Cursor {
  const std::string& text;
  std::size_t i = 0;

  explicit Cursor(const std::string& t) : text(t) {}

  void skip_ws() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= text.size();
  }
  char peek() {
    skip_ws();
    return i < text.size() ? text[i] : '\0';
  }
  bool try_eat(char c) {
    skip_ws();
    if (i < text.size() && text[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!try_eat(c))
      throw Error(ErrorKind::Parse, std::string("expected '") + c + "' at offset " +
                                        std::to_string(i) + " in: " + text);
  }
  bool ident_ahead() {
    skip_ws();
    return i < text.size() &&
           (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_');
  }
  bool digit_ahead() {
    skip_ws();
    return i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]));
  }
  std::string ident() {
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                               text[i] == '_' || text[i] == '\''))
      ++i;
    if (start == i)
      throw Error(ErrorKind::Parse, "expected identifier at offset " +
                                        std::to_string(i) + " in: " + text);
    return text.substr(start, i - start);
  }
  std::uint64_t number() {
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i)
      throw Error(ErrorKind::Parse, "expected number at offset " +
                                        std::to_string(i) + " in: " + text);
    return std::stoull(text.substr(start, i - start));
  }
};

class Parser {
public:
  Parser(const std::string& text, const Environment* env)
      : cur_(text), env_(env) {}

  PointPtr point() {
    if (cur_.try_eat('*')) return pstar();
    if (cur_.try_eat('<')) {
      PointPtr a = point();
      cur_.expect(',');
      PointPtr b = point();
      cur_.expect('>');
      return ppair(a, b);
    }
    if (cur_.digit_ahead()) return pnat(cur_.number());
    std::string name = cur_.ident();
    if (name == "fst" || name == "snd") {
      cur_.expect('(');
      PointPtr a = point();
      cur_.expect(')');
      return name == "fst" ? pfst(a) : psnd(a);
    }
    FunPtr f = fun_tail(name);
    if (f) {
      cur_.expect('(');
      PointPtr a = point();
      cur_.expect(')');
      return papp(f, a);
    }
    // A bare identifier followed by '(' is a named function application.
    if (cur_.peek() == '(') {
      if (reserved(name))
        throw Error(ErrorKind::Parse, "reserved word used as a function: " + name);
      cur_.expect('(');
      PointPtr a = point();
      cur_.expect(')');
      return papp(fnamed(name), a);
    }
    if (reserved(name))
      throw Error(ErrorKind::Parse, "reserved word used as a point: " + name);
    return pvar(name);
  }

  FunPtr fun() {
    std::string name = cur_.ident();
    FunPtr f = fun_tail(name);
    if (f) return f;
    if (reserved(name))
      throw Error(ErrorKind::Parse, "reserved word used as a function: " + name);
    return fnamed(name);
  }

  PathPtr path() {
    std::string name = cur_.ident();
    if (name == "rho") return rho(parenthesized_point());
    if (name == "eta") return eta(parenthesized_point());
    if (name == "sigma") return sigma(unary());
    if (name == "nu") return nu(unary());
    if (name == "xi") return xi(unary());
    if (name == "xi1") return xi1(unary());
    if (name == "xi2") return xi2(unary());
    if (name == "ext") return ext(unary());
    if (name == "mu1") return mu1(unary());
    if (name == "mu2") return mu2(unary());
    if (name == "tau" || name == "pair") {
      cur_.expect('(');
      PathPtr a = path();
      cur_.expect(',');
      PathPtr b = path();
      cur_.expect(')');
      return name == "tau" ? tau(a, b) : pairpath(a, b);
    }
    if (name == "mu") {
      cur_.expect('[');
      FunPtr f = resolve_fun(fun());
      cur_.expect(']');
      PathPtr a = unary();
      return mu(f, a);
    }
    if (name == "muE") {
      cur_.expect('(');
      PathPtr a = path();
      cur_.expect(',');
      PathPtr b = path();
      if (cur_.try_eat(',')) {
        PathPtr c = path();
        cur_.expect(')');
        return muE(a, b, c);
      }
      cur_.expect(')');
      return muE(a, b);
    }
    if (name == "subL" || name == "subR") {
      cur_.expect('(');
      PathPtr a = path();
      cur_.expect(',');
      PointPos pos = position();
      cur_.expect(',');
      PathPtr b = path();
      cur_.expect(')');
      return name == "subL" ? subL(a, pos, b) : subR(a, pos, b);
    }
    if (name == "H") {
      cur_.expect('[');
      std::string family = cur_.ident();
      cur_.expect(']');
      PointPtr x = parenthesized_point();
      auto it = env_->homs.find(family);
      if (it == env_->homs.end())
        throw Error(ErrorKind::UnknownAtom, "undeclared homotopy family: " + family);
      return hom(family, it->second.f, it->second.g, x);
    }
    if (reserved(name))
      throw Error(ErrorKind::Parse, "reserved word used as an atom: " + name);
    auto it = env_->atoms.find(name);
    if (it == env_->atoms.end())
      throw Error(ErrorKind::UnknownAtom, "undeclared atom: " + name);
    return atom(name, it->second.source, it->second.target);
  }

  PointPos position() {
    cur_.expect('[');
    PointPos pos;
    if (!cur_.try_eat(']')) {
      pos.push_back(static_cast<int>(cur_.number()));
      while (cur_.try_eat(',')) pos.push_back(static_cast<int>(cur_.number()));
      cur_.expect(']');
    }
    return pos;
  }

  void done() {
    if (!cur_.eof())
      throw Error(ErrorKind::Parse, "trailing input at offset " +
                                        std::to_string(cur_.i) + " in: " + cur_.text);
  }

private:
  PathPtr unary() {
    cur_.expect('(');
    PathPtr a = path();
    cur_.expect(')');
    return a;
  }
  PointPtr parenthesized_point() {
    cur_.expect('(');
    PointPtr x = point();
    cur_.expect(')');
    return x;
  }
  // Unfolds named functions the environment declares as product maps into
  // literal pairmap expressions, so their action on pairs is visible to the
  // rewrite rules and to endpoint computation.
  FunPtr resolve_fun(const FunPtr& f) {
    if (!env_) return f;
    switch (f->kind) {
      case FunKind::Named: {
        auto it = env_->funs.find(f->name);
        if (it != env_->funs.end() &&
            it->second.kind == FunDeclKind::ProductMap)
          return fpairmap(resolve_fun(fnamed(it->second.left)),
                          resolve_fun(fnamed(it->second.right)));
        return f;
      }
      case FunKind::Compose:
        return fcomp(resolve_fun(f->a), resolve_fun(f->b));
      case FunKind::PairMap:
        return fpairmap(resolve_fun(f->a), resolve_fun(f->b));
      default:
        return f;
    }
  }

  // Parses the structured function expressions once the head identifier is
  // known; returns null when the identifier is an ordinary name.
  FunPtr fun_tail(const std::string& name) {
    if (name == "id") return fid();
    if (name == "comp" || name == "pairmap") {
      cur_.expect('(');
      FunPtr a = fun();
      cur_.expect(',');
      FunPtr b = fun();
      cur_.expect(')');
      return name == "comp" ? fcomp(a, b) : fpairmap(a, b);
    }
    return nullptr;
  }

  Cursor cur_;
  const Environment* env_;
};

} // namespace

PointPtr parse_point(const std::string& text) {
  Parser p(text, nullptr);
  PointPtr r = p.point();
  p.done();
  return r;
}

FunPtr parse_fun(const std::string& text) {
  Parser p(text, nullptr);
  FunPtr r = p.fun();
  p.done();
  return r;
}

PathPtr parse_path(const std::string& text, const Environment& env) {
  Parser p(text, &env);
  PathPtr r = p.path();
  p.done();
  return r;
}

} // namespace pathrw
