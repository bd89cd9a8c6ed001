// Path-space structure built on the rewrite engine: the fundamental group of
// the circle (winding numbers), the natural-numbers path space with its
// code/encode/decode characterization and decidable equality, classification
// of coproduct paths, unit-type connectivity, and the axiom-K sampler that
// separates sets (naturals) from the circle.
#pragma once

#include "pathrw/engine.hpp"
#include "pathrw/random_term.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace pathrw {

// ---------------------------------------------------------------- circle --

// toPath(n): rho at base for n = 0, otherwise n loop letters (inverted for
// negative n) composed one at a time: tau(letter, toPath(n -+ 1)).
PathPtr loop_power(long long n, const Environment& env);

// The group operation p . q, which traverses q first: tau(q, p).
PathPtr circle_compose(const PathPtr& p, const PathPtr& q,
                       const Environment& env);

// Normalizes a loop at base and reads the exponent of its loop^n normal form
// (a right-combed word in loop / sigma(loop), or rho). Mixed-sign words
// cannot survive normalization, so encountering one is an internal error;
// terms mentioning any atom but the loop are rejected with NotCirclePath.
long long winding(const PathPtr& p, const EngineOptions& opt,
                  const Environment& env);

// -------------------------------------------------------------- naturals --

// The code family for equality of naturals: a tower of Recur wrappers (the
// shared successor depth) over Unit (equal) or Empty (unequal).
struct CodeValue {
  enum class Base { Unit, Empty };
  Base base = Base::Unit;
  int recur = 0;
};

bool code_eq(const CodeValue& a, const CodeValue& b);
std::string print_code(const CodeValue& c);

// code(m,n): min(m,n) Recur wrappers over Unit iff m = n, else Empty.
CodeValue nat_code(long long m, long long n);

// r(n): the canonical inhabitant of code(n,n); flattens to Unit for every n.
CodeValue nat_r(long long n);

// The path corresponding to an inhabited code: mu[succ]^m(rho(0)), which
// normalizes to rho(m). Throws Error{EmptyCode} when the code is
// uninhabited (m != n or c flattens to Empty).
PathPtr nat_decode(long long m, long long n, const CodeValue& c);

// Transports r(m) along p: p must be a naturals path (no atoms, no homotopy
// or unit nodes) with endpoints (m, n); every such path normalizes to a
// reflexivity, so the transport is the identity and the result is the
// inhabitant of code(m,n). Throws EndpointMismatch / NotNatPath.
CodeValue nat_encode(long long m, long long n, const PathPtr& p,
                     const EngineOptions& opt, const Environment& env);

// Decidable equality: a path witness when m = n, a refutation marker
// otherwise.
struct NatDecision {
  std::optional<PathPtr> path; // engaged iff m = n
  std::string refutation;      // nonempty iff m != n
};

NatDecision nat_dec_eq(long long m, long long n);

// ------------------------------------------------------------- coproduct --

struct CoprodClass {
  enum class Tag { Left, Right, Impossible };
  Tag tag = Tag::Impossible;
  PathPtr inner; // the path with its constructor congruence stripped
};

// Classifies a path between constructor-headed points: inl-to-inl paths are
// Left with the mu[inl] wrapper stripped, inr-to-inr Right, and paths
// between distinct constructors Impossible. Non-constructor endpoints throw
// Error{NotCoprodPath}.
CoprodClass coprod_classify(const PathPtr& p, const EngineOptions& opt,
                            const Environment& env);

// ------------------------------------------------------------------ unit --

// Every two unit points are connected: tau(sigma(eta(x)), eta(y)), which
// normalizes to rho when x and y coincide.
PathPtr unit_connect(const PointPtr& x, const PointPtr& y);

// --------------------------------------------------------------- axiom K --

enum class KSpace { Circle, Nat };

struct KReport {
  int total = 0;
  int collapsed = 0;        // loops whose normal form is a reflexivity
  PathPtr witness;          // a surviving non-reflexivity normal form, if any
};

// Samples random loops at `at` and reports how many collapse to rho. For
// the naturals every loop collapses; for the circle the loop atom itself
// survives as a witness. (For the circle, loops necessarily sit at the loop
// atom's base point.)
KReport axiom_k_sample(KSpace space, const PointPtr& at, int samples,
                       std::uint64_t seed, const EngineOptions& opt,
                       const Environment& env);

std::string print_k_report(const KReport& r);

} // namespace pathrw
