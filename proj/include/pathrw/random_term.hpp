// Seeded random generation of well-formed path terms. Terms are assembled
// endpoint-consistently by construction: composition children are generated
// source-anchored (with a sigma wrap or a reflexivity connector as repair),
// substitution arguments are generated to fit the chosen hole, and
// projection congruences receive pair-valued children. All randomness flows
// through one PRNG, so every generator is reproducible per seed.
#pragma once

#include "pathrw/endpoints.hpp"
#include "pathrw/env.hpp"
#include "pathrw/path.hpp"

#include <cstdint>

namespace pathrw {

// Relative weight per constructor family; zero disables the family. The
// defaults exercise the groupoid and unary-congruence fragment, where
// independently contracted redexes rejoin. Substitution, homotopy, and pair
// nodes are opt-in: the one-directional motion rules they trigger (and the
// componentwise sigma/pair distribution, which unshapes a cancellation redex
// wrapped in sigma(pair(..))) make one-step reducts drift to distinct though
// rw-equal normal forms, which is exactly what the confluence sampler must
// not conflate with catalog bugs.
struct GenWeights {
  double atom = 2.0;
  double rho = 1.5;
  double eta = 0.0;
  double hom = 0.0;
  double sigma = 1.5;
  double tau = 2.0;
  double mu_fun = 1.0;
  double mu1 = 0.4;
  double mu2 = 0.4;
  double nu = 0.6;
  double xi = 0.6;
  double pairp = 0.0;
  double subl = 0.0;
  double subr = 0.0;
  double ext = 0.0;
};

// Adds pair, substitution, and homotopy nodes on top of the defaults.
GenWeights full_weights();

// A strict well-formed term of depth <= max_depth over env's generators.
// Throws Error{GenerationFailed} if no term satisfies the weights (for
// example, every weight zero).
PathPtr random_term(const Environment& env, int max_depth,
                    const GenWeights& weights, std::uint64_t seed);

// As random_term, but resamples (deterministically) until path_size <=
// max_size; shrinks the depth if needed.
PathPtr random_term_sized(const Environment& env, int max_size,
                          const GenWeights& weights, std::uint64_t seed);

// A term built only from rho leaves under sigma/tau/mu/nu/xi (and ext when
// include_ext). When `at` is non-null every endpoint is anchored there, so
// the result is a loop at that point.
PathPtr random_rho_term(const Environment& env, int max_depth, bool include_ext,
                        std::uint64_t seed, const PointPtr& at = nullptr);

// A loop at the circle's base point: a random word in loop, sigma(loop) and
// rho(base), composed with a random association.
PathPtr random_circle_path(const Environment& env, int letters,
                           std::uint64_t seed);

} // namespace pathrw
