#pragma once

#include <cstdint>
#include <random>

#include "cloci/plumbing.hpp"

namespace cloci {

/// Knobs for the random graph generator used by property tests and the
/// selftest subcommand.
struct RandomGraphOptions {
  int min_ops = 0;
  int max_ops = 12;        // number of random blowup-style growth steps
  int max_seed_arrows = 3;
  int max_arrow_mult = 3;
  bool allow_genus = true;  // occasionally decorate a vertex with genus > 0
};

/// Generates a random graph that passes validate() and has a positive
/// integral multiplicity system. Construction mirrors an actual resolution
/// process: a single (-1) vertex carrying the branches, grown by blowups of
/// incidences and of free points, so validity holds by construction. Fully
/// deterministic for a given engine state (no std:: distributions, whose
/// sequences vary across standard libraries).
PlumbingGraph random_valid_graph(std::mt19937_64& rng,
                                 const RandomGraphOptions& options = {});

/// Uniform-ish integer draw in [lo, hi] from the engine (modulo reduction;
/// the slight bias is irrelevant for test-case generation).
long long draw(std::mt19937_64& rng, long long lo, long long hi);

}  // namespace cloci
