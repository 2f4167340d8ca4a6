#pragma once

#include <random>

#include "cactuslab/braid.hpp"
#include "cactuslab/cacti.hpp"
#include "cactuslab/discs.hpp"
#include "cactuslab/loops.hpp"
#include "cactuslab/rational.hpp"
#include "cactuslab/segments.hpp"

namespace cactuslab {

using Rng = std::mt19937_64;

// helpers shared by the randomized axiom checks and the command line
// driver; all draws go through the engine so runs are reproducible from
// a seed

inline std::size_t pick(Rng& rng, std::size_t n) { return rng() % n; }

// rational in [0,1) with denominator at most max_den
Rat random_unit_rat(Rng& rng, unsigned max_den = 16);
// strictly between lo and hi: lo + (hi-lo) * k/max_den with 0 < k < max_den
Rat random_rat_between(Rng& rng, const Rat& lo, const Rat& hi, unsigned max_den = 16);

std::vector<int> random_permutation(Rng& rng, int n);  // 0-based images

PRBElement random_prb(Rng& rng, int n, int word_len);
WElement random_welement(Rng& rng, int n, int word_len);

UnitCirclePoint random_circle_point(Rng& rng);
// disjointness by rejection; falls back to a jittered row when a draw
// refuses to fit, so this always terminates
FramedDiscConfig random_disc_config(Rng& rng, int arity);

// a valid cactus drawn from a random cell: random arc lengths, random
// winding speeds, random starting phases, occasional interior kinks
Cactus random_cactus(Rng& rng, int arity);

// circle loop lift: starts at 0, ends at a winding number in [-1, 2]
LoopChannels random_circle_loop(Rng& rng, int max_interior = 4);
// three piecewise-linear matrix entries, each returning to 0
LoopChannels random_ut3_loop(Rng& rng, int max_interior = 3);

// segments forming a random tree: each new segment crosses a randomly
// chosen earlier one, anchors redrawn until no accidental crossings
SegmentConfig random_segment_config(Rng& rng, int n);

}  // namespace cactuslab
