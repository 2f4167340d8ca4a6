#pragma once

#include <utility>
#include <vector>

#include "cactuslab/rational.hpp"

namespace cactuslab {

/* Monotone piecewise-linear circle map, stored as a lift: breakpoints
 * 0 = t_0 < ... < t_k = 1 with nondecreasing rational values and
 * v_k - v_0 a nonnegative integer (the degree).  The representation is
 * canonical: no collinear interior breakpoints, and v_0 normalized into
 * [0,1), so operator== decides equality of the underlying circle maps. */
class PLCircleMap {
 public:
  PLCircleMap();  // the identity map
  PLCircleMap(std::vector<Rat> breaks, std::vector<Rat> values);

  static PLCircleMap identity_map() { return PLCircleMap(); }
  static PLCircleMap rotation(const Rat& s);

  const std::vector<Rat>& breaks() const { return t_; }
  const std::vector<Rat>& values() const { return v_; }
  Int degree() const;

  Rat eval(const Rat& t) const;       // t in [0,1]
  Rat eval_lift(const Rat& x) const;  // periodic extension to all of Q
  Rat eval_mod1(const Rat& t) const;  // value as a circle point in [0,1)

  friend bool operator==(const PLCircleMap& a, const PLCircleMap& b) = default;

 private:
  std::vector<Rat> t_, v_;
};

// f after g; degrees multiply
PLCircleMap pl_compose(const PLCircleMap& f, const PLCircleMap& g);

// semantic comparison through breakpoint refinement; agrees with == on
// canonical maps and exists so tests can cross-check the canonicalization
bool pl_equal(const PLCircleMap& a, const PLCircleMap& b);

// maximal intervals of increase (closures of the non-constancy set), as
// seen on [0,1] cut at the basepoint
std::vector<std::pair<Rat, Rat>> support_components(const PLCircleMap& f);

// is there an integer m with lo <= p + m <= hi?  p is a canonical circle
// value, [lo,hi] a lift interval of length at most one full turn
bool circle_value_in_lift_interval(const Rat& p, const Rat& lo, const Rat& hi);

}  // namespace cactuslab
