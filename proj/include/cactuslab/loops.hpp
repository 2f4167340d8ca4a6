#pragma once

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "cactuslab/cacti.hpp"
#include "cactuslab/rational.hpp"

namespace cactuslab {

/* Piecewise-linear rational function on [0,1], not necessarily monotone.
 * Canonical form: no collinear interior breakpoints, so operator== is
 * semantic equality.  Loops in a group are stored as one such function
 * per coordinate channel ("lift" for the circle, one per strict-upper
 * matrix entry for the unitriangular group). */
class PLFunc {
 public:
  PLFunc();  // constant zero
  PLFunc(std::vector<Rat> breaks, std::vector<Rat> values);
  static PLFunc constant(const Rat& v);

  const std::vector<Rat>& breaks() const { return t_; }
  const std::vector<Rat>& values() const { return v_; }

  Rat eval(const Rat& t) const;  // t in [0,1]
  // f(1) - f(0); the winding number for circle lifts, 0 for honest loops
  Rat period_shift() const;
  // extension to all rationals by f(u + m) = f(u) + m * period_shift()
  Rat eval_periodic(const Rat& u) const;

  friend bool operator==(const PLFunc& a, const PLFunc& b) = default;

 private:
  std::vector<Rat> t_, v_;
};

PLFunc pl_add(const PLFunc& a, const PLFunc& b);
// scale * f + offset
PLFunc pl_affine(const Rat& scale, const PLFunc& f, const Rat& offset);

// channels of a loop [0,1] -> G with both endpoints the identity
using LoopChannels = std::vector<PLFunc>;

/* The circle group Q/Z.  Elements are canonical representatives in
 * [0,1); a loop is its unique lift starting at 0, so the lift ends at
 * the integer winding number. */
struct CircleGroup {
  using Elem = Rat;
  using Loop = LoopChannels;

  std::string name() const { return "s1"; }
  int channels() const { return 1; }
  Elem identity() const { return Rat(0); }
  Elem mul(const Elem& a, const Elem& b) const { return rat_mod1(a + b); }
  Elem inverse(const Elem& a) const { return rat_mod1(-a); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  void validate_loop(const Loop& g) const;
  Elem eval_loop(const Loop& g, const Rat& u) const {
    return rat_mod1(g[0].eval_periodic(u));
  }
  // left translation acts on the lift by a constant shift
  void translate_values(const Elem& g, std::vector<Rat>& w) const { w[0] = g + w[0]; }
  // consecutive lift pieces of the same circle path differ by integers
  void check_offsets(const std::vector<Rat>& diff) const;
};

/* 3x3 upper unitriangular rational matrices [[1 a b][0 1 c][0 0 1]].
 * Noncommutative, yet left translation by a constant element keeps the
 * entries of a piecewise-linear path piecewise linear. */
struct UniTriangular3 {
  struct Elem {
    Rat a, b, c;
    friend bool operator==(const Elem& x, const Elem& y) = default;
  };
  using Loop = LoopChannels;  // channels a(t), b(t), c(t)

  std::string name() const { return "ut3"; }
  int channels() const { return 3; }
  Elem identity() const { return {Rat(0), Rat(0), Rat(0)}; }
  Elem mul(const Elem& x, const Elem& y) const {
    Rat cross = x.a * y.c;
    return {x.a + y.a, x.b + y.b + cross, x.c + y.c};
  }
  Elem inverse(const Elem& x) const {
    Rat cross = x.a * x.c;
    return {-x.a, -x.b + cross, -x.c};
  }
  bool equal(const Elem& x, const Elem& y) const { return x == y; }

  void validate_loop(const Loop& g) const;
  Elem eval_loop(const Loop& g, const Rat& u) const {
    return {g[0].eval_periodic(u), g[1].eval_periodic(u), g[2].eval_periodic(u)};
  }
  void translate_values(const Elem& g, std::vector<Rat>& w) const {
    Rat cross = g.a * w[2];
    w[0] = g.a + w[0];
    w[1] = g.b + w[1] + cross;
    w[2] = g.c + w[2];
  }
  void check_offsets(const std::vector<Rat>& diff) const;
};

// two lobes of a cactus sharing a point of the realization; the shared
// point is unique for each meeting pair
struct LobeMeeting {
  int i, j;  // 1-based, i < j
  TorusPoint point;
};
std::vector<LobeMeeting> lobe_meetings(const Cactus& c);
// all lobes whose circle passes through p, ascending
std::vector<int> lobes_through(const Cactus& c, const TorusPoint& p);

/* The patched map of the realization into G: on lobe i it is the left
 * translate g_i * loop_i of the i-th input, the translations chosen so
 * the global marked point maps to the identity and all lobe evaluations
 * agree at shared points. */
template <typename G>
struct PatchedMap {
  Cactus cactus;
  std::vector<typename G::Elem> translations;
  std::vector<typename G::Loop> loops;
};

template <typename G>
typename G::Elem patched_eval_on_lobe(const G& grp, const PatchedMap<G>& pm, int i, const Rat& u) {
  return grp.mul(pm.translations[static_cast<std::size_t>(i - 1)],
                 grp.eval_loop(pm.loops[static_cast<std::size_t>(i - 1)], u));
}

template <typename G>
typename G::Elem patched_eval(const G& grp, const PatchedMap<G>& pm, const TorusPoint& p) {
  auto through = lobes_through(pm.cactus, p);
  if (through.empty()) throw std::invalid_argument("point not on any lobe");
  return patched_eval_on_lobe(grp, pm, through.front(),
                              p[static_cast<std::size_t>(through.front() - 1)]);
}

/* Solve for the translations by walking the lobe-meeting tree outward
 * from a lobe holding the marked point.  reverse_order flips every
 * traversal choice; the result must not depend on it, and the full set
 * of constraints is re-verified before returning. */
template <typename G>
PatchedMap<G> patch(const G& grp, const Cactus& c, const std::vector<typename G::Loop>& loops,
                    bool reverse_order = false) {
  int n = c.arity();
  if (static_cast<int>(loops.size()) != n)
    throw std::invalid_argument("loop count must match the cactus arity");
  for (const auto& g : loops) grp.validate_loop(g);

  TorusPoint marked = cactus_boundary_out(c, Rat(0));
  std::vector<int> through = lobes_through(c, marked);
  std::vector<LobeMeeting> meetings = lobe_meetings(c);
  std::vector<std::vector<std::size_t>> adj(static_cast<std::size_t>(n));
  for (std::size_t e = 0; e < meetings.size(); ++e) {
    adj[static_cast<std::size_t>(meetings[e].i - 1)].push_back(e);
    adj[static_cast<std::size_t>(meetings[e].j - 1)].push_back(e);
  }
  if (reverse_order)
    for (auto& edges : adj) std::reverse(edges.begin(), edges.end());

  PatchedMap<G> pm{c, std::vector<typename G::Elem>(static_cast<std::size_t>(n), grp.identity()),
                   loops};
  std::vector<char> have(static_cast<std::size_t>(n), 0);
  int root = reverse_order ? through.back() : through.front();
  pm.translations[static_cast<std::size_t>(root - 1)] =
      grp.inverse(grp.eval_loop(loops[static_cast<std::size_t>(root - 1)],
                                marked[static_cast<std::size_t>(root - 1)]));
  have[static_cast<std::size_t>(root - 1)] = 1;
  std::queue<int> todo;
  todo.push(root);
  while (!todo.empty()) {
    int i = todo.front();
    todo.pop();
    for (std::size_t e : adj[static_cast<std::size_t>(i - 1)]) {
      const LobeMeeting& m = meetings[e];
      int j = m.i == i ? m.j : m.i;
      if (have[static_cast<std::size_t>(j - 1)]) continue;
      auto here = patched_eval_on_lobe(grp, pm, i, m.point[static_cast<std::size_t>(i - 1)]);
      pm.translations[static_cast<std::size_t>(j - 1)] = grp.mul(
          here,
          grp.inverse(grp.eval_loop(loops[static_cast<std::size_t>(j - 1)],
                                    m.point[static_cast<std::size_t>(j - 1)])));
      have[static_cast<std::size_t>(j - 1)] = 1;
      todo.push(j);
    }
  }
  for (char h : have)
    if (!h) throw std::logic_error("lobes do not form a connected configuration");

  // every constraint, not only the ones the traversal used
  for (const LobeMeeting& m : meetings) {
    auto a = patched_eval_on_lobe(grp, pm, m.i, m.point[static_cast<std::size_t>(m.i - 1)]);
    auto b = patched_eval_on_lobe(grp, pm, m.j, m.point[static_cast<std::size_t>(m.j - 1)]);
    if (!grp.equal(a, b))
      throw std::logic_error("patched translations disagree at a lobe intersection");
  }
  for (int i : through)
    if (!grp.equal(patched_eval_on_lobe(grp, pm, i, marked[static_cast<std::size_t>(i - 1)]),
                   grp.identity()))
      throw std::logic_error("marked point does not map to the identity");
  return pm;
}

/* The algebra action: evaluate the patched map along the outgoing
 * boundary.  Each tiling arc contributes the active lobe's translated
 * loop reparametrized by that coordinate; channels are cut wherever the
 * reparametrization crosses a breakpoint translate, so every output
 * piece is honestly linear. */
template <typename G>
typename G::Loop omega(const G& grp, const Cactus& c, const std::vector<typename G::Loop>& loops) {
  PatchedMap<G> pm = patch(grp, c, loops);
  int C = grp.channels();
  std::vector<Rat> obreaks;
  std::vector<std::vector<Rat>> ovals(static_cast<std::size_t>(C));
  std::vector<Rat> prev_vals(static_cast<std::size_t>(C), Rat(0));  // identity channels
  std::vector<Rat> offset(static_cast<std::size_t>(C), Rat(0));

  for (const IntervalPiece& piece : c.interval_sequence()) {
    const PLCircleMap& cm = c.coord(piece.label);
    const typename G::Loop& loop = pm.loops[static_cast<std::size_t>(piece.label - 1)];
    std::vector<Rat> cuts{piece.start, piece.end};
    const auto& bt = cm.breaks();
    for (std::size_t a = 0; a + 1 < bt.size(); ++a) {
      Rat lo = std::max(bt[a], piece.start), hi = std::min(bt[a + 1], piece.end);
      if (!(lo < hi)) continue;
      if (bt[a] > piece.start && bt[a] < piece.end) cuts.push_back(bt[a]);
      Rat va = cm.eval(lo), vb = cm.eval(hi);
      if (va == vb) continue;  // plateau stretch, constant output there
      for (int k = 0; k < C; ++k)
        for (const Rat& br : loop[static_cast<std::size_t>(k)].breaks()) {
          Rat mlo = va - br, mhi = vb - br;
          for (Int m = rat_ceil(mlo); m <= rat_floor(mhi); ++m) {
            Rat target = br + Rat(m);
            Rat t = lo + (hi - lo) * (target - va) / (vb - va);
            if (t > lo && t < hi) cuts.push_back(t);
          }
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    for (std::size_t s = 0; s < cuts.size(); ++s) {
      std::vector<Rat> w(static_cast<std::size_t>(C));
      Rat u = cm.eval(cuts[s]);
      for (int k = 0; k < C; ++k)
        w[static_cast<std::size_t>(k)] = loop[static_cast<std::size_t>(k)].eval_periodic(u);
      grp.translate_values(pm.translations[static_cast<std::size_t>(piece.label - 1)], w);
      if (s == 0) {
        // channel lifts of consecutive pieces may disagree by the
        // amount the group quotients away; re-align and verify
        for (int k = 0; k < C; ++k)
          offset[static_cast<std::size_t>(k)] =
              prev_vals[static_cast<std::size_t>(k)] - w[static_cast<std::size_t>(k)];
        grp.check_offsets(offset);
        if (!obreaks.empty()) continue;  // junction point already recorded
      }
      obreaks.push_back(cuts[s]);
      for (int k = 0; k < C; ++k) {
        Rat v = w[static_cast<std::size_t>(k)] + offset[static_cast<std::size_t>(k)];
        ovals[static_cast<std::size_t>(k)].push_back(v);
        prev_vals[static_cast<std::size_t>(k)] = v;
      }
    }
  }

  typename G::Loop out;
  for (int k = 0; k < C; ++k) out.emplace_back(obreaks, ovals[static_cast<std::size_t>(k)]);
  grp.validate_loop(out);
  return out;
}

// both routes of the algebra associativity square, compared as exact
// loops; the flat list concatenates the blocks fed to the inner cacti
template <typename G>
bool check_algebra_associativity(const G& grp, const Cactus& c, const std::vector<Cactus>& ds,
                                 const std::vector<typename G::Loop>& loops) {
  if (static_cast<int>(ds.size()) != c.arity())
    throw std::invalid_argument("inner cactus count must match the outer arity");
  std::vector<typename G::Loop> inner;
  std::size_t off = 0;
  for (const Cactus& d : ds) {
    std::size_t m = static_cast<std::size_t>(d.arity());
    if (off + m > loops.size()) throw std::invalid_argument("too few loops for the total arity");
    std::vector<typename G::Loop> slice(loops.begin() + static_cast<std::ptrdiff_t>(off),
                                        loops.begin() + static_cast<std::ptrdiff_t>(off + m));
    inner.push_back(omega(grp, d, slice));
    off += m;
  }
  if (off != loops.size()) throw std::invalid_argument("too many loops for the total arity");
  return omega(grp, cacti_gamma(c, ds), loops) == omega(grp, c, inner);
}

}  // namespace cactuslab
