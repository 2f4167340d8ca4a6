#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cactuslab/cacti.hpp"
#include "cactuslab/discs.hpp"
#include "cactuslab/sampling.hpp"

namespace cactuslab {

/* Adapters giving the two bundled operads the uniform shape the axiom
 * harness expects:
 *   Element, Boundary (circle parameter type), Point (realization point),
 *   min_arity, unit, random_element, arity, compose, gamma, act, equal,
 *   describe, circle_samples, boundary_in, boundary_out, sym_point,
 *   point_equal, contains, lower_map, right_map, in_lower, in_right,
 *   on_glue, realization_samples.
 * Everything is by exact rational arithmetic; equality means equality. */

struct DiscsModel {
  using Element = FramedDiscConfig;
  using Boundary = UnitCirclePoint;
  using Point = RationalComplex;

  int min_arity() const { return 0; }
  Element unit() const { return unit_config(); }
  Element random_element(Rng& rng, int arity) const { return random_disc_config(rng, arity); }
  int arity(const Element& x) const { return x.arity(); }
  Element compose(const Element& a, int i, const Element& b) const { return compose_at(a, i, b); }
  Element gamma(const Element& a, const std::vector<Element>& bs) const {
    return cactuslab::gamma(a, bs);
  }
  Element act(const Element& a, const Perm& s) const { return sigma_act(a, s); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::string describe(const Element& x) const {
    return "discs(n=" + std::to_string(x.arity()) + ")";
  }

  std::vector<Boundary> circle_samples(int k) const { return unit_circle_samples(k); }
  Point boundary_in(const Element& x, int i, const Boundary& t) const {
    return cactuslab::boundary_in(x, i, t);
  }
  Point boundary_out(const Element& x, const Boundary& t) const {
    return cactuslab::boundary_out(x, t);
  }
  // the plane never gets relabelled, so symmetry acts as the identity
  Point sym_point(const Element&, const Perm&, const Point& p) const { return p; }
  bool point_equal(const Point& a, const Point& b) const { return a == b; }
  bool contains(const Element& x, const Point& p) const { return realization_contains(x, p); }

  // the lower leg is the inclusion of the outer complement; the right
  // leg embeds through little disc i
  Point lower_map(const Element&, const std::vector<Element>&, const Point& p) const { return p; }
  Point right_map(const Element& x, const std::vector<Element>&, int i, const Point& q) const {
    return x.disc(i).embed(q);
  }
  bool in_lower(const Element& x, const std::vector<Element>&, const Point& p) const {
    return realization_contains(x, p);
  }
  bool in_right(const Element& x, const std::vector<Element>& ys, int i, const Point& p) const {
    return realization_contains(ys[static_cast<std::size_t>(i - 1)], x.disc(i).unembed(p));
  }
  bool on_glue(const Element& x, const std::vector<Element>&, int i, const Point& p) const {
    return on_disc_boundary(x, i, p);
  }

  std::vector<Point> realization_samples(const Element& x, int density) const {
    std::vector<Point> pts;
    for (const Boundary& t : circle_samples(density)) {
      pts.push_back(boundary_out(x, t));
      for (int i = 1; i <= x.arity(); ++i) pts.push_back(boundary_in(x, i, t));
    }
    // a coarse rational grid over the big disc, kept where it meets the
    // realization
    const int g = 6;
    for (int a = -g; a <= g; ++a)
      for (int b = -g; b <= g; ++b) {
        Rat px(a, g), py(b, g);
        px.canonicalize();
        py.canonicalize();
        Point p(px, py);
        if (contains(x, p)) pts.push_back(p);
      }
    return pts;
  }
};

struct CactiModel {
  using Element = Cactus;
  using Boundary = Rat;
  using Point = TorusPoint;

  int min_arity() const { return 1; }
  Element unit() const { return rotation_cactus(Rat(0)); }
  Element random_element(Rng& rng, int arity) const { return random_cactus(rng, arity); }
  int arity(const Element& x) const { return x.arity(); }
  Element compose(const Element& a, int i, const Element& b) const {
    return compose_cacti(a, i, b);
  }
  Element gamma(const Element& a, const std::vector<Element>& bs) const {
    return cacti_gamma(a, bs);
  }
  Element act(const Element& a, const Perm& s) const { return cacti_sigma_act(a, s); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::string describe(const Element& x) const {
    std::string cell;
    for (int l : x.cell()) cell += (cell.empty() ? "" : " ") + std::to_string(l);
    return "cactus(n=" + std::to_string(x.arity()) + ", cell=[" + cell + "])";
  }

  std::vector<Boundary> circle_samples(int k) const {
    std::vector<Rat> out;
    for (int j = 0; j < k; ++j) {
      Rat t(j, k);
      t.canonicalize();
      out.push_back(t);
    }
    return out;
  }
  Point boundary_in(const Element& x, int i, const Boundary& t) const {
    return cactus_boundary_in(x, i, t);
  }
  Point boundary_out(const Element& x, const Boundary& t) const {
    return cactus_boundary_out(x, t);
  }
  Point sym_point(const Element&, const Perm& s, const Point& p) const {
    return cactus_sym_point(s, p);
  }
  bool point_equal(const Point& a, const Point& b) const { return a == b; }
  bool contains(const Element& x, const Point& p) const { return realization_contains(x, p); }

  Point lower_map(const Element& x, const std::vector<Element>& ys, const Point& p) const {
    return cactus_lower_map(x, ys, p);
  }
  Point right_map(const Element& x, const std::vector<Element>& ys, int i, const Point& q) const {
    return cactus_right_map(x, ys, i, q);
  }
  bool in_lower(const Element& x, const std::vector<Element>& ys, const Point& p) const {
    return in_lower_image(x, ys, p);
  }
  bool in_right(const Element& x, const std::vector<Element>& ys, int i, const Point& p) const {
    return in_right_image(x, ys, i, p);
  }
  bool on_glue(const Element& x, const std::vector<Element>& ys, int i, const Point& p) const {
    return on_glued_circle(x, ys, i, p);
  }

  std::vector<Point> realization_samples(const Element& x, int density) const {
    std::vector<Point> pts;
    for (const Boundary& t : circle_samples(density)) pts.push_back(boundary_out(x, t));
    for (int i = 1; i <= x.arity(); ++i)
      for (const Boundary& t : circle_samples(std::max(4, density / 4)))
        pts.push_back(boundary_in(x, i, t));
    return pts;
  }
};

}  // namespace cactuslab
