#pragma once

#include <string>
#include <vector>

#include "cactuslab/perm.hpp"
#include "cactuslab/report.hpp"
#include "cactuslab/sampling.hpp"

namespace cactuslab {

/* Randomized axiom harness.  A model M supplies elements, the operad
 * structure and the realization structure (see models.hpp for the
 * expected shape); every comparison below goes through the model's own
 * equality, never through raw representations. */

namespace harness_detail {

template <typename M>
int random_arity(const M& model, Rng& rng, int max_arity, int at_least = -1) {
  int lo = std::max(model.min_arity(), at_least);
  return lo + static_cast<int>(pick(rng, static_cast<std::size_t>(max_arity - lo + 1)));
}

template <typename M>
std::vector<typename M::Element> random_tuple(const M& model, Rng& rng, int count, int max_arity) {
  std::vector<typename M::Element> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    out.push_back(model.random_element(rng, random_arity(model, rng, max_arity)));
  return out;
}

// points of |x| reached through its boundary maps
template <typename M>
std::vector<typename M::Point> element_samples(const M& model, const typename M::Element& x,
                                               const std::vector<typename M::Boundary>& circle,
                                               std::size_t stride = 4) {
  std::vector<typename M::Point> pts;
  for (std::size_t k = 0; k < circle.size(); k += stride) pts.push_back(model.boundary_out(x, circle[k]));
  for (int i = 1; i <= model.arity(x); ++i)
    for (std::size_t k = 0; k < circle.size(); k += 2 * stride)
      pts.push_back(model.boundary_in(x, i, circle[k]));
  return pts;
}

inline std::string trial_tag(int trial) { return "trial " + std::to_string(trial) + ": "; }

}  // namespace harness_detail

template <typename M>
std::vector<AxiomReport> check_operad_axioms(const M& model, Rng& rng, int trials, int max_arity) {
  using harness_detail::random_arity;
  using harness_detail::random_tuple;
  using harness_detail::trial_tag;
  AxiomReport unit_left{"operad/unit-left"};
  AxiomReport unit_right{"operad/unit-right"};
  AxiomReport assoc{"operad/associativity"};
  AxiomReport action{"operad/right-action"};
  AxiomReport equiv_outer{"operad/equivariance-outer"};
  AxiomReport equiv_inner{"operad/equivariance-inner"};
  for (int trial = 0; trial < trials; ++trial) {
    auto x = model.random_element(rng, random_arity(model, rng, max_arity, 1));
    int n = model.arity(x);  // samplers may ignore the requested arity
    if (!model.equal(model.compose(model.unit(), 1, x), x))
      report_fail(unit_left, trial_tag(trial) + model.describe(x));
    bool right_ok = true;
    for (int i = 1; i <= n; ++i)
      if (!model.equal(model.compose(x, i, model.unit()), x)) right_ok = false;
    if (!right_ok) report_fail(unit_right, trial_tag(trial) + model.describe(x));

    // associativity through fully nested gamma
    auto ys = random_tuple(model, rng, n, std::max(model.min_arity(), 2));
    std::vector<typename M::Element> flat, inner;
    std::vector<std::vector<typename M::Element>> zs;
    for (int i = 0; i < n; ++i) {
      int m = model.arity(ys[static_cast<std::size_t>(i)]);
      zs.push_back(random_tuple(model, rng, m, std::max(model.min_arity(), 2)));
      for (const auto& z : zs.back()) flat.push_back(z);
    }
    for (int i = 0; i < n; ++i)
      inner.push_back(model.gamma(ys[static_cast<std::size_t>(i)], zs[static_cast<std::size_t>(i)]));
    if (!model.equal(model.gamma(model.gamma(x, ys), flat), model.gamma(x, inner)))
      report_fail(assoc, trial_tag(trial) + model.describe(x) + " with nested tuples");

    // right action and both equivariance laws
    Perm s(random_permutation(rng, n));
    Perm t(random_permutation(rng, n));
    bool act_ok = model.equal(model.act(model.act(x, s), t), model.act(x, compose(s, t))) &&
                  model.equal(model.act(x, Perm::identity(n)), x);
    if (!act_ok) report_fail(action, trial_tag(trial) + model.describe(x));

    std::vector<typename M::Element> ys_pre;
    std::vector<int> m_front;
    Perm sinv = s.inverse();
    for (int k = 0; k < n; ++k)
      ys_pre.push_back(ys[static_cast<std::size_t>(sinv(k))]);
    for (const auto& y : ys) m_front.push_back(model.arity(y));
    if (!model.equal(model.gamma(model.act(x, s), ys),
                     model.act(model.gamma(x, ys_pre), block_permutation(s, m_front))))
      report_fail(equiv_outer, trial_tag(trial) + model.describe(x));

    std::vector<Perm> ts;
    std::vector<typename M::Element> ys_acted;
    for (int i = 0; i < n; ++i) {
      ts.emplace_back(random_permutation(rng, m_front[static_cast<std::size_t>(i)]));
      ys_acted.push_back(model.act(ys[static_cast<std::size_t>(i)], ts.back()));
    }
    if (!model.equal(model.gamma(x, ys_acted), model.act(model.gamma(x, ys), direct_sum(ts))))
      report_fail(equiv_inner, trial_tag(trial) + model.describe(x));
  }
  for (AxiomReport* rep : {&unit_left, &unit_right, &assoc, &action, &equiv_outer, &equiv_inner})
    rep->trials = trials;
  return {unit_left, unit_right, assoc, action, equiv_outer, equiv_inner};
}

template <typename M>
std::vector<AxiomReport> check_realization_axioms(const M& model, Rng& rng, int trials, int samples,
                                                  int max_arity) {
  using harness_detail::element_samples;
  using harness_detail::random_arity;
  using harness_detail::random_tuple;
  using harness_detail::trial_tag;
  AxiomReport ax_unit{"realization/1-unit"};
  AxiomReport ax_sym{"realization/2-symmetries"};
  AxiomReport ax_bdry{"realization/3-pasting-boundaries"};
  AxiomReport ax_sym_in{"realization/4-pasting-symmetries-inner"};
  AxiomReport ax_sym_out{"realization/5-pasting-symmetries-outer"};
  AxiomReport ax_assoc{"realization/6-pasting-associativity"};
  auto circle = model.circle_samples(samples);
  auto unit = model.unit();
  for (int trial = 0; trial < trials; ++trial) {
    auto x = model.random_element(rng, random_arity(model, rng, max_arity, 1));
    int n = model.arity(x);
    auto ys = random_tuple(model, rng, n, std::max(model.min_arity(), 2));
    std::vector<int> m;
    for (const auto& y : ys) m.push_back(model.arity(y));

    // 1: the unit's input and output circles coincide, and unit pasting
    // squares collapse to identities
    for (const auto& t : circle)
      if (!model.point_equal(model.boundary_in(unit, 1, t), model.boundary_out(unit, t)))
        report_fail(ax_unit, trial_tag(trial) + "input and output circles differ on the unit");
    for (const auto& q : element_samples(model, x, circle)) {
      if (!model.point_equal(model.right_map(unit, {x}, 1, q), q))
        report_fail(ax_unit, trial_tag(trial) + "right leg of the unit square moved a point of " + model.describe(x));
      std::vector<typename M::Element> units(static_cast<std::size_t>(n), unit);
      if (!model.point_equal(model.lower_map(x, units, q), q))
        report_fail(ax_unit, trial_tag(trial) + "lower leg of the unit square moved a point of " + model.describe(x));
    }

    // 2: symmetry maps compose contravariantly and match the boundaries
    Perm s(random_permutation(rng, n));
    Perm t2(random_permutation(rng, n));
    Perm sinv = s.inverse();
    for (const auto& p : element_samples(model, x, circle)) {
      auto via = model.sym_point(model.act(x, t2), s, model.sym_point(x, t2, p));
      if (!model.point_equal(via, model.sym_point(x, compose(t2, s), p)))
        report_fail(ax_sym, trial_tag(trial) + "composition of symmetry maps on " + model.describe(x));
    }
    for (const auto& t : circle) {
      for (int i = 1; i <= n; ++i)
        if (!model.point_equal(model.sym_point(x, s, model.boundary_in(x, i, t)),
                               model.boundary_in(model.act(x, s), sinv(i - 1) + 1, t)))
          report_fail(ax_sym, trial_tag(trial) + "symmetry vs input circle " + std::to_string(i));
      if (!model.point_equal(model.sym_point(x, s, model.boundary_out(x, t)),
                             model.boundary_out(model.act(x, s), t)))
        report_fail(ax_sym, trial_tag(trial) + "symmetry vs output circle");
    }

    // 3: both legs of the pasting square respect the boundary circles
    auto g = model.gamma(x, ys);
    for (const auto& t : circle) {
      if (!model.point_equal(model.lower_map(x, ys, model.boundary_out(x, t)),
                             model.boundary_out(g, t)))
        report_fail(ax_bdry, trial_tag(trial) + "lower leg vs output circle");
      int flat = 0;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m[static_cast<std::size_t>(i - 1)]; ++j) {
          ++flat;
          if (!model.point_equal(
                  model.right_map(x, ys, i, model.boundary_in(ys[static_cast<std::size_t>(i - 1)], j, t)),
                  model.boundary_in(g, flat, t)))
            report_fail(ax_bdry, trial_tag(trial) + "right leg vs input circle (" + std::to_string(i) +
                                     "," + std::to_string(j) + ")");
        }
    }

    // 4: acting inside the arguments commutes with pasting
    std::vector<Perm> ss;
    std::vector<typename M::Element> ys_acted;
    for (int i = 0; i < n; ++i) {
      ss.emplace_back(random_permutation(rng, m[static_cast<std::size_t>(i)]));
      ys_acted.push_back(model.act(ys[static_cast<std::size_t>(i)], ss.back()));
    }
    Perm rho_in = direct_sum(ss);
    for (const auto& p : element_samples(model, x, circle))
      if (!model.point_equal(model.sym_point(g, rho_in, model.lower_map(x, ys, p)),
                             model.lower_map(x, ys_acted, p)))
        report_fail(ax_sym_in, trial_tag(trial) + "lower face");
    for (int i = 1; i <= n; ++i)
      for (const auto& q : element_samples(model, ys[static_cast<std::size_t>(i - 1)], circle, 8))
        if (!model.point_equal(
                model.sym_point(g, rho_in, model.right_map(x, ys, i, q)),
                model.right_map(x, ys_acted, i,
                                model.sym_point(ys[static_cast<std::size_t>(i - 1)], ss[static_cast<std::size_t>(i - 1)], q))))
          report_fail(ax_sym_in, trial_tag(trial) + "right face " + std::to_string(i));

    // 5: acting on the outer element commutes with pasting
    std::vector<typename M::Element> ys_pre;
    for (int k = 0; k < n; ++k) ys_pre.push_back(ys[static_cast<std::size_t>(sinv(k))]);
    Perm rho_out = block_permutation(s, m);
    auto gpre = model.gamma(x, ys_pre);
    for (const auto& p : element_samples(model, x, circle))
      if (!model.point_equal(model.sym_point(gpre, rho_out, model.lower_map(x, ys_pre, p)),
                             model.lower_map(model.act(x, s), ys, model.sym_point(x, s, p))))
        report_fail(ax_sym_out, trial_tag(trial) + "lower face");
    for (int i = 1; i <= n; ++i)
      for (const auto& q : element_samples(model, ys[static_cast<std::size_t>(i - 1)], circle, 8))
        if (!model.point_equal(model.sym_point(gpre, rho_out, model.right_map(x, ys_pre, s(i - 1) + 1, q)),
                               model.right_map(model.act(x, s), ys, i, q)))
          report_fail(ax_sym_out, trial_tag(trial) + "right face " + std::to_string(i));

    // 6: the two routes into the doubly glued realization agree from
    // every layer
    std::vector<typename M::Element> zflat, ws;
    std::vector<std::vector<typename M::Element>> zs;
    for (int i = 0; i < n; ++i) {
      zs.push_back(random_tuple(model, rng, m[static_cast<std::size_t>(i)], std::max(model.min_arity(), 2)));
      for (const auto& z : zs.back()) zflat.push_back(z);
    }
    for (int i = 0; i < n; ++i)
      ws.push_back(model.gamma(ys[static_cast<std::size_t>(i)], zs[static_cast<std::size_t>(i)]));
    auto xy = model.gamma(x, ys);
    for (const auto& p : element_samples(model, x, circle, 8))
      if (!model.point_equal(model.lower_map(xy, zflat, model.lower_map(x, ys, p)),
                             model.lower_map(x, ws, p)))
        report_fail(ax_assoc, trial_tag(trial) + "route from the outer layer");
    int flat_base = 0;
    for (int i = 1; i <= n; ++i) {
      const auto& yi = ys[static_cast<std::size_t>(i - 1)];
      const auto& zi = zs[static_cast<std::size_t>(i - 1)];
      for (const auto& q : element_samples(model, yi, circle, 8))
        if (!model.point_equal(model.lower_map(xy, zflat, model.right_map(x, ys, i, q)),
                               model.right_map(x, ws, i, model.lower_map(yi, zi, q))))
          report_fail(ax_assoc, trial_tag(trial) + "route from layer " + std::to_string(i));
      for (int j = 1; j <= m[static_cast<std::size_t>(i - 1)]; ++j) {
        for (const auto& r : element_samples(model, zi[static_cast<std::size_t>(j - 1)], circle, 8))
          if (!model.point_equal(model.right_map(xy, zflat, flat_base + j, r),
                                 model.right_map(x, ws, i, model.right_map(yi, zi, j, r))))
            report_fail(ax_assoc, trial_tag(trial) + "route from slot (" + std::to_string(i) + "," +
                                      std::to_string(j) + ")");
      }
      flat_base += m[static_cast<std::size_t>(i - 1)];
    }
  }
  for (AxiomReport* rep : {&ax_unit, &ax_sym, &ax_bdry, &ax_sym_in, &ax_sym_out, &ax_assoc})
    rep->trials = trials;
  return {ax_unit, ax_sym, ax_bdry, ax_sym_in, ax_sym_out, ax_assoc};
}

template <typename M>
AxiomReport check_pasting_pushout(const M& model, const typename M::Element& x,
                                  const std::vector<typename M::Element>& ys, int density) {
  if (density <= 0) throw std::invalid_argument("sample density must be positive");
  AxiomReport rep{"pasting/pushout"};
  auto circle = model.circle_samples(density);
  auto g = model.gamma(x, ys);
  int n = model.arity(x);
  // (a) the square commutes
  for (int i = 1; i <= n; ++i)
    for (const auto& t : circle)
      if (!model.point_equal(model.lower_map(x, ys, model.boundary_in(x, i, t)),
                             model.right_map(x, ys, i, model.boundary_out(ys[static_cast<std::size_t>(i - 1)], t))))
        report_fail(rep, "square does not commute at slot " + std::to_string(i));
  // (b) the two legs jointly cover, (c) and overlap only along the glue
  auto pts = model.realization_samples(g, density);
  std::size_t covered = 0;
  for (const auto& p : pts) {
    bool lower = model.in_lower(x, ys, p);
    bool any = lower;
    for (int i = 1; i <= n; ++i) {
      bool right = model.in_right(x, ys, i, p);
      any = any || right;
      if (lower && right && !model.on_glue(x, ys, i, p))
        report_fail(rep, "legs overlap off the glued circle at slot " + std::to_string(i));
    }
    if (any) ++covered;
  }
  if (covered != pts.size())
    report_fail(rep, "cover fraction " + std::to_string(covered) + "/" + std::to_string(pts.size()));
  rep.trials = static_cast<int>(pts.size()) + density * n;
  return rep;
}

}  // namespace cactuslab
