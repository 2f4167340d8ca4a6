#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "cactuslab/loops.hpp"
#include "cactuslab/sampling.hpp"

using namespace cactuslab;

namespace {

Rat rat(long p, long q) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

// reference concatenation at double speed: first loop on [0,1/2], second
// on [1/2,1], second lifted by the first channel's total shift
PLFunc concat_channels(const PLFunc& f, const PLFunc& g) {
  std::vector<Rat> breaks, values;
  for (std::size_t i = 0; i < f.breaks().size(); ++i) {
    Rat t = f.breaks()[i] / 2;
    breaks.push_back(t);
    values.push_back(f.values()[i]);
  }
  Rat shift = f.period_shift();
  for (std::size_t i = 1; i < g.breaks().size(); ++i) {
    Rat t = (1 + g.breaks()[i]) / 2;
    breaks.push_back(t);
    Rat v = g.values()[i] + shift;
    values.push_back(v);
  }
  return PLFunc(std::move(breaks), std::move(values));
}

template <typename G>
typename G::Loop concat_loops(const G&, const typename G::Loop& x, const typename G::Loop& y) {
  typename G::Loop out;
  for (std::size_t k = 0; k < x.size(); ++k) out.push_back(concat_channels(x[k], y[k]));
  return out;
}

// reference rotated channel t -> f(s+t) - f(s), using the periodic
// extension; breakpoints are the translates of f's breaks
PLFunc rotate_channel(const PLFunc& f, const Rat& s) {
  std::set<Rat> cuts{Rat(0), Rat(1)};
  for (const Rat& b : f.breaks()) {
    Rat t = rat_mod1(b - s);
    if (t > 0 && t < 1) cuts.insert(t);
  }
  Rat base = f.eval_periodic(s);
  std::vector<Rat> breaks, values;
  for (const Rat& t : cuts) {
    breaks.push_back(t);
    Rat v = f.eval_periodic(s + t) - base;
    values.push_back(v);
  }
  return PLFunc(std::move(breaks), std::move(values));
}

template <typename G>
void check_pointwise_rotation(const G& grp, const typename G::Loop& loop,
                              const typename G::Loop& got, const Rat& s) {
  auto gs_inv = grp.inverse(grp.eval_loop(loop, s));
  std::set<Rat> sample;
  for (const auto& ch : got)
    for (const Rat& b : ch.breaks()) sample.insert(b);
  for (const auto& ch : loop)
    for (const Rat& b : ch.breaks()) {
      Rat t = rat_mod1(b - s);
      if (t >= 0 && t <= 1) sample.insert(t);
    }
  std::vector<Rat> grid(sample.begin(), sample.end());
  std::size_t corners = grid.size();
  for (std::size_t i = 0; i + 1 < corners; ++i) {
    Rat mid = (grid[i] + grid[i + 1]) / 2;
    grid.push_back(mid);
  }
  for (const Rat& t : grid) {
    auto want = grp.mul(gs_inv, grp.eval_loop(loop, s + t));
    CHECK(grp.equal(grp.eval_loop(got, t), want));
  }
}

UniTriangular3::Elem random_ut3_elem(Rng& rng) {
  auto draw = [&rng] {
    Rat r(static_cast<long>(pick(rng, 13)) - 6, 4);
    r.canonicalize();
    return r;
  };
  return {draw(), draw(), draw()};
}

}  // namespace

TEST_CASE("pl functions evaluate, canonicalize and reject bad input") {
  PLFunc f({rat(0, 1), rat(1, 4), rat(1, 2), Rat(1)}, {Rat(0), Rat(2), rat(-1, 2), Rat(1)});
  CHECK(f.eval(rat(1, 8)) == Rat(1));
  CHECK(f.eval(rat(1, 4)) == Rat(2));
  CHECK(f.eval(rat(3, 8)) == rat(3, 4));
  CHECK(f.eval(Rat(1)) == Rat(1));
  CHECK(f.period_shift() == Rat(1));
  CHECK(f.eval_periodic(rat(9, 8)) == Rat(2));    // 1/8 plus one period
  CHECK(f.eval_periodic(rat(-7, 8)) == Rat(0));   // same point, lift below
  CHECK_THROWS_AS(f.eval(rat(3, 2)), std::invalid_argument);

  // the middle breakpoint lies on the segment through its neighbours
  PLFunc g({Rat(0), rat(1, 2), Rat(1)}, {Rat(0), rat(1, 2), Rat(1)});
  CHECK(g.breaks().size() == 2);
  CHECK(g == PLFunc({Rat(0), Rat(1)}, {Rat(0), Rat(1)}));

  CHECK(PLFunc::constant(rat(2, 3)).eval(rat(1, 7)) == rat(2, 3));
  CHECK(PLFunc().eval(rat(1, 3)) == Rat(0));

  CHECK_THROWS_AS(PLFunc({Rat(0), rat(1, 2)}, {Rat(0), Rat(0)}), std::invalid_argument);
  CHECK_THROWS_AS(PLFunc({Rat(0), rat(1, 2), rat(1, 2), Rat(1)},
                         {Rat(0), Rat(1), Rat(1), Rat(0)}),
                  std::invalid_argument);

  PLFunc sum = pl_add(f, g);
  CHECK(sum.eval(rat(1, 4)) == rat(9, 4));
  CHECK(sum.eval(rat(7, 8)) == f.eval(rat(7, 8)) + rat(7, 8));
  PLFunc aff = pl_affine(rat(-2, 1), g, rat(1, 3));
  CHECK(aff.eval(rat(1, 2)) == rat(-2, 3));
}

TEST_CASE("group models satisfy the group laws exactly") {
  CircleGroup s1;
  CHECK(s1.mul(rat(3, 4), rat(1, 2)) == rat(1, 4));
  CHECK(s1.inverse(rat(1, 3)) == rat(2, 3));
  CHECK(s1.inverse(Rat(0)) == Rat(0));
  CHECK(s1.mul(rat(1, 3), s1.inverse(rat(1, 3))) == s1.identity());

  UniTriangular3 ut;
  Rng rng(321);
  for (int trial = 0; trial < 30; ++trial) {
    auto x = random_ut3_elem(rng), y = random_ut3_elem(rng), z = random_ut3_elem(rng);
    CHECK(ut.equal(ut.mul(ut.mul(x, y), z), ut.mul(x, ut.mul(y, z))));
    CHECK(ut.equal(ut.mul(x, ut.inverse(x)), ut.identity()));
    CHECK(ut.equal(ut.mul(ut.inverse(x), x), ut.identity()));
    CHECK(ut.equal(ut.mul(x, ut.identity()), x));
  }
  UniTriangular3::Elem p{Rat(1), Rat(0), Rat(0)}, q{Rat(0), Rat(0), Rat(1)};
  CHECK_FALSE(ut.equal(ut.mul(p, q), ut.mul(q, p)));
}

TEST_CASE("loop validation rejects open paths") {
  CircleGroup s1;
  UniTriangular3 ut;
  CHECK_THROWS_AS(s1.validate_loop({PLFunc({Rat(0), Rat(1)}, {rat(1, 2), rat(3, 2)})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(s1.validate_loop({PLFunc({Rat(0), Rat(1)}, {Rat(0), rat(1, 2)})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      ut.validate_loop({PLFunc(), PLFunc({Rat(0), Rat(1)}, {Rat(0), Rat(1)}), PLFunc()}),
      std::invalid_argument);
  CHECK_THROWS_AS(patch(s1, rotation_cactus(Rat(0)),
                        {{PLFunc({Rat(0), Rat(1)}, {Rat(0), rat(1, 3)})}}),
                  std::invalid_argument);
}

TEST_CASE("lobe meetings reflect the treelike structure") {
  // two lobes joined at the common basepoint
  auto ms = lobe_meetings(pontrjagin_cactus());
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].i == 1);
  CHECK(ms[0].j == 2);
  CHECK(ms[0].point == TorusPoint{Rat(0), Rat(0)});
  CHECK(lobes_through(pontrjagin_cactus(), {Rat(0), Rat(0)}) == std::vector<int>{1, 2});
  CHECK(lobes_through(pontrjagin_cactus(), {rat(1, 3), Rat(0)}) == std::vector<int>{1});

  Rng rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    int arity = 2 + static_cast<int>(pick(rng, 2));
    Cactus c = random_cactus(rng, arity);
    auto meets = lobe_meetings(c);
    // a tree on n lobes has at least n-1 meetings; flowers can share one
    // point among several lobes, giving more pairs
    CHECK(meets.size() >= static_cast<std::size_t>(arity - 1));
    for (const auto& m : meets) {
      auto through = lobes_through(c, m.point);
      CHECK(std::find(through.begin(), through.end(), m.i) != through.end());
      CHECK(std::find(through.begin(), through.end(), m.j) != through.end());
    }
  }
}

TEST_CASE("patching solves the marked point and intersection constraints") {
  CircleGroup s1;
  UniTriangular3 ut;

  SUBCASE("single lobe, marked point at the basepoint") {
    auto loop = LoopChannels{PLFunc({Rat(0), rat(1, 2), Rat(1)}, {Rat(0), rat(3, 4), Rat(1)})};
    auto pm = patch(s1, rotation_cactus(Rat(0)), {loop});
    CHECK(pm.translations[0] == s1.identity());
    for (int k = 0; k < 8; ++k) {
      Rat u = rat(k, 8);
      CHECK(patched_eval_on_lobe(s1, pm, 1, u) == s1.eval_loop(loop, u));
    }
  }

  SUBCASE("rotated marked point translates by the inverse value") {
    Rat s = rat(1, 3);
    Rng rng(5);
    auto loop = random_circle_loop(rng);
    auto pm = patch(s1, rotation_cactus(s), {loop});
    CHECK(pm.translations[0] == s1.inverse(s1.eval_loop(loop, s)));

    auto mloop = random_ut3_loop(rng);
    auto mpm = patch(ut, rotation_cactus(s), {mloop});
    CHECK(ut.equal(mpm.translations[0], ut.inverse(ut.eval_loop(mloop, s))));
  }

  SUBCASE("both lobes attach at the identity point") {
    Rng rng(9);
    auto pm = patch(s1, pontrjagin_cactus(), {random_circle_loop(rng), random_circle_loop(rng)});
    CHECK(pm.translations[0] == s1.identity());
    CHECK(pm.translations[1] == s1.identity());
    auto mpm = patch(ut, pontrjagin_cactus(), {random_ut3_loop(rng), random_ut3_loop(rng)});
    CHECK(ut.equal(mpm.translations[0], ut.identity()));
    CHECK(ut.equal(mpm.translations[1], ut.identity()));
  }

  SUBCASE("random cacti: constraints hold and traversal order is irrelevant") {
    Rng rng(41);
    for (int trial = 0; trial < 30; ++trial) {
      int arity = 1 + static_cast<int>(pick(rng, 3));
      Cactus c = random_cactus(rng, arity);
      std::vector<LoopChannels> loops;
      for (int i = 0; i < arity; ++i) loops.push_back(random_circle_loop(rng));
      auto pm = patch(s1, c, loops);
      auto pm_rev = patch(s1, c, loops, true);
      CHECK(pm.translations == pm_rev.translations);
      TorusPoint marked = cactus_boundary_out(c, Rat(0));
      for (int i : lobes_through(c, marked))
        CHECK(patched_eval_on_lobe(s1, pm, i, marked[static_cast<std::size_t>(i - 1)]) ==
              s1.identity());
      for (const auto& m : lobe_meetings(c))
        CHECK(patched_eval_on_lobe(s1, pm, m.i, m.point[static_cast<std::size_t>(m.i - 1)]) ==
              patched_eval_on_lobe(s1, pm, m.j, m.point[static_cast<std::size_t>(m.j - 1)]));

      std::vector<LoopChannels> mloops;
      for (int i = 0; i < arity; ++i) mloops.push_back(random_ut3_loop(rng));
      auto mpm = patch(ut, c, mloops);
      auto mpm_rev = patch(ut, c, mloops, true);
      for (int i = 0; i < arity; ++i)
        CHECK(ut.equal(mpm.translations[static_cast<std::size_t>(i)],
                       mpm_rev.translations[static_cast<std::size_t>(i)]));
      for (const auto& m : lobe_meetings(c))
        CHECK(ut.equal(
            patched_eval_on_lobe(ut, mpm, m.i, m.point[static_cast<std::size_t>(m.i - 1)]),
            patched_eval_on_lobe(ut, mpm, m.j, m.point[static_cast<std::size_t>(m.j - 1)])));
    }
  }

  SUBCASE("wrong loop count is rejected") {
    Rng rng(3);
    auto only = random_circle_loop(rng);
    CHECK_THROWS_AS(patch(s1, pontrjagin_cactus(), {only}), std::invalid_argument);
  }
}

TEST_CASE("the action reproduces the named operations") {
  CircleGroup s1;
  UniTriangular3 ut;

  SUBCASE("unit cactus acts as the identity") {
    Rng rng(51);
    for (int trial = 0; trial < 10; ++trial) {
      auto loop = random_circle_loop(rng);
      CHECK(omega(s1, rotation_cactus(Rat(0)), {loop}) == loop);
      auto mloop = random_ut3_loop(rng);
      CHECK(omega(ut, rotation_cactus(Rat(0)), {mloop}) == mloop);
    }
  }

  SUBCASE("pontrjagin cactus concatenates at double speed") {
    // explicit: half turn forward then a full backward turn
    LoopChannels l1{PLFunc({Rat(0), rat(1, 2), Rat(1)}, {Rat(0), rat(3, 4), Rat(1)})};
    LoopChannels l2{PLFunc({Rat(0), Rat(1)}, {Rat(0), Rat(-1)})};
    auto got = omega(s1, pontrjagin_cactus(), {l1, l2});
    CHECK(got == concat_loops(s1, l1, l2));
    CHECK(got[0].eval(rat(1, 4)) == rat(3, 4));  // halfway through the first loop
    CHECK(got[0].eval(rat(3, 4)) == rat(1, 2));  // halfway down the second

    Rng rng(52);
    for (int trial = 0; trial < 10; ++trial) {
      auto a = random_circle_loop(rng), b = random_circle_loop(rng);
      CHECK(omega(s1, pontrjagin_cactus(), {a, b}) == concat_loops(s1, a, b));
      auto ma = random_ut3_loop(rng), mb = random_ut3_loop(rng);
      CHECK(omega(ut, pontrjagin_cactus(), {ma, mb}) == concat_loops(ut, ma, mb));
    }
  }

  SUBCASE("rotation cactus gives the loop rotation formula") {
    Rng rng(53);
    for (const Rat& s : {rat(1, 3), rat(5, 8), rat(11, 12)}) {
      auto loop = random_circle_loop(rng);
      auto got = omega(s1, rotation_cactus(s), {loop});
      CHECK(got == LoopChannels{rotate_channel(loop[0], s)});
      check_pointwise_rotation(s1, loop, got, s);

      auto mloop = random_ut3_loop(rng);
      auto mgot = omega(ut, rotation_cactus(s), {mloop});
      Rat as = mloop[0].eval_periodic(s);
      LoopChannels expect{rotate_channel(mloop[0], s),
                          pl_add(rotate_channel(mloop[1], s),
                                 pl_affine(-as, rotate_channel(mloop[2], s), Rat(0))),
                          rotate_channel(mloop[2], s)};
      CHECK(mgot == expect);
      check_pointwise_rotation(ut, mloop, mgot, s);
    }
  }

  SUBCASE("rotating by s then s' is rotating by s + s'") {
    Rng rng(54);
    for (int trial = 0; trial < 10; ++trial) {
      Rat s = random_unit_rat(rng, 12), s2 = random_unit_rat(rng, 12);
      auto loop = random_circle_loop(rng);
      auto once = omega(s1, rotation_cactus(s2), {loop});
      auto twice = omega(s1, rotation_cactus(s), {once});
      CHECK(twice == omega(s1, rotation_cactus(rat_mod1(s + s2)), {loop}));
    }
  }

  SUBCASE("the action is equivariant") {
    CircleGroup grp;
    Rng rng(55);
    for (int trial = 0; trial < 15; ++trial) {
      int arity = 2 + static_cast<int>(pick(rng, 2));
      Cactus c = random_cactus(rng, arity);
      Perm s(random_permutation(rng, arity));
      Perm sinv = s.inverse();
      std::vector<LoopChannels> loops;
      for (int i = 0; i < arity; ++i) loops.push_back(random_circle_loop(rng));
      std::vector<LoopChannels> pre;
      for (int k = 0; k < arity; ++k) pre.push_back(loops[static_cast<std::size_t>(sinv(k))]);
      CHECK(omega(grp, cacti_sigma_act(c, s), loops) == omega(grp, c, pre));
    }
  }
}

TEST_CASE("the action is associative") {
  CircleGroup s1;
  UniTriangular3 ut;

  SUBCASE("all units") {
    Rng rng(61);
    auto loop = random_circle_loop(rng);
    CHECK(check_algebra_associativity(s1, rotation_cactus(Rat(0)), {rotation_cactus(Rat(0))},
                                      {loop}));
  }

  SUBCASE("nested pontrjagin products concatenate four loops") {
    Rng rng(62);
    std::vector<LoopChannels> loops;
    for (int i = 0; i < 4; ++i) loops.push_back(random_ut3_loop(rng));
    Cactus cp = pontrjagin_cactus();
    CHECK(check_algebra_associativity(ut, cp, {cp, cp}, loops));
    auto whole = omega(ut, cacti_gamma(cp, {cp, cp}), loops);
    auto expect = concat_loops(ut, concat_loops(ut, loops[0], loops[1]),
                               concat_loops(ut, loops[2], loops[3]));
    CHECK(whole == expect);
  }

  SUBCASE("random composites, circle group") {
    Rng rng(63);
    for (int trial = 0; trial < 25; ++trial) {
      int n = 1 + static_cast<int>(pick(rng, 2));
      Cactus c = random_cactus(rng, n);
      std::vector<Cactus> ds;
      std::vector<LoopChannels> loops;
      for (int i = 0; i < n; ++i) {
        int m = 1 + static_cast<int>(pick(rng, 2));
        ds.push_back(random_cactus(rng, m));
        for (int j = 0; j < m; ++j) loops.push_back(random_circle_loop(rng));
      }
      CHECK(check_algebra_associativity(s1, c, ds, loops));
    }
  }

  SUBCASE("random composites, matrix group") {
    Rng rng(64);
    for (int trial = 0; trial < 12; ++trial) {
      int n = 1 + static_cast<int>(pick(rng, 2));
      Cactus c = random_cactus(rng, n);
      std::vector<Cactus> ds;
      std::vector<LoopChannels> loops;
      for (int i = 0; i < n; ++i) {
        int m = 1 + static_cast<int>(pick(rng, 2));
        ds.push_back(random_cactus(rng, m));
        for (int j = 0; j < m; ++j) loops.push_back(random_ut3_loop(rng));
      }
      CHECK(check_algebra_associativity(ut, c, ds, loops));
    }
  }

  SUBCASE("mismatched loop counts are rejected") {
    Rng rng(65);
    auto loop = random_circle_loop(rng);
    CHECK_THROWS_AS(
        check_algebra_associativity(s1, pontrjagin_cactus(), {pontrjagin_cactus()}, {loop}),
        std::invalid_argument);
  }
}
