#include "cactuslab/sampling.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cactuslab {

Rat random_unit_rat(Rng& rng, unsigned max_den) {
  unsigned den = 1 + static_cast<unsigned>(pick(rng, max_den));
  unsigned num = static_cast<unsigned>(pick(rng, den));
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat random_rat_between(Rng& rng, const Rat& lo, const Rat& hi, unsigned max_den) {
  unsigned k = 1 + static_cast<unsigned>(pick(rng, max_den - 1));
  Rat t(k, max_den);
  t.canonicalize();
  Rat r = lo + (hi - lo) * t;
  r.canonicalize();
  return r;
}

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  for (int k = n - 1; k > 0; --k)
    std::swap(p[static_cast<std::size_t>(k)], p[pick(rng, static_cast<std::size_t>(k) + 1)]);
  return p;
}

PRBElement random_prb(Rng& rng, int n, int word_len) {
  PRBElement out = PRBElement::identity(n);
  for (int step = 0; step < word_len; ++step) {
    PRBElement g = PRBElement::identity(n);
    switch (pick(rng, n >= 2 ? 2 : 1)) {
      case 0: {
        std::vector<long> t(static_cast<std::size_t>(n), 0);
        t[pick(rng, static_cast<std::size_t>(n))] = pick(rng, 2) ? 1 : -1;
        g = PRBElement(BraidAut::identity(n), std::move(t));
        break;
      }
      case 1: {
        int i = 1 + static_cast<int>(pick(rng, static_cast<std::size_t>(n - 1)));
        int j = i + 1 + static_cast<int>(pick(rng, static_cast<std::size_t>(n - i)));
        BraidAut a = alpha_generator(i, j, n);
        if (pick(rng, 2)) a = inverse(a);
        g = PRBElement(a, std::vector<long>(static_cast<std::size_t>(n), 0));
        break;
      }
    }
    out = multiply(out, g);
  }
  return out;
}

UnitCirclePoint random_circle_point(Rng& rng) {
  switch (pick(rng, 8)) {
    case 0:
      return UnitCirclePoint(RationalComplex(Rat(-1), Rat(0)));
    case 1:
      return UnitCirclePoint(RationalComplex(Rat(0), Rat(1)));
    case 2:
      return UnitCirclePoint(RationalComplex(Rat(0), Rat(-1)));
    default: {
      int num = static_cast<int>(pick(rng, 33)) - 16;
      unsigned den = 1 + static_cast<unsigned>(pick(rng, 8));
      Rat t(num, den);
      t.canonicalize();
      return UnitCirclePoint::from_tan_half(t);
    }
  }
}

FramedDiscConfig random_disc_config(Rng& rng, int arity) {
  if (arity == 0) return FramedDiscConfig(std::vector<LittleDisc>{});
  for (int attempt = 0; attempt < 60; ++attempt) {
    std::vector<LittleDisc> discs;
    for (int i = 0; i < arity; ++i) {
      unsigned den = 8 + static_cast<unsigned>(pick(rng, 9));
      Rat r(1 + static_cast<unsigned>(pick(rng, den / 8)), den);
      r.canonicalize();
      Rat cx(static_cast<long>(pick(rng, 25)) - 12, 16);
      Rat cy(static_cast<long>(pick(rng, 25)) - 12, 16);
      cx.canonicalize();
      cy.canonicalize();
      discs.push_back(LittleDisc{RationalComplex(cx, cy), r, random_circle_point(rng)});
    }
    try {
      return FramedDiscConfig(std::move(discs));
    } catch (const std::invalid_argument&) {
      continue;
    }
  }
  // guaranteed-valid fallback: a row of small discs with random frames
  Rat r(1, 2 * arity + static_cast<long>(pick(rng, 4)));
  r.canonicalize();
  FramedDiscConfig row = base_config(arity, r);
  std::vector<LittleDisc> discs = row.discs();
  for (LittleDisc& d : discs) d.frame = random_circle_point(rng);
  return FramedDiscConfig(std::move(discs));
}

Cactus random_cactus(Rng& rng, int arity) {
  static std::map<int, std::vector<std::vector<int>>> cell_cache;
  auto& cells = cell_cache[arity];
  if (cells.empty()) cells = enumerate_cells(arity);
  const auto& labels = cells[pick(rng, cells.size())];
  std::size_t k = labels.size();
  std::vector<long> weight(k);
  long total = 0;
  for (auto& w : weight) {
    w = 1 + static_cast<long>(pick(rng, 8));
    total += w;
  }
  std::vector<Rat> bounds{Rat(0)};
  long acc = 0;
  for (std::size_t m = 0; m < k; ++m) {
    acc += weight[m];
    Rat b(acc, total);
    b.canonicalize();
    bounds.push_back(b);
  }
  // how fast each arc winds: rises normalized per coordinate
  std::vector<long> rise(k);
  std::vector<long> rise_total(static_cast<std::size_t>(arity) + 1, 0);
  for (std::size_t m = 0; m < k; ++m) {
    rise[m] = 1 + static_cast<long>(pick(rng, 8));
    rise_total[static_cast<std::size_t>(labels[m])] += rise[m];
  }
  std::vector<PLCircleMap> coords;
  for (int j = 1; j <= arity; ++j) {
    std::vector<Rat> t{Rat(0)};
    std::vector<Rat> v{random_unit_rat(rng, 16)};
    for (std::size_t m = 0; m < k; ++m) {
      Rat b = bounds[m + 1];
      Rat v_now = v.back();
      if (labels[m] == j) {
        Rat gain(rise[m], rise_total[static_cast<std::size_t>(j)]);
        gain.canonicalize();
        if (pick(rng, 3) == 0) {
          // kink the arc: pass through a point off the straight line
          Rat tm = random_rat_between(rng, bounds[m], b);
          Rat vm = v_now + gain * random_rat_between(rng, Rat(0), Rat(1));
          t.push_back(tm);
          v.push_back(Rat(vm));
        }
        t.push_back(b);
        v.push_back(Rat(v_now + gain));
      } else {
        t.push_back(b);
        v.push_back(v_now);
      }
    }
    coords.emplace_back(std::move(t), std::move(v));
  }
  return Cactus(arity, std::move(coords));
}

namespace {

// PL channel from 0 at t=0 to end_value at t=1, with random interior
// breakpoints and values
PLFunc random_channel(Rng& rng, const Rat& end_value, int max_interior) {
  std::set<Rat> cutset;
  std::size_t want = pick(rng, static_cast<std::size_t>(max_interior) + 1);
  for (int guard = 0; cutset.size() < want && guard < 40; ++guard) {
    Rat t(1 + static_cast<long>(pick(rng, 11)), 12);
    t.canonicalize();
    cutset.insert(t);
  }
  std::vector<Rat> breaks{Rat(0)}, values{Rat(0)};
  for (const Rat& t : cutset) {
    Rat v(static_cast<long>(pick(rng, 25)) - 12, 6);
    v.canonicalize();
    breaks.push_back(t);
    values.push_back(v);
  }
  breaks.push_back(Rat(1));
  values.push_back(end_value);
  return PLFunc(std::move(breaks), std::move(values));
}

}  // namespace

LoopChannels random_circle_loop(Rng& rng, int max_interior) {
  Rat degree(static_cast<long>(pick(rng, 4)) - 1);
  return {random_channel(rng, degree, max_interior)};
}

LoopChannels random_ut3_loop(Rng& rng, int max_interior) {
  LoopChannels out;
  for (int k = 0; k < 3; ++k) out.push_back(random_channel(rng, Rat(0), max_interior));
  return out;
}

namespace {

// full n x n coordinate grid (diagonal unused) squeezed into anchor rows
SegmentConfig config_from_grid(int n, const std::vector<std::vector<Rat>>& grid) {
  std::vector<std::vector<Rat>> rows;
  for (int i = 1; i <= n; ++i) {
    std::vector<Rat> row;
    for (int k = 1; k <= n; ++k)
      if (k != i) row.push_back(grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
    rows.push_back(std::move(row));
  }
  return SegmentConfig(n, std::move(rows));
}

}  // namespace

SegmentConfig random_segment_config(Rng& rng, int n) {
  if (n == 1) return SegmentConfig(1, {{}});
  for (int attempt = 0; attempt < 60; ++attempt) {
    std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::pair<int, int>> wanted;
    std::vector<std::vector<Rat>> grid(static_cast<std::size_t>(n) + 1,
                                       std::vector<Rat>(static_cast<std::size_t>(n) + 1));
    for (int k = 1; k <= n; ++k) grid[1][static_cast<std::size_t>(k)] = random_unit_rat(rng, 10);
    for (int i = 2; i <= n; ++i) {
      int m = 1 + static_cast<int>(pick(rng, static_cast<std::size_t>(i - 1)));
      parent[static_cast<std::size_t>(i)] = m;
      wanted.emplace_back(m, i);
      for (int k = 1; k <= n; ++k)
        grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
            (k == m) ? random_unit_rat(rng, 10) : grid[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
    }
    std::sort(wanted.begin(), wanted.end());
    SegmentConfig cfg = config_from_grid(n, grid);
    if (intersection_graph(cfg) == wanted) return cfg;
  }
  // guaranteed chain: segment i crosses segment i-1 at 1/2, everything
  // else frozen at 2/3 so no other pair matches up
  std::vector<std::vector<Rat>> grid(static_cast<std::size_t>(n) + 1,
                                     std::vector<Rat>(static_cast<std::size_t>(n) + 1, Rat(2, 3)));
  for (int i = 2; i <= n; ++i)
    for (int k = 1; k <= n; ++k)
      grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
          (k == i - 1) ? Rat(1, 2) : grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)];
  return config_from_grid(n, grid);
}

WElement random_welement(Rng& rng, int n, int word_len) {
  WElement out = WElement::identity(n);
  for (int step = 0; step < word_len; ++step) {
    WElement g;
    if (n >= 2 && pick(rng, 2)) {
      int i = 1 + static_cast<int>(pick(rng, static_cast<std::size_t>(n - 1)));
      int j = i + 1 + static_cast<int>(pick(rng, static_cast<std::size_t>(n - i)));
      PRBElement p(alpha_generator(i, j, n), std::vector<long>(static_cast<std::size_t>(n), 0));
      g = lambda_inverse(pick(rng, 2) ? inverse(p) : p);
    } else {
      g = WElement::zeta(n, 1 + static_cast<int>(pick(rng, static_cast<std::size_t>(n))));
      if (pick(rng, 2)) g = w_invert(g);
    }
    out = w_multiply(out, g);
  }
  return out;
}

}  // namespace cactuslab
