#include "cactuslab/pl.hpp"

#include <algorithm>
#include <stdexcept>

namespace cactuslab {

namespace {

void canonicalize(std::vector<Rat>& t, std::vector<Rat>& v) {
  // drop interior breakpoints where the slope does not change
  std::vector<Rat> ct, cv;
  ct.push_back(t.front());
  cv.push_back(v.front());
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    Rat left_rise = v[i] - cv.back();
    Rat left_run = t[i] - ct.back();
    Rat right_rise = v[i + 1] - v[i];
    Rat right_run = t[i + 1] - t[i];
    // slopes differ iff the cross products differ
    Rat lhs = left_rise * right_run;
    Rat rhs = right_rise * left_run;
    if (lhs != rhs) {
      ct.push_back(t[i]);
      cv.push_back(v[i]);
    }
  }
  ct.push_back(t.back());
  cv.push_back(v.back());
  t = std::move(ct);
  v = std::move(cv);
}

}  // namespace

PLCircleMap::PLCircleMap() : t_{Rat(0), Rat(1)}, v_{Rat(0), Rat(1)} {}

PLCircleMap::PLCircleMap(std::vector<Rat> breaks, std::vector<Rat> values)
    : t_(std::move(breaks)), v_(std::move(values)) {
  if (t_.size() < 2 || t_.size() != v_.size())
    throw std::invalid_argument("pl map needs matching breakpoint and value lists, at least two points");
  if (t_.front() != 0 || t_.back() != 1)
    throw std::invalid_argument("pl map breakpoints must start at 0 and end at 1");
  for (std::size_t i = 1; i < t_.size(); ++i) {
    if (t_[i] <= t_[i - 1]) throw std::invalid_argument("pl map breakpoints must strictly increase");
    if (v_[i] < v_[i - 1]) throw std::invalid_argument("pl map values must be nondecreasing");
  }
  Rat deg = v_.back() - v_.front();
  if (!is_integer(deg)) throw std::invalid_argument("pl circle map must change by an integer over a full turn");
  // shift the lift so the basepoint value lands in [0,1)
  Int shift = rat_floor(v_.front());
  if (shift != 0)
    for (auto& v : v_) v -= Rat(shift);
  canonicalize(t_, v_);
}

PLCircleMap PLCircleMap::rotation(const Rat& s) {
  Rat r = rat_mod1(s);
  return PLCircleMap({Rat(0), Rat(1)}, {r, Rat(r + 1)});
}

Int PLCircleMap::degree() const {
  Rat d = v_.back() - v_.front();
  return d.get_num();
}

Rat PLCircleMap::eval(const Rat& t) const {
  if (t < 0 || t > 1) throw std::invalid_argument("pl eval expects an argument in [0,1]");
  std::size_t i = 1;
  while (i + 1 < t_.size() && t > t_[i]) ++i;
  // t lies in [t_{i-1}, t_i]
  Rat run = t_[i] - t_[i - 1];
  Rat rise = v_[i] - v_[i - 1];
  return Rat(v_[i - 1] + rise * (t - t_[i - 1]) / run);
}

Rat PLCircleMap::eval_lift(const Rat& x) const {
  Int m = rat_floor(x);
  Rat frac = x - Rat(m);
  return Rat(eval(frac) + Rat(m) * Rat(degree()));
}

Rat PLCircleMap::eval_mod1(const Rat& t) const { return rat_mod1(eval_lift(t)); }

PLCircleMap pl_compose(const PLCircleMap& f, const PLCircleMap& g) {
  // breakpoints of f.g: those of g plus preimages under g of the
  // breakpoint lattice { f breakpoint + integer }
  std::vector<Rat> cuts = g.breaks();
  const auto& gt = g.breaks();
  const auto& gv = g.values();
  for (std::size_t i = 1; i < gt.size(); ++i) {
    const Rat& a = gt[i - 1];
    const Rat& b = gt[i];
    const Rat& va = gv[i - 1];
    const Rat& vb = gv[i];
    if (va == vb) continue;  // constant piece has no interior preimages
    for (const Rat& tb : f.breaks()) {
      // solve va <= tb + m <= vb over integers m
      Int lo = rat_ceil(Rat(va - tb));
      Int hi = rat_floor(Rat(vb - tb));
      for (Int m = lo; m <= hi; ++m) {
        Rat target = tb + Rat(m);
        Rat t = a + (target - va) * (b - a) / (vb - va);
        cuts.push_back(Rat(t));
      }
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Rat> vals;
  vals.reserve(cuts.size());
  for (const Rat& t : cuts) vals.push_back(f.eval_lift(g.eval(t)));
  return PLCircleMap(std::move(cuts), std::move(vals));
}

bool pl_equal(const PLCircleMap& a, const PLCircleMap& b) {
  std::vector<Rat> cuts = a.breaks();
  cuts.insert(cuts.end(), b.breaks().begin(), b.breaks().end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (const Rat& t : cuts)
    if (a.eval(t) != b.eval(t)) return false;
  return true;
}

std::vector<std::pair<Rat, Rat>> support_components(const PLCircleMap& f) {
  std::vector<std::pair<Rat, Rat>> out;
  const auto& t = f.breaks();
  const auto& v = f.values();
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (v[i] == v[i - 1]) continue;  // flat piece
    if (!out.empty() && out.back().second == t[i - 1])
      out.back().second = t[i];  // extend the running interval
    else
      out.emplace_back(t[i - 1], t[i]);
  }
  return out;
}

bool circle_value_in_lift_interval(const Rat& p, const Rat& lo, const Rat& hi) {
  Int m = rat_ceil(Rat(lo - p));
  return Rat(p + Rat(m)) <= hi;
}

}  // namespace cactuslab
