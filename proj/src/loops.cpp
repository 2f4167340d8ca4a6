#include "cactuslab/loops.hpp"

#include <algorithm>

namespace cactuslab {

namespace {

bool collinear(const Rat& t0, const Rat& v0, const Rat& t1, const Rat& v1, const Rat& t2,
               const Rat& v2) {
  Rat lhs = (v1 - v0) * (t2 - t1);
  Rat rhs = (v2 - v1) * (t1 - t0);
  return lhs == rhs;
}

}  // namespace

PLFunc::PLFunc() : t_{Rat(0), Rat(1)}, v_{Rat(0), Rat(0)} {}

PLFunc::PLFunc(std::vector<Rat> breaks, std::vector<Rat> values) {
  if (breaks.size() != values.size() || breaks.size() < 2)
    throw std::invalid_argument("need matching breakpoint and value lists of size at least 2");
  if (breaks.front() != 0 || breaks.back() != 1)
    throw std::invalid_argument("breakpoints must start at 0 and end at 1");
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    if (!(breaks[i] < breaks[i + 1]))
      throw std::invalid_argument("breakpoints must be strictly increasing");
  t_.push_back(breaks.front());
  v_.push_back(values.front());
  for (std::size_t i = 1; i + 1 < breaks.size(); ++i) {
    if (collinear(t_.back(), v_.back(), breaks[i], values[i], breaks[i + 1], values[i + 1]))
      continue;  // redundant breakpoint
    t_.push_back(breaks[i]);
    v_.push_back(values[i]);
  }
  t_.push_back(breaks.back());
  v_.push_back(values.back());
}

PLFunc PLFunc::constant(const Rat& v) { return PLFunc({Rat(0), Rat(1)}, {v, v}); }

Rat PLFunc::eval(const Rat& t) const {
  if (t < 0 || t > 1) throw std::invalid_argument("parameter outside [0,1]");
  for (std::size_t i = 0; i + 1 < t_.size(); ++i) {
    if (t > t_[i + 1]) continue;
    Rat out = v_[i] + (v_[i + 1] - v_[i]) * (t - t_[i]) / (t_[i + 1] - t_[i]);
    return out;
  }
  return v_.back();
}

Rat PLFunc::period_shift() const {
  Rat s = v_.back() - v_.front();
  return s;
}

Rat PLFunc::eval_periodic(const Rat& u) const {
  Int m = rat_floor(u);
  Rat frac = u - Rat(m);
  Rat out = eval(frac) + Rat(m) * period_shift();
  return out;
}

PLFunc pl_add(const PLFunc& a, const PLFunc& b) {
  std::vector<Rat> cuts = a.breaks();
  cuts.insert(cuts.end(), b.breaks().begin(), b.breaks().end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Rat> vals;
  for (const Rat& t : cuts) vals.push_back(a.eval(t) + b.eval(t));
  return PLFunc(std::move(cuts), std::move(vals));
}

PLFunc pl_affine(const Rat& scale, const PLFunc& f, const Rat& offset) {
  std::vector<Rat> vals;
  for (const Rat& v : f.values()) vals.push_back(scale * v + offset);
  return PLFunc(f.breaks(), std::move(vals));
}

void CircleGroup::validate_loop(const Loop& g) const {
  if (g.size() != 1) throw std::invalid_argument("circle loop is a single lift channel");
  if (g[0].values().front() != 0)
    throw std::invalid_argument("circle loop lift must start at 0");
  if (g[0].period_shift().get_den() != 1)
    throw std::invalid_argument("circle loop must close up to an integer winding");
}

void CircleGroup::check_offsets(const std::vector<Rat>& diff) const {
  for (const Rat& d : diff)
    if (d.get_den() != 1)
      throw std::logic_error("circle lift pieces misaligned by a non-integer");
}

void UniTriangular3::validate_loop(const Loop& g) const {
  if (g.size() != 3) throw std::invalid_argument("matrix loop has three entry channels");
  for (const PLFunc& f : g)
    if (f.values().front() != 0 || f.values().back() != 0)
      throw std::invalid_argument("matrix loop entries must start and end at 0");
}

void UniTriangular3::check_offsets(const std::vector<Rat>& diff) const {
  for (const Rat& d : diff)
    if (d != 0) throw std::logic_error("matrix path pieces do not meet");
}

std::vector<LobeMeeting> lobe_meetings(const Cactus& c) {
  int n = c.arity();
  std::vector<LobeMeeting> out;
  for (int i = 1; i <= n; ++i) {
    TorusPoint li = c.lobe_point(i);
    for (int j = i + 1; j <= n; ++j) {
      TorusPoint lj = c.lobe_point(j);
      bool match = true;
      for (int k = 0; k < n; ++k) {
        if (k == i - 1 || k == j - 1) continue;
        if (li[static_cast<std::size_t>(k)] != lj[static_cast<std::size_t>(k)]) {
          match = false;
          break;
        }
      }
      if (!match) continue;
      TorusPoint p = li;
      p[static_cast<std::size_t>(i - 1)] = lj[static_cast<std::size_t>(i - 1)];
      out.push_back(LobeMeeting{i, j, std::move(p)});
    }
  }
  return out;
}

std::vector<int> lobes_through(const Cactus& c, const TorusPoint& p) {
  TorusPoint q = normalize_torus(p);
  int n = c.arity();
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    TorusPoint li = c.lobe_point(i);
    bool on = true;
    for (int k = 0; k < n; ++k) {
      if (k == i - 1) continue;
      if (q[static_cast<std::size_t>(k)] != li[static_cast<std::size_t>(k)]) {
        on = false;
        break;
      }
    }
    if (on) out.push_back(i);
  }
  return out;
}

}  // namespace cactuslab
