#include "cactuslab/cacti.hpp"

#include <algorithm>
#include <stdexcept>

namespace cactuslab {

TorusPoint normalize_torus(TorusPoint p) {
  for (auto& x : p) x = rat_mod1(x);
  return p;
}

namespace {

// would appending label to seq create an i..label..i..label pattern?
bool append_makes_alternation(const std::vector<int>& seq, int label) {
  for (int i : seq) {
    if (i == label) continue;
    // look for i, then label, then i again
    int stage = 0;
    for (int s : seq) {
      if (stage == 0 && s == i) stage = 1;
      else if (stage == 1 && s == label) stage = 2;
      else if (stage == 2 && s == i) { stage = 3; break; }
    }
    if (stage == 3) return true;
  }
  return false;
}

// first alternating pair in a label sequence, or {0,0}
std::pair<int, int> find_alternation(const std::vector<int>& seq) {
  std::vector<int> prefix;
  for (int label : seq) {
    for (int i : prefix) {
      if (i == label) continue;
      int stage = 0;
      for (int s : prefix) {
        if (stage == 0 && s == i) stage = 1;
        else if (stage == 1 && s == label) stage = 2;
        else if (stage == 2 && s == i) { stage = 3; break; }
      }
      if (stage == 3) return {i, label};
    }
    prefix.push_back(label);
  }
  return {0, 0};
}

std::vector<IntervalPiece> tiling_pieces(int n, const std::vector<PLCircleMap>& coords) {
  std::vector<IntervalPiece> pieces;
  for (int j = 1; j <= n; ++j)
    for (const auto& [a, b] : support_components(coords[j - 1]))
      pieces.push_back({j, a, b});
  std::sort(pieces.begin(), pieces.end(), [](const IntervalPiece& x, const IntervalPiece& y) {
    if (x.start != y.start) return x.start < y.start;
    if (x.end != y.end) return x.end < y.end;
    return x.label < y.label;
  });
  return pieces;
}

}  // namespace

bool is_valid_cell_sequence(int n, const std::vector<int>& labels) {
  if (n < 1 || labels.empty()) return false;
  std::vector<bool> seen(n + 1, false);
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k] < 1 || labels[k] > n) return false;
    if (k > 0 && labels[k] == labels[k - 1]) return false;
    seen[labels[k]] = true;
  }
  for (int j = 1; j <= n; ++j)
    if (!seen[j]) return false;
  return find_alternation(labels).first == 0;
}

CactusCheck validate_cactus(int n, const std::vector<PLCircleMap>& coords) {
  if (n < 1) return {false, "cactus needs at least one lobe"};
  if (static_cast<int>(coords.size()) != n)
    return {false, "expected " + std::to_string(n) + " coordinate maps, got " + std::to_string(coords.size())};
  for (int j = 1; j <= n; ++j)
    if (coords[j - 1].degree() != 1)
      return {false, "coordinate " + std::to_string(j) + " must wind exactly once"};
  auto pieces = tiling_pieces(n, coords);
  Rat cursor(0);
  for (const auto& piece : pieces) {
    if (piece.start != cursor) {
      const char* kind = piece.start > cursor ? "gap" : "overlap";
      return {false, std::string("supports do not tile the circle: ") + kind + " at " + rat_str(cursor)};
    }
    cursor = piece.end;
  }
  if (cursor != 1) return {false, "supports do not tile the circle: gap at " + rat_str(cursor)};
  std::vector<int> labels;
  for (const auto& piece : pieces) labels.push_back(piece.label);
  for (std::size_t k = 1; k < labels.size(); ++k)
    if (labels[k] == labels[k - 1])
      return {false, "support arcs of lobe " + std::to_string(labels[k]) + " touch without merging"};
  auto [i, j] = find_alternation(labels);
  if (i != 0)
    return {false, "not treelike: lobes " + std::to_string(i) + " and " + std::to_string(j) + " alternate"};
  return {};
}

Cactus::Cactus(int n, std::vector<PLCircleMap> coords) : n_(n), coords_(std::move(coords)) {
  CactusCheck check = validate_cactus(n_, coords_);
  if (!check.ok) throw std::invalid_argument(check.message);
}

std::vector<IntervalPiece> Cactus::interval_sequence() const { return tiling_pieces(n_, coords_); }

std::vector<int> Cactus::cell() const {
  std::vector<int> labels;
  for (const auto& piece : interval_sequence()) labels.push_back(piece.label);
  return labels;
}

TorusPoint Cactus::lobe_point(int i) const {
  if (i < 1 || i > n_) throw std::invalid_argument("lobe index out of range");
  TorusPoint x(n_, Rat(0));
  bool first = true;
  for (const auto& piece : interval_sequence()) {
    if (piece.label != i) continue;
    for (int k = 1; k <= n_; ++k) {
      if (k == i) continue;
      Rat value = coord(k).eval_mod1(piece.start);
      if (first)
        x[k - 1] = value;
      else if (x[k - 1] != value)
        throw std::logic_error("lobe coordinates disagree between support arcs");
    }
    first = false;
  }
  return x;
}

Cactus base_cactus(int n) {
  if (n < 1) throw std::invalid_argument("base cactus needs at least one lobe");
  std::vector<PLCircleMap> coords;
  for (int j = 1; j <= n; ++j) {
    Rat a(n - j, n), b(n - j + 1, n);
    a.canonicalize();
    b.canonicalize();
    std::vector<Rat> t{Rat(0)}, v{Rat(0)};
    if (a > 0) { t.push_back(a); v.push_back(Rat(0)); }
    t.push_back(b);
    v.push_back(Rat(1));
    if (b < 1) { t.push_back(Rat(1)); v.push_back(Rat(1)); }
    coords.emplace_back(std::move(t), std::move(v));
  }
  return Cactus(n, std::move(coords));
}

Cactus rotation_cactus(const Rat& s) { return Cactus(1, {PLCircleMap::rotation(s)}); }

Cactus pontrjagin_cactus() { return cacti_sigma_act(base_cactus(2), Perm({1, 0})); }

Cactus compose_cacti(const Cactus& a, int i, const Cactus& b) {
  int n = a.arity(), m = b.arity();
  if (i < 1 || i > n) throw std::invalid_argument("composition slot out of range");
  std::vector<PLCircleMap> coords;
  coords.reserve(n - 1 + m);
  for (int k = 1; k < i; ++k) coords.push_back(a.coord(k));
  for (int j = 1; j <= m; ++j) coords.push_back(pl_compose(b.coord(j), a.coord(i)));
  for (int k = i + 1; k <= n; ++k) coords.push_back(a.coord(k));
  return Cactus(n - 1 + m, std::move(coords));
}

Cactus cacti_gamma(const Cactus& a, const std::vector<Cactus>& bs) {
  if (static_cast<int>(bs.size()) != a.arity())
    throw std::invalid_argument("gamma needs one argument per lobe");
  Cactus result = a;
  for (int i = a.arity(); i >= 1; --i) result = compose_cacti(result, i, bs[i - 1]);
  return result;
}

Cactus cacti_sigma_act(const Cactus& a, const Perm& s) {
  if (s.size() != a.arity()) throw std::invalid_argument("permutation size must match arity");
  std::vector<PLCircleMap> coords;
  for (int k = 0; k < a.arity(); ++k) coords.push_back(a.coord(s(k) + 1));
  return Cactus(a.arity(), std::move(coords));
}

std::vector<AxisSegment> realization_segments(const Cactus& c) {
  std::vector<AxisSegment> segs;
  for (const auto& piece : c.interval_sequence()) {
    AxisSegment seg;
    seg.axis = piece.label;
    seg.fixed.assign(c.arity(), Rat(0));
    for (int k = 1; k <= c.arity(); ++k)
      if (k != piece.label) seg.fixed[k - 1] = c.coord(k).eval_mod1(piece.start);
    seg.lo = c.coord(piece.label).eval(piece.start);
    seg.hi = c.coord(piece.label).eval(piece.end);
    segs.push_back(std::move(seg));
  }
  return segs;
}

bool realization_contains(const Cactus& c, const TorusPoint& p) {
  if (static_cast<int>(p.size()) != c.arity())
    throw std::invalid_argument("point dimension must match arity");
  TorusPoint q = normalize_torus(p);
  for (const auto& seg : realization_segments(c)) {
    bool match = true;
    for (int k = 1; k <= c.arity() && match; ++k)
      if (k != seg.axis && q[k - 1] != seg.fixed[k - 1]) match = false;
    if (match && circle_value_in_lift_interval(q[seg.axis - 1], seg.lo, seg.hi)) return true;
  }
  return false;
}

TorusPoint cactus_boundary_in(const Cactus& c, int i, const Rat& t) {
  TorusPoint x = c.lobe_point(i);
  x[i - 1] = rat_mod1(t);
  return x;
}

TorusPoint cactus_boundary_out(const Cactus& c, const Rat& t) {
  TorusPoint p;
  for (int k = 1; k <= c.arity(); ++k) p.push_back(c.coord(k).eval_mod1(t));
  return p;
}

TorusPoint cactus_sym_point(const Perm& s, const TorusPoint& p) {
  if (s.size() != static_cast<int>(p.size()))
    throw std::invalid_argument("permutation size must match point dimension");
  TorusPoint q(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) q[k] = p[s(static_cast<int>(k))];
  return normalize_torus(std::move(q));
}

TorusPoint cactus_lower_map(const Cactus& c, const std::vector<Cactus>& ds, const TorusPoint& p) {
  if (ds.size() != p.size() || static_cast<int>(p.size()) != c.arity())
    throw std::invalid_argument("lower map needs one coordinate per lobe");
  TorusPoint out;
  for (int k = 1; k <= c.arity(); ++k)
    for (int j = 1; j <= ds[k - 1].arity(); ++j)
      out.push_back(ds[k - 1].coord(j).eval_mod1(p[k - 1]));
  return out;
}

TorusPoint cactus_right_map(const Cactus& c, const std::vector<Cactus>& ds, int i, const TorusPoint& q) {
  if (static_cast<int>(ds.size()) != c.arity()) throw std::invalid_argument("need one cactus per lobe");
  if (static_cast<int>(q.size()) != ds[i - 1].arity())
    throw std::invalid_argument("point dimension must match glued cactus");
  TorusPoint x = c.lobe_point(i);
  TorusPoint out;
  for (int k = 1; k <= c.arity(); ++k) {
    if (k == i) {
      for (const Rat& value : q) out.push_back(rat_mod1(value));
    } else {
      for (int j = 1; j <= ds[k - 1].arity(); ++j)
        out.push_back(ds[k - 1].coord(j).eval_mod1(x[k - 1]));
    }
  }
  return out;
}

bool in_right_image(const Cactus& c, const std::vector<Cactus>& ds, int i, const TorusPoint& p) {
  TorusPoint q = normalize_torus(p);
  TorusPoint x = c.lobe_point(i);
  std::size_t off = 0;
  for (int k = 1; k <= c.arity(); ++k) {
    const Cactus& d = ds[k - 1];
    if (k == i) {
      TorusPoint block(q.begin() + off, q.begin() + off + d.arity());
      if (!realization_contains(d, block)) return false;
    } else {
      for (int j = 1; j <= d.arity(); ++j)
        if (q[off + j - 1] != d.coord(j).eval_mod1(x[k - 1])) return false;
    }
    off += d.arity();
  }
  return true;
}

bool on_glued_circle(const Cactus& c, const std::vector<Cactus>& ds, int i, const TorusPoint& p) {
  // the i-th glued circle is the whole output loop of ds[i-1], whose
  // image is exactly that cactus' realization, so the two tests agree
  return in_right_image(c, ds, i, p);
}

bool in_lower_image(const Cactus& c, const std::vector<Cactus>& ds, const TorusPoint& p) {
  if (static_cast<int>(ds.size()) != c.arity()) throw std::invalid_argument("need one cactus per lobe");
  TorusPoint q = normalize_torus(p);
  std::vector<std::size_t> off(c.arity() + 1, 0);
  for (int k = 1; k <= c.arity(); ++k) off[k] = off[k - 1] + ds[k - 1].arity();
  for (const auto& seg : realization_segments(c)) {
    int i = seg.axis;
    bool outer_ok = true;
    for (int k = 1; k <= c.arity() && outer_ok; ++k) {
      if (k == i) continue;
      for (int j = 1; j <= ds[k - 1].arity(); ++j)
        if (q[off[k - 1] + j - 1] != ds[k - 1].coord(j).eval_mod1(seg.fixed[k - 1])) {
          outer_ok = false;
          break;
        }
    }
    if (!outer_ok) continue;
    // does d pass through the block values while the segment parameter
    // sweeps [lo,hi]?  Cut at translates of d's tiling boundaries so
    // each sub-arc stays inside a single lobe of d.
    const Cactus& d = ds[i - 1];
    std::vector<Rat> cuts{seg.lo, seg.hi};
    auto pieces = d.interval_sequence();
    std::vector<Rat> bounds{Rat(1)};
    for (const auto& piece : pieces) bounds.push_back(piece.start);
    for (const Rat& u : bounds) {
      Int mlo = rat_ceil(Rat(seg.lo - u));
      Int mhi = rat_floor(Rat(seg.hi - u));
      for (Int m = mlo; m <= mhi; ++m) cuts.push_back(Rat(u + Rat(m)));
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t a = 1; a < cuts.size(); ++a) {
      const Rat& s0 = cuts[a - 1];
      const Rat& s1 = cuts[a];
      Rat mid = rat_mod1(Rat((s0 + s1) / 2));
      int label = 0;
      for (const auto& piece : pieces)
        if (piece.start <= mid && mid <= piece.end) {
          label = piece.label;
          break;
        }
      if (label == 0) continue;  // unreachable: the pieces tile [0,1]
      bool match = true;
      for (int j = 1; j <= d.arity() && match; ++j) {
        if (j == label) continue;
        if (q[off[i - 1] + j - 1] != d.coord(j).eval_mod1(s0)) match = false;
      }
      if (match && circle_value_in_lift_interval(q[off[i - 1] + label - 1],
                                                 Rat(d.coord(label).eval_lift(s0)),
                                                 Rat(d.coord(label).eval_lift(s1))))
        return true;
    }
  }
  return false;
}

namespace {

void extend_cells(int n, int max_len, std::vector<int>& seq, std::vector<int>& counts, int missing,
                  std::vector<std::vector<int>>& out) {
  if (!seq.empty() && missing == 0) out.push_back(seq);
  if (static_cast<int>(seq.size()) == max_len) return;
  for (int label = 1; label <= n; ++label) {
    if (!seq.empty() && seq.back() == label) continue;
    if (append_makes_alternation(seq, label)) continue;
    seq.push_back(label);
    ++counts[label];
    int next_missing = counts[label] == 1 ? missing - 1 : missing;
    extend_cells(n, max_len, seq, counts, next_missing, out);
    --counts[label];
    seq.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_cells(int n, int max_len) {
  if (n < 1) throw std::invalid_argument("need at least one label");
  if (max_len <= 0) max_len = 2 * n - 1;
  std::vector<std::vector<int>> out;
  std::vector<int> seq;
  std::vector<int> counts(n + 1, 0);
  extend_cells(n, max_len, seq, counts, n, out);
  return out;
}

int cell_dimension(const std::vector<int>& labels) {
  int max_label = 0;
  for (int l : labels) max_label = std::max(max_label, l);
  std::vector<int> counts(max_label + 1, 0);
  for (int l : labels) ++counts[l];
  int dim = 0;
  for (int j = 1; j <= max_label; ++j)
    if (counts[j] > 0) dim += counts[j] - 1;
  return dim;
}

}  // namespace cactuslab
