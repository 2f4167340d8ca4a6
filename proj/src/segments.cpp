#include "cactuslab/segments.hpp"

#include <algorithm>
#include <stdexcept>

namespace cactuslab {

namespace {

Rat rat_dist(const Rat& a, const Rat& b) {
  Rat d = a - b;
  if (d < 0) d = -d;
  return d;
}

bool unit_range(const Rat& t) { return t >= 0 && t <= 1; }

}  // namespace

SegmentConfig::SegmentConfig(int n, std::vector<std::vector<Rat>> anchors)
    : n_(n), anchors_(std::move(anchors)) {
  if (n_ < 1) throw std::invalid_argument("segment count must be positive");
  if (static_cast<int>(anchors_.size()) != n_)
    throw std::invalid_argument("anchor row count must match the segment count");
  for (const auto& row : anchors_)
    if (static_cast<int>(row.size()) != n_ - 1)
      throw std::invalid_argument("anchor rows need one entry per other axis");
}

const Rat& SegmentConfig::anchor(int i, int k) const {
  if (i < 1 || i > n_ || k < 1 || k > n_)
    throw std::invalid_argument("anchor index out of range");
  if (k == i) throw std::invalid_argument("a segment has no anchor on its own axis");
  return anchors_[i - 1][k < i ? k - 1 : k - 2];
}

std::vector<Rat> SegmentConfig::point_at(int i, const Rat& t) const {
  if (i < 1 || i > n_) throw std::invalid_argument("segment index out of range");
  std::vector<Rat> p(n_);
  for (int k = 1; k <= n_; ++k) p[k - 1] = (k == i) ? t : anchor(i, k);
  return p;
}

std::optional<Rat> SegmentConfig::segment_param(int i, const std::vector<Rat>& p) const {
  if (i < 1 || i > n_) throw std::invalid_argument("segment index out of range");
  if (static_cast<int>(p.size()) != n_)
    throw std::invalid_argument("point dimension must match the configuration");
  for (int k = 1; k <= n_; ++k)
    if (k != i && p[k - 1] != anchor(i, k)) return std::nullopt;
  if (!unit_range(p[i - 1])) return std::nullopt;
  return p[i - 1];
}

bool SegmentConfig::on_configuration(const std::vector<Rat>& p) const {
  for (int i = 1; i <= n_; ++i)
    if (on_segment(i, p)) return true;
  return false;
}

bool segments_adjacent(const SegmentConfig& cfg, int i, int j) {
  if (i == j) return false;
  int n = cfg.size();
  for (int k = 1; k <= n; ++k)
    if (k != i && k != j && cfg.anchor(i, k) != cfg.anchor(j, k)) return false;
  return unit_range(cfg.anchor(j, i)) && unit_range(cfg.anchor(i, j));
}

std::vector<Rat> intersection_point(const SegmentConfig& cfg, int i, int j) {
  if (!segments_adjacent(cfg, i, j)) throw std::invalid_argument("segments do not meet");
  // slot i carries the crossing parameter x^j_i; every other slot agrees
  // with segment i's anchors, slot j included
  return cfg.point_at(i, cfg.anchor(j, i));
}

std::vector<std::pair<int, int>> intersection_graph(const SegmentConfig& cfg) {
  std::vector<std::pair<int, int>> edges;
  int n = cfg.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (segments_adjacent(cfg, i, j)) edges.emplace_back(i, j);
  return edges;
}

bool validate_connected(const SegmentConfig& cfg) {
  int n = cfg.size();
  std::vector<std::vector<int>> adj(n + 1);
  for (auto [i, j] : intersection_graph(cfg)) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<char> seen(n + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  for (int i = 1; i <= n; ++i)
    if (!seen[i]) return false;
  return true;
}

int find_leaf(const SegmentConfig& cfg) {
  int n = cfg.size();
  if (n < 2) throw std::invalid_argument("need at least two segments to find a leaf");
  std::vector<int> degree(n + 1, 0);
  for (auto [i, j] : intersection_graph(cfg)) {
    ++degree[i];
    ++degree[j];
  }
  for (int i = 1; i <= n; ++i)
    if (degree[i] == 1) return i;
  throw std::logic_error("configuration has no leaf");
}

namespace {

// peeling state: the adjacency is fixed once, segments drop out of the
// active set as the endpoints walk inwards
struct peel_state {
  const SegmentConfig& cfg;
  std::vector<std::vector<char>> adj;  // 1-based matrix
  std::vector<char> active;

  explicit peel_state(const SegmentConfig& c)
      : cfg(c),
        adj(c.size() + 1, std::vector<char>(c.size() + 1, 0)),
        active(c.size() + 1, 1) {
    for (auto [i, j] : intersection_graph(c)) adj[i][j] = adj[j][i] = 1;
  }

  int lowest_common(const std::vector<Rat>& p, const std::vector<Rat>& q) const {
    for (int s = 1; s <= cfg.size(); ++s)
      if (active[s] && cfg.on_segment(s, p) && cfg.on_segment(s, q)) return s;
    return 0;
  }

  // lowest active segment meeting exactly one other active segment
  int induced_leaf() const {
    int leaf = 0;
    for (int i = 1; i <= cfg.size() && !leaf; ++i) {
      if (!active[i]) continue;
      int deg = 0;
      for (int j = 1; j <= cfg.size(); ++j)
        if (active[j] && adj[i][j]) ++deg;
      if (deg == 1) leaf = i;
    }
    if (!leaf) throw std::logic_error("configuration has no leaf");
    return leaf;
  }

  int sole_neighbour(int leaf) const {
    for (int j = 1; j <= cfg.size(); ++j)
      if (active[j] && adj[leaf][j]) return j;
    throw std::logic_error("configuration has no leaf");
  }

  bool exclusive(int leaf, const std::vector<Rat>& p) const {
    if (!cfg.on_segment(leaf, p)) return false;
    for (int j = 1; j <= cfg.size(); ++j)
      if (j != leaf && active[j] && cfg.on_segment(j, p)) return false;
    return true;
  }
};

PathPiece raw_piece(int segment, Rat from, Rat to) {
  int dir = to > from ? 1 : (to < from ? -1 : 1);
  return PathPiece{segment, std::move(from), std::move(to), dir, Rat(0), Rat(0)};
}

}  // namespace

AdaptedPath adapted_path(const SegmentConfig& cfg, const std::vector<Rat>& p,
                         const std::vector<Rat>& q) {
  if (!cfg.on_configuration(p) || !cfg.on_configuration(q))
    throw std::invalid_argument("endpoint is not on the configuration");
  if (!validate_connected(cfg))
    throw std::invalid_argument("configuration is not connected");

  peel_state st(cfg);
  std::vector<Rat> a = p, b = q;
  std::vector<PathPiece> prefix, suffix;  // suffix collected outward from q
  PathPiece middle{0, Rat(0), Rat(0), 1, Rat(0), Rat(0)};

  while (true) {
    if (int s = st.lowest_common(a, b)) {
      middle = raw_piece(s, *cfg.segment_param(s, a), *cfg.segment_param(s, b));
      break;
    }
    int leaf = st.induced_leaf();
    int stem = st.sole_neighbour(leaf);
    std::vector<Rat> join = intersection_point(cfg, leaf, stem);
    if (st.exclusive(leaf, a)) {
      prefix.push_back(raw_piece(leaf, *cfg.segment_param(leaf, a), cfg.anchor(stem, leaf)));
      a = join;
    } else if (st.exclusive(leaf, b)) {
      suffix.push_back(raw_piece(leaf, cfg.anchor(stem, leaf), *cfg.segment_param(leaf, b)));
      b = join;
    }
    st.active[leaf] = 0;
  }

  std::vector<PathPiece> pieces = std::move(prefix);
  pieces.push_back(middle);
  pieces.insert(pieces.end(), suffix.rbegin(), suffix.rend());

  // squeeze out stretches of zero length; they only appear when the two
  // walks close up at a shared crossing, or when the endpoints coincide
  std::vector<PathPiece> kept;
  for (auto& pc : pieces)
    if (pc.from != pc.to) kept.push_back(std::move(pc));
  if (kept.empty()) kept.push_back(std::move(pieces.front()));

  Rat speed(0);
  for (const auto& pc : kept) speed += rat_dist(pc.to, pc.from);

  Rat clock(0);
  for (auto& pc : kept) {
    pc.s_from = clock;
    clock = speed == 0 ? Rat(1) : Rat(clock + rat_dist(pc.to, pc.from) / speed);
    pc.s_to = clock;
  }
  kept.back().s_to = 1;

  AdaptedPath path{std::move(kept), std::move(speed)};
  if (!is_adapted(cfg, path))
    throw std::logic_error("construction produced a path that is not adapted");
  return path;
}

bool is_adapted(const SegmentConfig& cfg, const AdaptedPath& path) {
  if (path.pieces.empty() || path.speed < 0) return false;
  if (path.pieces.front().s_from != 0 || path.pieces.back().s_to != 1) return false;
  std::vector<int> seg_dir(cfg.size() + 1, 0);
  for (std::size_t k = 0; k < path.pieces.size(); ++k) {
    const auto& pc = path.pieces[k];
    if (pc.segment < 1 || pc.segment > cfg.size()) return false;
    if (pc.dir != 1 && pc.dir != -1) return false;
    if (!unit_range(pc.from) || !unit_range(pc.to)) return false;
    if (pc.s_from >= pc.s_to) return false;
    // constant global speed on every stretch
    if (rat_dist(pc.to, pc.from) != path.speed * (pc.s_to - pc.s_from)) return false;
    if (pc.from != pc.to) {
      int sign = pc.to > pc.from ? 1 : -1;
      if (sign != pc.dir) return false;
      // the direction of travel is a property of the segment, not the stretch
      if (seg_dir[pc.segment] != 0 && seg_dir[pc.segment] != sign) return false;
      seg_dir[pc.segment] = sign;
    } else if (path.speed != 0) {
      return false;
    }
    if (k > 0) {
      const auto& prev = path.pieces[k - 1];
      if (prev.s_to != pc.s_from) return false;
      if (cfg.point_at(prev.segment, prev.to) != cfg.point_at(pc.segment, pc.from))
        return false;
    }
  }
  return true;
}

std::vector<Rat> path_point(const SegmentConfig& cfg, const AdaptedPath& path, const Rat& s) {
  if (s < 0 || s > 1) throw std::invalid_argument("path time outside the unit interval");
  if (path.pieces.empty()) throw std::invalid_argument("path has no stretches");
  for (const auto& pc : path.pieces) {
    if (s > pc.s_to) continue;
    if (pc.s_to == pc.s_from) return cfg.point_at(pc.segment, pc.from);
    Rat t = pc.from + (pc.to - pc.from) * (s - pc.s_from) / (pc.s_to - pc.s_from);
    return cfg.point_at(pc.segment, t);
  }
  const auto& last = path.pieces.back();
  return cfg.point_at(last.segment, last.to);
}

}  // namespace cactuslab
