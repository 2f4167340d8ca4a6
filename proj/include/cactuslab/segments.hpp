#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cactuslab/rational.hpp"

namespace cactuslab {

/* Configuration of n orthogonal unit segments in Q^n: segment i runs
 * parallel to axis i through the anchor coordinates
 *   psi_i(t) = (x^i_1, ..., t at slot i, ..., x^i_n).
 * The holder accepts any anchors; connectivity is a separate check so
 * that disconnected data can be examined and reported. */
class SegmentConfig {
 public:
  // anchors: n rows of n-1 entries, row i listing the fixed coordinates
  // of segment i+1 in axis order with slot i+1 skipped
  SegmentConfig(int n, std::vector<std::vector<Rat>> anchors);

  int size() const { return n_; }
  const std::vector<std::vector<Rat>>& anchors() const { return anchors_; }
  // fixed coordinate k of segment i (1-based, k != i)
  const Rat& anchor(int i, int k) const;

  std::vector<Rat> point_at(int i, const Rat& t) const;
  // parameter of p along segment i, if p lies on it
  std::optional<Rat> segment_param(int i, const std::vector<Rat>& p) const;
  bool on_segment(int i, const std::vector<Rat>& p) const { return segment_param(i, p).has_value(); }
  bool on_configuration(const std::vector<Rat>& p) const;

  friend bool operator==(const SegmentConfig& a, const SegmentConfig& b) = default;

 private:
  int n_;
  std::vector<std::vector<Rat>> anchors_;
};

// segments meet iff their anchors agree away from both axes and each
// one's crossing parameter on the other lies inside [0,1]
bool segments_adjacent(const SegmentConfig& cfg, int i, int j);
std::vector<Rat> intersection_point(const SegmentConfig& cfg, int i, int j);
// edges (i, j) with i < j, 1-based
std::vector<std::pair<int, int>> intersection_graph(const SegmentConfig& cfg);
bool validate_connected(const SegmentConfig& cfg);

// lowest index meeting exactly one other segment; needs size >= 2
int find_leaf(const SegmentConfig& cfg);

// one straight stretch of an adapted path: along segment over global
// times [s_from, s_to], the parameter running from "from" to "to"
struct PathPiece {
  int segment;
  Rat from, to;
  int dir;  // +1 or -1, constant per segment index
  Rat s_from, s_to;
  friend bool operator==(const PathPiece& a, const PathPiece& b) = default;
};

struct AdaptedPath {
  std::vector<PathPiece> pieces;
  Rat speed;  // common speed v; total variation of the parameters
  friend bool operator==(const AdaptedPath& a, const AdaptedPath& b) = default;
};

// the unique adapted path from p to q; both points must lie on the
// configuration and the configuration must be connected
AdaptedPath adapted_path(const SegmentConfig& cfg, const std::vector<Rat>& p,
                         const std::vector<Rat>& q);

// the two structural conditions: every piece moves along its segment at
// the common speed with a direction constant per segment index, and
// consecutive pieces hand over at a shared point of the two segments
bool is_adapted(const SegmentConfig& cfg, const AdaptedPath& path);

std::vector<Rat> path_point(const SegmentConfig& cfg, const AdaptedPath& path, const Rat& s);

}  // namespace cactuslab
