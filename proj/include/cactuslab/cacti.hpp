#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cactuslab/perm.hpp"
#include "cactuslab/pl.hpp"
#include "cactuslab/rational.hpp"

namespace cactuslab {

// point on the n-torus; entries kept canonical in [0,1)
using TorusPoint = std::vector<Rat>;
TorusPoint normalize_torus(TorusPoint p);

struct CactusCheck {
  bool ok = true;
  std::string message;
};

// the three invariants: every coordinate a degree-1 monotone circle map,
// supports tiling the circle with disjoint interiors, and the interval
// label sequence treelike (no i..j..i..j pattern for distinct i, j)
CactusCheck validate_cactus(int n, const std::vector<PLCircleMap>& coords);

// one arc of the tiling, labelled by the coordinate increasing on it
struct IntervalPiece {
  int label;  // 1-based
  Rat start, end;
};

/* A cactus with n lobes: the n coordinates of its traversal loop on the
 * n-torus.  Constructor rejects anything failing validate_cactus, so an
 * instance always satisfies the model invariants. */
class Cactus {
 public:
  Cactus(int n, std::vector<PLCircleMap> coords);

  int arity() const { return n_; }
  const PLCircleMap& coord(int i) const { return coords_[i - 1]; }  // 1-based
  const std::vector<PLCircleMap>& coords() const { return coords_; }

  // the tiling of [0,1] by support arcs, in traversal order
  std::vector<IntervalPiece> interval_sequence() const;

  // labels of the interval sequence; this is the open cell the cactus
  // lives in
  std::vector<int> cell() const;

  // the point of the n-torus the i-th lobe sits over: every coordinate
  // other than i is frozen there while lobe i is traversed.  Entry i-1
  // is set to 0 and carries no information.
  TorusPoint lobe_point(int i) const;

  friend bool operator==(const Cactus& a, const Cactus& b) = default;

 private:
  int n_;
  std::vector<PLCircleMap> coords_;
};

Cactus base_cactus(int n);
Cactus rotation_cactus(const Rat& s);
// the two-lobe cactus whose loop evaluation concatenates at double speed
Cactus pontrjagin_cactus();

// substitute b into lobe i of a (1-based); arities n and m give n-1+m
Cactus compose_cacti(const Cactus& a, int i, const Cactus& b);
Cactus cacti_gamma(const Cactus& a, const std::vector<Cactus>& bs);
// right action: lobe i of the result is lobe s(i) of a
Cactus cacti_sigma_act(const Cactus& a, const Perm& s);

// ---- realization: the image of the traversal loop, as a subset of the
// ---- n-torus made of axis-parallel arcs

struct AxisSegment {
  int axis;                // 1-based coordinate that varies
  std::vector<Rat> fixed;  // n entries; entry axis-1 is meaningless
  Rat lo, hi;              // lift interval swept by the varying coordinate
};

std::vector<AxisSegment> realization_segments(const Cactus& c);
bool realization_contains(const Cactus& c, const TorusPoint& p);

// marked input circle i and output circle of the realization
TorusPoint cactus_boundary_in(const Cactus& c, int i, const Rat& t);
TorusPoint cactus_boundary_out(const Cactus& c, const Rat& t);

// relabelling map on realizations matching the right action
TorusPoint cactus_sym_point(const Perm& s, const TorusPoint& p);

// the two legs of the pasting square for gamma(c; ds): the product map
// on |c| and the inclusion of |ds[i-1]| over the i-th lobe
TorusPoint cactus_lower_map(const Cactus& c, const std::vector<Cactus>& ds, const TorusPoint& p);
TorusPoint cactus_right_map(const Cactus& c, const std::vector<Cactus>& ds, int i, const TorusPoint& q);

bool in_lower_image(const Cactus& c, const std::vector<Cactus>& ds, const TorusPoint& p);
bool in_right_image(const Cactus& c, const std::vector<Cactus>& ds, int i, const TorusPoint& p);
// does p sit on the circle along which lobe i was glued
bool on_glued_circle(const Cactus& c, const std::vector<Cactus>& ds, int i, const TorusPoint& p);

// ---- cells

bool is_valid_cell_sequence(int n, const std::vector<int>& labels);
// all cells with n labels up to the given length; 0 means the maximal
// possible length 2n-1
std::vector<std::vector<int>> enumerate_cells(int n, int max_len = 0);
int cell_dimension(const std::vector<int>& labels);

}  // namespace cactuslab
