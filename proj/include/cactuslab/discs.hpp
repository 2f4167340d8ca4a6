#pragma once

#include <vector>

#include "cactuslab/geometry.hpp"
#include "cactuslab/perm.hpp"

namespace cactuslab {

// One framed little disc: the affine embedding z |-> center + radius*frame*z
// of the closed unit disc.
struct LittleDisc {
  RationalComplex center;
  Rat radius;
  UnitCirclePoint frame;

  friend bool operator==(const LittleDisc& a, const LittleDisc& b) = default;

  RationalComplex embed(const RationalComplex& z) const {
    return center + radius * (frame.value() * z);
  }
  // exact inverse of the embedding
  RationalComplex unembed(const RationalComplex& p) const {
    Rat inv_r = 1 / radius;
    inv_r.canonicalize();
    return inv_r * (frame.inverse().value() * (p - center));
  }
};

// Configuration of n framed little discs inside the closed unit disc,
// pairwise disjoint interiors.  The construction checks
//   |c_i|^2 <= (1 - r_i)^2,  r_i <= 1,  |c_i - c_j|^2 >= (r_i + r_j)^2
// exactly.  The openness flag is derived: it is set iff all of these hold
// strictly, which is the interior variant of the operad.  Keeping the flag
// canonical in this way makes composition and unit laws exact on the nose.
class FramedDiscConfig {
 public:
  FramedDiscConfig() = default;
  explicit FramedDiscConfig(std::vector<LittleDisc> discs);

  int arity() const { return static_cast<int>(discs_.size()); }
  const std::vector<LittleDisc>& discs() const { return discs_; }
  const LittleDisc& disc(int i) const;  // 1-based
  bool open() const { return open_; }

  friend bool operator==(const FramedDiscConfig& a, const FramedDiscConfig& b) {
    return a.discs_ == b.discs_;  // flag is derived, never part of identity
  }

 private:
  std::vector<LittleDisc> discs_;
  bool open_ = true;
};

// the operad unit: one disc filling the whole big disc
FramedDiscConfig unit_config();

// n discs of radius r in a row on the real axis, centers (2k-1)/n - 1,
// frames trivial; requires 0 < r < 1/n so the result is openness-flagged
FramedDiscConfig base_config(int n, const Rat& r);

// plug b into the i-th disc of a (1-based)
FramedDiscConfig compose_at(const FramedDiscConfig& a, int i, const FramedDiscConfig& b);
FramedDiscConfig gamma(const FramedDiscConfig& a, const std::vector<FramedDiscConfig>& bs);
FramedDiscConfig sigma_act(const FramedDiscConfig& a, const Perm& s);

// |a| = big disc minus the open little discs
bool realization_contains(const FramedDiscConfig& a, const RationalComplex& p);

// boundary of the i-th little disc, traversed by the embedding
RationalComplex boundary_in(const FramedDiscConfig& a, int i, const UnitCirclePoint& q);
// boundary of the big disc (the embedding is the identity there)
RationalComplex boundary_out(const FramedDiscConfig& a, const UnitCirclePoint& q);

// is p exactly on the boundary circle of disc i?
bool on_disc_boundary(const FramedDiscConfig& a, int i, const RationalComplex& p);

}  // namespace cactuslab
