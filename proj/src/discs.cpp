#include "cactuslab/discs.hpp"

#include <stdexcept>
#include <string>

namespace cactuslab {

FramedDiscConfig::FramedDiscConfig(std::vector<LittleDisc> discs) : discs_(std::move(discs)) {
  open_ = true;
  for (std::size_t i = 0; i < discs_.size(); ++i) {
    const LittleDisc& d = discs_[i];
    if (d.radius <= 0)
      throw std::invalid_argument("disc " + std::to_string(i + 1) + " has non-positive radius");
    Rat slack = (1 - d.radius) * (1 - d.radius) - d.center.norm2();
    if (d.radius > 1 || slack < 0)
      throw std::invalid_argument("disc " + std::to_string(i + 1) + " leaves the big disc");
    if (d.radius == 1 || slack == 0) open_ = false;
    for (std::size_t j = 0; j < i; ++j) {
      const LittleDisc& e = discs_[j];
      Rat gap = (d.center - e.center).norm2() - (d.radius + e.radius) * (d.radius + e.radius);
      if (gap < 0)
        throw std::invalid_argument("discs " + std::to_string(j + 1) + " and " +
                                    std::to_string(i + 1) + " overlap");
      if (gap == 0) open_ = false;
    }
  }
}

const LittleDisc& FramedDiscConfig::disc(int i) const {
  if (i < 1 || i > arity()) throw std::invalid_argument("disc index out of range");
  return discs_[static_cast<std::size_t>(i) - 1];
}

FramedDiscConfig unit_config() {
  return FramedDiscConfig({LittleDisc{RationalComplex(), Rat(1), UnitCirclePoint()}});
}

FramedDiscConfig base_config(int n, const Rat& r) {
  if (n < 1) throw std::invalid_argument("base configuration needs at least one disc");
  if (r <= 0 || r * n >= 1)
    throw std::invalid_argument("base configuration needs 0 < r < 1/n");
  std::vector<LittleDisc> discs;
  discs.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    Rat x(2 * k - 1, n);
    x.canonicalize();
    x -= 1;
    discs.push_back(LittleDisc{RationalComplex(x, Rat(0)), r, UnitCirclePoint()});
  }
  return FramedDiscConfig(std::move(discs));
}

FramedDiscConfig compose_at(const FramedDiscConfig& a, int i, const FramedDiscConfig& b) {
  if (i < 1 || i > a.arity()) throw std::invalid_argument("composition slot out of range");
  std::vector<LittleDisc> out;
  out.reserve(static_cast<std::size_t>(a.arity() + b.arity() - 1));
  for (int k = 1; k <= a.arity(); ++k) {
    const LittleDisc& dk = a.disc(k);
    if (k != i) {
      out.push_back(dk);
      continue;
    }
    for (const LittleDisc& e : b.discs()) {
      Rat radius = dk.radius * e.radius;
      radius.canonicalize();
      out.push_back(LittleDisc{dk.embed(e.center), radius, dk.frame * e.frame});
    }
  }
  return FramedDiscConfig(std::move(out));
}

FramedDiscConfig gamma(const FramedDiscConfig& a, const std::vector<FramedDiscConfig>& bs) {
  if (static_cast<int>(bs.size()) != a.arity())
    throw std::invalid_argument("gamma needs one configuration per disc");
  std::vector<LittleDisc> out;
  for (int k = 1; k <= a.arity(); ++k) {
    const LittleDisc& dk = a.disc(k);
    for (const LittleDisc& e : bs[static_cast<std::size_t>(k) - 1].discs()) {
      Rat radius = dk.radius * e.radius;
      radius.canonicalize();
      out.push_back(LittleDisc{dk.embed(e.center), radius, dk.frame * e.frame});
    }
  }
  return FramedDiscConfig(std::move(out));
}

FramedDiscConfig sigma_act(const FramedDiscConfig& a, const Perm& s) {
  if (s.size() != a.arity()) throw std::invalid_argument("permutation size mismatch");
  std::vector<LittleDisc> out;
  out.reserve(a.discs().size());
  for (int i = 0; i < s.size(); ++i) out.push_back(a.discs()[static_cast<std::size_t>(s(i))]);
  return FramedDiscConfig(std::move(out));
}

bool realization_contains(const FramedDiscConfig& a, const RationalComplex& p) {
  if (p.norm2() > 1) return false;
  for (const LittleDisc& d : a.discs())
    if ((p - d.center).norm2() < d.radius * d.radius) return false;
  return true;
}

RationalComplex boundary_in(const FramedDiscConfig& a, int i, const UnitCirclePoint& q) {
  return a.disc(i).embed(q.value());
}

RationalComplex boundary_out(const FramedDiscConfig& a, const UnitCirclePoint& q) {
  (void)a;
  return q.value();
}

bool on_disc_boundary(const FramedDiscConfig& a, int i, const RationalComplex& p) {
  const LittleDisc& d = a.disc(i);
  return (p - d.center).norm2() == d.radius * d.radius;
}

}  // namespace cactuslab
