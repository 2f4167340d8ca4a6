#include "cactuslab/geometry.hpp"

#include <stdexcept>

namespace cactuslab {

UnitCirclePoint::UnitCirclePoint(RationalComplex z) : z_(std::move(z)) {
  if (z_.norm2() != 1)
    throw std::invalid_argument("point is not on the unit circle");
}

UnitCirclePoint UnitCirclePoint::from_tan_half(const Rat& t) {
  Rat t2 = t * t;
  Rat den = 1 + t2;
  Rat re = (1 - t2) / den;
  Rat im = (2 * t) / den;
  re.canonicalize();
  im.canonicalize();
  return UnitCirclePoint(RationalComplex(re, im));
}

std::vector<UnitCirclePoint> unit_circle_samples(int k) {
  if (k <= 0) throw std::invalid_argument("sample count must be positive");
  std::vector<UnitCirclePoint> out;
  out.reserve(static_cast<std::size_t>(k));
  // slopes (2j - (k-1))/16 for j = 0..k-1: symmetric around 0 and all
  // distinct, so the points are distinct as well
  for (int j = 0; j < k; ++j) {
    Rat t(2 * j - (k - 1), 16);
    t.canonicalize();
    out.push_back(UnitCirclePoint::from_tan_half(t));
  }
  return out;
}

}  // namespace cactuslab
