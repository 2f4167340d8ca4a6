#pragma once

#include <vector>

#include "cactuslab/rational.hpp"

namespace cactuslab {

/* Complex numbers over Q.  Distances are always handled through |z|^2,
 * which stays rational, so nothing here ever needs a square root. */
struct RationalComplex {
  Rat re, im;

  RationalComplex() : re(0), im(0) {}
  RationalComplex(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
    return {Rat(a.re + b.re), Rat(a.im + b.im)};
  }
  friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
    return {Rat(a.re - b.re), Rat(a.im - b.im)};
  }
  friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
    return {Rat(a.re * b.re - a.im * b.im), Rat(a.re * b.im + a.im * b.re)};
  }
  friend RationalComplex operator*(const Rat& s, const RationalComplex& a) {
    return {Rat(s * a.re), Rat(s * a.im)};
  }
  RationalComplex conj() const { return {re, Rat(-im)}; }
  Rat norm2() const { return Rat(re * re + im * im); }

  friend bool operator==(const RationalComplex& a, const RationalComplex& b) = default;
};

// point of the rational unit circle, |z|^2 == 1 enforced
class UnitCirclePoint {
 public:
  UnitCirclePoint() : z_(Rat(1), Rat(0)) {}
  explicit UnitCirclePoint(RationalComplex z);

  // t |-> ((1-t^2)/(1+t^2), 2t/(1+t^2)); hits every rational circle point
  // except (-1,0)
  static UnitCirclePoint from_tan_half(const Rat& t);

  const RationalComplex& value() const { return z_; }
  UnitCirclePoint inverse() const { return UnitCirclePoint(z_.conj()); }

  friend UnitCirclePoint operator*(const UnitCirclePoint& a, const UnitCirclePoint& b) {
    return UnitCirclePoint(a.z_ * b.z_);
  }
  friend bool operator==(const UnitCirclePoint& a, const UnitCirclePoint& b) = default;

 private:
  RationalComplex z_;
};

// the default sample family used by the axiom checks: k distinct
// tan-half-angle points spread over the circle
std::vector<UnitCirclePoint> unit_circle_samples(int k);

}  // namespace cactuslab
