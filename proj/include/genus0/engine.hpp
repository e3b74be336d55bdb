#pragma once

#include <vector>

#include "genus0/decide.hpp"

namespace genus0 {

// The ordered sequence of admissible parameter values: N, -N, 2N, -2N, ...
// (parabolic), p^(e k) (hyperbolic), gamma^(e k) (Pell type). Every emitted
// value is checked against its congruence class.
class ThetaStream {
 public:
  explicit ThetaStream(const Witness& w);
  QuadElem next();

 private:
  const Witness* w_;
  long k_ = 0;
  QuadElem step_;
  QuadElem current_;
};

// The first `count` distinct points of the stream, each verified exactly:
// the curve equation vanishes (or the parametrization reproduces it) and
// every coordinate is an S-integer. Verification failure is an internal
// invariant error.
std::vector<AffinePoint> generate_points(const Witness& w, long count, const PrimeSet& s);

// Exhaustive search over the same lattice as search_point, collecting every
// hit: all S-integral points whose swept coordinate (or parameter) is a/b
// with |a| <= bound and (S-smooth, for implicit curves) b <= bound. Output
// sorted by (height, lexicographic), deduplicated.
std::vector<AffinePoint> enumerate_points(const CurveInput& input, const PrimeSet& s,
                                          const Int& bound);

}  // namespace genus0
