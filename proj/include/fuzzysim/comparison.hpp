#pragma once

#include "fuzzysim/ofn.hpp"

namespace fuzzysim {

/// Closed real interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool is_point() const { return lo == hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct ComparisonResult {
  double p_less = 0.0;     // P(A < B)
  double p_greater = 0.0;  // P(B < A)
  double p_equal = 0.0;
};

inline constexpr int kDefaultAlphaLevels = 101;

/// Alpha-cut of the trapezoid induced by the sorted components of A.
/// alpha must lie in [0, 1].
Interval alpha_cut(const Ofn& a, double alpha);

/// P(x < y) for x ~ U(I), y ~ U(J), in closed form. Point intervals are
/// treated as point masses; two identical points give 0.
double interval_prob_less(const Interval& i, const Interval& j);

/// Probabilistic ranking of two OFNs: the interval probability averaged over
/// `levels` equally spaced alpha-cuts (alpha_k = k / (levels - 1)).
///
/// An alpha level at which both cuts collapse onto the same point carries no
/// ordering information; its mass is split evenly between p_less and
/// p_greater, unless every level ties (A and B identical and crisp), in
/// which case p_equal = 1.
ComparisonResult prob_less(const Ofn& a, const Ofn& b, int levels = kDefaultAlphaLevels);

/// 1 - max(P(D1<D2), P(D2<D1)) + min(P(D1<D2), P(D2<D1)).
double uncertainty(double p_12, double p_21);
double uncertainty(const ComparisonResult& r);
double uncertainty(const Ofn& d1, const Ofn& d2, int levels = kDefaultAlphaLevels);

}  // namespace fuzzysim
