#include "fuzzysim/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fuzzysim {

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

// P(y > x) for y ~ U(J), J non-degenerate.
double survival(const Interval& j, double x) { return clamp01((j.hi - x) / (j.hi - j.lo)); }

}  // namespace

Interval alpha_cut(const Ofn& a, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0,1]");
  auto s = a.components();
  std::sort(s.begin(), s.end());
  const auto s1 = static_cast<double>(s[0]);
  const auto s2 = static_cast<double>(s[1]);
  const auto s3 = static_cast<double>(s[2]);
  const auto s4 = static_cast<double>(s[3]);
  return {s1 + alpha * (s2 - s1), s4 - alpha * (s4 - s3)};
}

double interval_prob_less(const Interval& i, const Interval& j) {
  if (i.is_point() && j.is_point()) return i.lo < j.lo ? 1.0 : 0.0;
  if (i.is_point()) return survival(j, i.lo);
  if (j.is_point()) return clamp01((j.lo - i.lo) / (i.hi - i.lo));

  // (1/|I|) * integral over I of P(y > x) dx, P(y > x) being piecewise linear.
  const double below = std::max(0.0, std::min(i.hi, j.lo) - i.lo);
  double ramp = 0.0;
  const double lo = std::max(i.lo, j.lo);
  const double hi = std::min(i.hi, j.hi);
  if (lo < hi) {
    const double dl = j.hi - lo;
    const double dh = j.hi - hi;
    ramp = (dl * dl - dh * dh) / (2.0 * (j.hi - j.lo));
  }
  return clamp01((below + ramp) / (i.hi - i.lo));
}

ComparisonResult prob_less(const Ofn& a, const Ofn& b, int levels) {
  if (levels < 2) throw std::invalid_argument("prob_less needs at least two alpha levels");
  double less = 0.0;
  double greater = 0.0;
  int ties = 0;
  for (int k = 0; k < levels; ++k) {
    const double alpha = static_cast<double>(k) / static_cast<double>(levels - 1);
    const auto ia = alpha_cut(a, alpha);
    const auto ib = alpha_cut(b, alpha);
    if (ia.is_point() && ib.is_point() && ia.lo == ib.lo) {
      ++ties;
      continue;
    }
    less += interval_prob_less(ia, ib);
    greater += interval_prob_less(ib, ia);
  }
  ComparisonResult r;
  if (ties == levels) {
    r.p_equal = 1.0;
    return r;
  }
  const double n = static_cast<double>(levels);
  r.p_less = (less + 0.5 * ties) / n;
  r.p_greater = (greater + 0.5 * ties) / n;
  return r;
}

double uncertainty(double p_12, double p_21) { return 1.0 - std::max(p_12, p_21) + std::min(p_12, p_21); }

double uncertainty(const ComparisonResult& r) { return uncertainty(r.p_less, r.p_greater); }

double uncertainty(const Ofn& d1, const Ofn& d2, int levels) { return uncertainty(prob_less(d1, d2, levels)); }

}  // namespace fuzzysim
