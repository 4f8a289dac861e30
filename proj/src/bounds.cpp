#include "zeroprod/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace zeroprod {
namespace {

void require_alpha(double alpha) {
  if (!(alpha > -1.0) || !std::isfinite(alpha))
    throw std::domain_error("bounds: alpha must be finite and > -1");
}

}  // namespace

double dk_bound(int n, double alpha) {
  require_alpha(alpha);
  if (n < 1) throw std::domain_error("dk_bound: n must be >= 1");
  const double np1 = n + 1.0;
  const double radicand = np1 * np1 + (alpha + 1.0) * (n + 3.0);
  return (2.0 * np1 * np1 + 2.0 * (alpha + 1.0) + (alpha - 1.0) * np1 +
          2.0 * n * std::sqrt(radicand)) /
         (n + 3.0);
}

double dj_lower_zero_bound(int n, double alpha) {
  require_alpha(alpha);
  if (n < 2) throw std::domain_error("dj_lower_zero_bound: n must be >= 2");
  const double p2a = (alpha + 2.0) * (alpha + 3.0);      // (alpha+2)_2
  const double pna = (n + alpha + 1.0) * (n + alpha + 2.0);  // (n+alpha+1)_2
  const double nm1 = n - 1.0;
  const double radicand =
      p2a * (9.0 * p2a +
             2.0 * (2.0 * alpha + 5.0) *
                 (alpha * alpha + 5.0 * alpha + 10.0) * nm1 +
             (5.0 * alpha * alpha + 25.0 * alpha + 38.0) * nm1 * nm1);
  if (radicand < 0.0)
    throw std::domain_error(
        "dj_lower_zero_bound: negative square-root argument");
  return (p2a * (3.0 * n + 2.0 * alpha + 2.0) - std::sqrt(radicand)) /
         (2.0 * pna);
}

double m2_largest_zero_bound(int n, double alpha) {
  if (n < 1 || !std::isfinite(alpha))
    throw std::domain_error("m2_largest_zero_bound: need n >= 1, finite alpha");
  const double radicand = static_cast<double>(n) * n - 2.0 * n + alpha * n + 2.0;
  if (radicand < 0.0)
    throw std::domain_error("m2_largest_zero_bound: negative radicand");
  return 2.0 * n + alpha - 2.0 + std::sqrt(radicand);
}

double prod1_margin(int n, double alpha) {
  if (n < 5) throw std::domain_error("prod1_margin: n must be >= 5");
  return 4.0 * n + 2.0 * alpha + 2.0 - dj_lower_zero_bound(n, alpha) -
         dk_bound(n, alpha);
}

double prod2_constant(int n, double alpha) {
  if (n < 5) throw std::domain_error("prod2_constant: n must be >= 5");
  const double an1 = 2.0 * n + alpha + 1.0;
  const double bn2 = static_cast<double>(n) * (n + alpha);
  return (an1 - dj_lower_zero_bound(n, alpha)) *
         (m2_largest_zero_bound(n, alpha) - an1) / (an1 + bn2);
}

double t_threshold(double K) {
  if (!(K > 0.0))
    throw std::domain_error("t_threshold: K must be positive");
  double s;  // s = t^2 solves s^2 + K s - K = 0
  const double disc = K * K + 4.0 * K;
  if (std::isfinite(disc)) {
    s = 2.0 * K / (K + std::sqrt(disc));
  } else {
    // K so large that K^2 overflows: bisect h(s) = s^2 + K (s - 1),
    // strictly increasing on [0, 1] with h(0) < 0 < h(1).
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-12) {
      const double mid = 0.5 * (lo + hi);
      const double h = mid * mid + K * (mid - 1.0);
      (h < 0.0 ? lo : hi) = mid;
    }
    s = 0.5 * (lo + hi);
  }
  return std::sqrt(s);
}

namespace {

// True iff prod1_margin(n, alpha) > 0 for every n in {5..n_big}.  Exits
// the scan once the margin has been strictly increasing for 50
// consecutive degrees while above a safety floor: the margin dips to a
// single interior minimum before settling toward its large-n limit, so a
// sustained rise means no later sign change.
bool margin_positive_for_all(double alpha, int n_big) {
  double prev = 0.0;
  int rising = 0;
  for (int n = 5; n <= n_big; ++n) {
    const double m = prod1_margin(n, alpha);
    if (!(m > 0.0)) return false;
    if (n > 5 && m > prev)
      ++rising;
    else
      rising = 0;
    if (rising >= 50 && m > 1.0) return true;
    prev = m;
  }
  return true;
}

}  // namespace

double alpha_star(int n_big) {
  if (n_big < 6) throw std::domain_error("alpha_star: n_big must be >= 6");
  double lo = 40.0, hi = 60.0;
  if (!margin_positive_for_all(lo, n_big) ||
      margin_positive_for_all(hi, n_big))
    throw std::runtime_error(
        "alpha_star: bracket [40, 60] does not straddle the sign change");
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (margin_positive_for_all(mid, n_big) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

BoundsReport bounds_report(int n, double alpha) {
  BoundsReport r;
  r.n = n;
  r.alpha = alpha;
  r.dk_upper = dk_bound(n, alpha);
  r.m0_upper = dj_lower_zero_bound(n, alpha);
  r.m2_lower = m2_largest_zero_bound(n, alpha);
  r.prod1_margin = zeroprod::prod1_margin(n, alpha);
  r.prod2_K = prod2_constant(n, alpha);
  return r;
}

}  // namespace zeroprod
