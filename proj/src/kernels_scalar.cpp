// Scalar reference implementations of the batched kernels.
//
// These define the semantics: the AVX2 versions must reproduce the exact
// sequence of IEEE-754 operations performed here, per batch entry, so that
// results agree bit for bit.  Keep the expression trees in sync with
// kernels_avx2.cpp when editing.

#include "zeroprod/kernels.hpp"

#include <cmath>
#include <limits>

namespace zeroprod::kernels {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kRescaleThreshold = 1e150;
constexpr double kRescale = 0x1p-512;
constexpr double kRescaleSq = 0x1p-1024;

// Pivot count for one shift.  `last_off2` substitutes for off2[m-2].
int count_below(const double* diag, const double* off2, std::size_t m,
                double last_off2, double x) {
  double d = diag[0] - x;
  if (d == 0.0) d = -(kEps * (std::fabs(diag[0]) + 1.0));
  int count = (d < 0.0) ? 1 : 0;
  for (std::size_t j = 1; j < m; ++j) {
    const double o2 = (j == m - 1) ? last_off2 : off2[j - 1];
    const double t = diag[j] - x;
    const double q = o2 / d;
    d = t - q;
    if (d == 0.0) d = -(kEps * (std::fabs(diag[j]) + std::sqrt(o2) + 1.0));
    if (d < 0.0) ++count;
  }
  return count;
}

}  // namespace

namespace scalar {

void sturm_counts(const double* diag, const double* off2, std::size_t m,
                  const double* shifts, std::size_t k, int* counts) {
  const double last = (m >= 2) ? off2[m - 2] : 0.0;
  for (std::size_t i = 0; i < k; ++i)
    counts[i] = count_below(diag, off2, m, last, shifts[i]);
}

void sturm_counts_lastoff(const double* diag, const double* off2,
                          std::size_t m, const double* last_off2,
                          const double* shifts, std::size_t k, int* counts) {
  for (std::size_t i = 0; i < k; ++i)
    counts[i] = count_below(diag, off2, m, last_off2[i], shifts[i]);
}

void recurrence_tails(const double* a, const double* b, std::size_t m,
                      const double* xs, std::size_t k, double* p_prev,
                      double* p_last, double* sumsq, int* scale_log2) {
  for (std::size_t i = 0; i < k; ++i) {
    const double x = xs[i];
    double pm1 = 0.0;  // p_{j-1}
    double p = 1.0;    // p_j
    double s = 1.0;    // sum of squares so far, at scale 2^e
    int e = 0;
    double bprev = 0.0;
    for (std::size_t j = 1; j < m; ++j) {
      const double t = x - a[j - 1];
      const double u = t * p;
      const double v = bprev * pm1;
      const double w = u - v;
      const double pn = w / b[j - 1];
      pm1 = p;
      p = pn;
      const double sq = p * p;
      s = s + sq;
      if (std::fabs(p) > kRescaleThreshold) {
        pm1 *= kRescale;
        p *= kRescale;
        s *= kRescaleSq;
        e += 512;
      }
      bprev = b[j - 1];
    }
    p_prev[i] = pm1;
    p_last[i] = p;
    sumsq[i] = s;
    scale_log2[i] = e;
  }
}

}  // namespace scalar
}  // namespace zeroprod::kernels
