#include "zeroprod/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "zeroprod/kernels.hpp"

namespace zeroprod {
namespace {

constexpr int kMaxBisectionIterations = 200;

void require_finite(double x, const char* what) {
  if (!std::isfinite(x))
    throw std::domain_error(std::string(what) + " must be finite");
}

std::vector<double> squared(const std::vector<double>& off) {
  std::vector<double> off2(off.size());
  for (std::size_t i = 0; i < off.size(); ++i) off2[i] = off[i] * off[i];
  return off2;
}

// Bisects lane i for the eigenvalue of 1-based index idx[i], maintaining
// count(lo) < idx <= count(hi).  When last_off2 is non-null, lane i solves
// the matrix whose trailing squared off-diagonal is last_off2[i]; otherwise
// all lanes share M's own coefficients.  Lanes whose bracket reaches the
// requested width, or can no longer be split in binary64, freeze; hitting
// the iteration cap means the data was corrupt (NaN) and is an internal
// error.
std::vector<double> bisect_indices(const JacobiMatrix& M,
                                   const std::vector<double>& off2,
                                   const double* last_off2,
                                   const std::vector<int>& idx, double lo0,
                                   double hi0, double tol,
                                   double* achieved_out) {
  const std::size_t k = idx.size();
  const std::size_t m = M.dim();
  std::vector<double> lo(k, lo0), hi(k, hi0), mid(k, lo0), out(k);
  std::vector<int> cnt(k, 0);
  std::vector<char> live(k, 1);
  double achieved = 0.0;
  std::size_t n_live = k;

  for (int iter = 0; iter <= kMaxBisectionIterations && n_live > 0; ++iter) {
    for (std::size_t i = 0; i < k; ++i) {
      if (!live[i]) continue;
      const double width = hi[i] - lo[i];
      double next = lo[i] + 0.5 * width;
      if (width <= tol || !(next > lo[i] && next < hi[i])) {
        live[i] = 0;
        --n_live;
        out[i] = lo[i] + 0.5 * width;
        achieved = std::max(achieved, 0.5 * width);
        continue;
      }
      mid[i] = next;
    }
    if (n_live == 0) break;
    if (iter == kMaxBisectionIterations)
      throw std::runtime_error(
          "tridiag: bisection exceeded its iteration cap (non-finite data?)");
    if (last_off2 != nullptr)
      kernels::sturm_counts_lastoff(M.diag.data(), off2.data(), m, last_off2,
                                    mid.data(), k, cnt.data());
    else
      kernels::sturm_counts(M.diag.data(), off2.data(), m, mid.data(), k,
                            cnt.data());
    for (std::size_t i = 0; i < k; ++i) {
      if (!live[i]) continue;
      if (cnt[i] >= idx[i])
        hi[i] = mid[i];
      else
        lo[i] = mid[i];
    }
  }
  if (achieved_out) *achieved_out = achieved;
  return out;
}

void validate_tol(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol))
    throw std::domain_error("tridiag: tolerance must be positive and finite");
}

void validate_indices(const std::vector<int>& idx, std::size_t m) {
  for (int i : idx)
    if (i < 1 || static_cast<std::size_t>(i) > m)
      throw std::domain_error("tridiag: eigenvalue index out of range");
}

}  // namespace

JacobiMatrix::JacobiMatrix(std::vector<double> d, std::vector<double> o)
    : diag(std::move(d)), offdiag(std::move(o)) {
  if (diag.empty())
    throw std::domain_error("JacobiMatrix: dimension must be at least 1");
  if (offdiag.size() + 1 != diag.size())
    throw std::domain_error(
        "JacobiMatrix: off-diagonal must be one entry shorter than diagonal");
  for (double a : diag) require_finite(a, "JacobiMatrix: diagonal entry");
  for (double b : offdiag)
    require_finite(b, "JacobiMatrix: off-diagonal entry");
}

bool JacobiMatrix::unreduced() const noexcept {
  for (double b : offdiag)
    if (b == 0.0) return false;
  return true;
}

double JacobiMatrix::gershgorin_low() const noexcept {
  const std::size_t m = dim();
  double lo = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    double r = 0.0;
    if (i > 0) r += std::fabs(offdiag[i - 1]);
    if (i + 1 < m) r += std::fabs(offdiag[i]);
    lo = std::min(lo, diag[i] - r);
  }
  return lo;
}

double JacobiMatrix::gershgorin_high() const noexcept {
  const std::size_t m = dim();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    double r = 0.0;
    if (i > 0) r += std::fabs(offdiag[i - 1]);
    if (i + 1 < m) r += std::fabs(offdiag[i]);
    hi = std::max(hi, diag[i] + r);
  }
  return hi;
}

int sturm_count(const JacobiMatrix& M, double x) {
  require_finite(x, "sturm_count: shift");
  const std::vector<double> off2 = squared(M.offdiag);
  int count = 0;
  kernels::sturm_counts(M.diag.data(), off2.data(), M.dim(), &x, 1, &count);
  return count;
}

double default_tol(const JacobiMatrix& M) {
  return 1e-13 * (M.gershgorin_high() - M.gershgorin_low() + 1.0);
}

std::vector<double> eigenvalues_at_indices(const JacobiMatrix& M,
                                           const std::vector<int>& indices,
                                           double tol) {
  validate_tol(tol);
  validate_indices(indices, M.dim());
  const std::vector<double> off2 = squared(M.offdiag);
  const double glo = M.gershgorin_low();
  const double ghi = M.gershgorin_high();
  // Nudge the upper end outward so count(hi) = dim holds strictly.
  const double hi = ghi + 8.0 * std::numeric_limits<double>::epsilon() *
                              (ghi - glo + 1.0);
  return bisect_indices(M, off2, nullptr, indices, glo, hi, tol, nullptr);
}

SpectrumResult eigenvalues(const JacobiMatrix& M, double tol) {
  validate_tol(tol);
  const std::size_t m = M.dim();
  std::vector<int> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = static_cast<int>(i + 1);
  const std::vector<double> off2 = squared(M.offdiag);
  const double glo = M.gershgorin_low();
  const double ghi = M.gershgorin_high();
  const double hi = ghi + 8.0 * std::numeric_limits<double>::epsilon() *
                              (ghi - glo + 1.0);
  SpectrumResult result{{}, 0.0};
  result.eigenvalues = bisect_indices(M, off2, nullptr, idx, glo, hi, tol,
                                      &result.tolerance);
  // Independent brackets can cross by up to tol on clustered eigenvalues;
  // restore the ordering invariant.
  std::sort(result.eigenvalues.begin(), result.eigenvalues.end());
  return result;
}

SpectrumResult eigenvalues(const JacobiMatrix& M) {
  return eigenvalues(M, default_tol(M));
}

std::pair<double, double> extreme_eigenvalues(const JacobiMatrix& M,
                                              double tol) {
  const std::vector<int> idx{1, static_cast<int>(M.dim())};
  const std::vector<double> ev = eigenvalues_at_indices(M, idx, tol);
  return {ev[0], ev[1]};
}

std::vector<double> eigenvalues_lastoff_indexed(
    const JacobiMatrix& M, const std::vector<double>& last_off,
    const std::vector<int>& indices, double tol) {
  validate_tol(tol);
  validate_indices(indices, M.dim());
  if (last_off.size() != indices.size())
    throw std::domain_error(
        "tridiag: last_off and indices must have equal length");
  if (M.dim() < 2)
    throw std::domain_error(
        "tridiag: trailing-off-diagonal batches need dimension >= 2");
  for (double b : last_off)
    require_finite(b, "tridiag: trailing off-diagonal");

  std::vector<double> off2 = squared(M.offdiag);
  std::vector<double> last2(last_off.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < last_off.size(); ++i) {
    last2[i] = last_off[i] * last_off[i];
    worst = std::max(worst, std::fabs(last_off[i]));
  }
  // Gershgorin bounds valid for every lane: take the widest trailing radius.
  JacobiMatrix widest = M;
  widest.offdiag.back() = worst;
  const double glo = widest.gershgorin_low();
  const double ghi = widest.gershgorin_high();
  const double hi = ghi + 8.0 * std::numeric_limits<double>::epsilon() *
                              (ghi - glo + 1.0);
  return bisect_indices(M, off2, last2.data(), indices, glo, hi, tol,
                        nullptr);
}

std::vector<double> eigenvector_via_recurrence(const JacobiMatrix& M,
                                               double lambda, int sign_last) {
  require_finite(lambda, "eigenvector_via_recurrence: eigenvalue");
  if (sign_last != 1 && sign_last != -1)
    throw std::domain_error(
        "eigenvector_via_recurrence: sign_last must be +1 or -1");
  if (!M.unreduced())
    throw std::domain_error(
        "eigenvector_via_recurrence: matrix must be unreduced");
  const double tol = default_tol(M);
  if (sturm_count(M, lambda + 10.0 * tol) == sturm_count(M, lambda - 10.0 * tol))
    throw std::domain_error(
        "eigenvector_via_recurrence: stale eigenvalue (no spectrum point "
        "within 10 * default_tol)");

  const std::size_t m = M.dim();
  std::vector<double> v(m);
  v[0] = 1.0;
  double sumsq = 1.0;
  for (std::size_t j = 1; j < m; ++j) {
    const double bprev = (j >= 2) ? M.offdiag[j - 2] : 0.0;
    const double prev2 = (j >= 2) ? v[j - 2] : 0.0;
    v[j] = ((lambda - M.diag[j - 1]) * v[j - 1] - bprev * prev2) /
           M.offdiag[j - 1];
    sumsq += v[j] * v[j];
    if (std::fabs(v[j]) > 1e150) {
      // Rescale the whole prefix so all stored components share one scale.
      for (std::size_t i = 0; i <= j; ++i) v[i] *= 0x1p-512;
      sumsq *= 0x1p-1024;
    }
  }
  v[m - 1] *= static_cast<double>(sign_last);
  const double norm = std::sqrt(sumsq);
  for (double& c : v) c /= norm;
  return v;
}

}  // namespace zeroprod
