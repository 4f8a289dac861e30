#include "zeroprod/orthopoly.hpp"

#include <cmath>
#include <stdexcept>

namespace zeroprod {
namespace {

void validate_family(int n, double alpha, int n_min) {
  if (n < n_min)
    throw std::domain_error("orthopoly: degree below the family minimum");
  if (!(alpha > -1.0) || !std::isfinite(alpha))
    throw std::domain_error("orthopoly: alpha must be finite and > -1");
}

}  // namespace

LaguerreParams::LaguerreParams(int n_, double alpha_) : n(n_), alpha(alpha_) {
  validate_family(n, alpha, 1);
}

std::pair<std::vector<double>, std::vector<double>> laguerre_recurrence(
    int n, double alpha) {
  validate_family(n, alpha, 1);
  std::vector<double> a(static_cast<std::size_t>(n));
  std::vector<double> b(static_cast<std::size_t>(n - 1));
  for (int k = 1; k <= n; ++k) a[k - 1] = 2.0 * (k - 1) + alpha + 1.0;
  for (int k = 1; k < n; ++k) b[k - 1] = std::sqrt(k * (k + alpha));
  return {std::move(a), std::move(b)};
}

JacobiMatrix laguerre_matrix(int n, double alpha) {
  auto [a, b] = laguerre_recurrence(n, alpha);
  return JacobiMatrix(std::move(a), std::move(b));
}

std::vector<double> laguerre_zeros(int n, double alpha, double tol) {
  return eigenvalues(laguerre_matrix(n, alpha), tol).eigenvalues;
}

std::vector<double> laguerre_zeros(int n, double alpha) {
  const JacobiMatrix J = laguerre_matrix(n, alpha);
  return eigenvalues(J, default_tol(J)).eigenvalues;
}

namespace {

std::vector<double> hermite_positive_zeros_impl(int n, const double* tol) {
  if (n < 2)
    throw std::domain_error(
        "hermite_positive_zeros: degree must be at least 2");
  const int m = n / 2;
  const double alpha = (n % 2 == 0) ? -0.5 : 0.5;
  std::vector<double> z = (tol != nullptr)
                              ? laguerre_zeros(m, alpha, *tol)
                              : laguerre_zeros(m, alpha);
  for (double& x : z) x = std::sqrt(x);
  return z;
}

}  // namespace

std::vector<double> hermite_positive_zeros(int n, double tol) {
  return hermite_positive_zeros_impl(n, &tol);
}

std::vector<double> hermite_positive_zeros(int n) {
  return hermite_positive_zeros_impl(n, nullptr);
}

namespace {

std::vector<ProductSequenceEntry> product_sequence_impl(
    ProductFamilySpec family, int n_max, const double* tol) {
  std::vector<ProductSequenceEntry> entries;
  if (family.kind == ProductFamily::laguerre) {
    validate_family(n_max, family.alpha, 2);
    for (int n = 2; n <= n_max; ++n) {
      const JacobiMatrix J = laguerre_matrix(n, family.alpha);
      const double t = (tol != nullptr) ? *tol : default_tol(J);
      const auto [lo, hi] = extreme_eigenvalues(J, t);
      entries.push_back({n, family.alpha, family.kind, lo * hi});
    }
    return entries;
  }
  // Hermite parities: degree n reduces to Laguerre degree floor(n/2); the
  // product of the smallest positive and the largest zero is the square
  // root of the reduced extreme-eigenvalue product.
  const int first = (family.kind == ProductFamily::hermite_even) ? 4 : 5;
  if (n_max < first)
    throw std::domain_error(
        "product_sequence: Hermite products start at degree 4 (even) / 5 "
        "(odd)");
  for (int n = first; n <= n_max; n += 2) {
    const JacobiMatrix J = laguerre_matrix(n / 2, family.alpha);
    const double t = (tol != nullptr) ? *tol : default_tol(J);
    const auto [lo, hi] = extreme_eigenvalues(J, t);
    entries.push_back({n, family.alpha, family.kind, std::sqrt(lo * hi)});
  }
  return entries;
}

}  // namespace

std::vector<ProductSequenceEntry> product_sequence(ProductFamilySpec family,
                                                   int n_max, double tol) {
  return product_sequence_impl(family, n_max, &tol);
}

std::vector<ProductSequenceEntry> product_sequence(ProductFamilySpec family,
                                                   int n_max) {
  return product_sequence_impl(family, n_max, nullptr);
}

OrthonormalSequence orthonormal_sequence(const JacobiMatrix& M, double x) {
  if (!std::isfinite(x))
    throw std::domain_error("orthonormal_sequence: point must be finite");
  const std::size_t m = M.dim();
  OrthonormalSequence seq{x, std::vector<double>(m), 0};
  seq.values[0] = 1.0;
  for (std::size_t j = 1; j < m; ++j) {
    const double bprev = (j >= 2) ? M.offdiag[j - 2] : 0.0;
    const double prev2 = (j >= 2) ? seq.values[j - 2] : 0.0;
    seq.values[j] = ((x - M.diag[j - 1]) * seq.values[j - 1] - bprev * prev2) /
                    M.offdiag[j - 1];
    if (std::fabs(seq.values[j]) > 1e150) {
      // Rescale the whole stored prefix so every value shares one scale.
      for (std::size_t i = 0; i <= j; ++i) seq.values[i] *= 0x1p-512;
      seq.scale_log2 += 512;
    }
  }
  return seq;
}

double laguerre_value(int n, double alpha, double x) {
  if (n < 0) throw std::domain_error("laguerre_value: degree must be >= 0");
  if (!(alpha > -1.0) || !std::isfinite(alpha))
    throw std::domain_error("laguerre_value: alpha must be finite and > -1");
  if (!std::isfinite(x))
    throw std::domain_error("laguerre_value: point must be finite");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next =
        ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre_derivative(int n, double alpha, double x) {
  if (n < 0)
    throw std::domain_error("laguerre_derivative: degree must be >= 0");
  if (!(alpha > -1.0) || !std::isfinite(alpha))
    throw std::domain_error(
        "laguerre_derivative: alpha must be finite and > -1");
  if (!std::isfinite(x))
    throw std::domain_error("laguerre_derivative: point must be finite");
  if (n == 0) return 0.0;
  double prev = 1.0, cur = 1.0 + alpha - x;  // values
  double dprev = 0.0, dcur = -1.0;           // derivatives
  for (int k = 1; k < n; ++k) {
    const double next =
        ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    const double dnext =
        ((2.0 * k + 1.0 + alpha - x) * dcur - cur - (k + alpha) * dprev) /
        (k + 1.0);
    prev = cur;
    cur = next;
    dprev = dcur;
    dcur = dnext;
  }
  return dcur;
}

}  // namespace zeroprod
