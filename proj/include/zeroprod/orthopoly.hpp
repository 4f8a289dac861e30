#ifndef ZEROPROD_ORTHOPOLY_HPP
#define ZEROPROD_ORTHOPOLY_HPP

/// Recurrence coefficients, pointwise evaluation, and zeros of generalized
/// Laguerre and Hermite polynomials, including the Hermite-to-Laguerre
/// reduction and the extreme-zero product sequences.
///
/// Zeros are always computed as eigenvalues of the associated Jacobi
/// matrix; Hermite zeros go exclusively through the Laguerre reduction
/// (even degree 2m reduces to alpha = -1/2, odd degree 2m+1 to +1/2, with
/// positive zeros the square roots of the reduced Laguerre zeros), so
/// there is a single eigensolver path to validate.

#include <cstddef>
#include <utility>
#include <vector>

#include "zeroprod/tridiag.hpp"

namespace zeroprod {

/// Degree / parameter pair for a generalized Laguerre family; validates
/// n >= 1 and alpha > -1 on construction (throws std::domain_error).
struct LaguerreParams {
  int n;
  double alpha;
  LaguerreParams(int n, double alpha);
};

/// Orthonormal-recurrence coefficients of the Laguerre family:
///   a_k = 2(k-1) + alpha + 1   (k = 1..n)
///   b_k = sqrt(k (k + alpha))  (k = 1..n-1)
/// Returned as (diagonal, off-diagonal) arrays.
std::pair<std::vector<double>, std::vector<double>> laguerre_recurrence(
    int n, double alpha);

/// The n-by-n Jacobi matrix whose eigenvalues are the zeros of the degree-n
/// generalized Laguerre polynomial.
JacobiMatrix laguerre_matrix(int n, double alpha);

/// The n zeros of the degree-n generalized Laguerre polynomial, ascending.
std::vector<double> laguerre_zeros(int n, double alpha, double tol);
std::vector<double> laguerre_zeros(int n, double alpha);

/// The floor(n/2) positive zeros of the degree-n Hermite polynomial,
/// ascending, via the Laguerre reduction.  Requires n >= 2 (below that
/// there is no positive zero to pair with the largest one).
std::vector<double> hermite_positive_zeros(int n, double tol);
std::vector<double> hermite_positive_zeros(int n);

/// Families whose extreme-zero products form the studied sequences.
enum class ProductFamily { laguerre, hermite_even, hermite_odd };

/// Family selector: Laguerre carries its alpha; the Hermite parities fix
/// alpha = -1/2 (even) and +1/2 (odd) through the reduction.
struct ProductFamilySpec {
  ProductFamily kind;
  double alpha;
  static ProductFamilySpec laguerre(double alpha) {
    return {ProductFamily::laguerre, alpha};
  }
  static ProductFamilySpec hermite_even() {
    return {ProductFamily::hermite_even, -0.5};
  }
  static ProductFamilySpec hermite_odd() {
    return {ProductFamily::hermite_odd, 0.5};
  }
};

/// One extreme-zero product: for Laguerre, y = (smallest zero) * (largest
/// zero) of degree n; for Hermite, y = (smallest positive zero) * (largest
/// zero) of degree n.  `alpha` records the (reduced) Laguerre parameter.
struct ProductSequenceEntry {
  int n;
  double alpha;
  ProductFamily family;
  double y;
};

/// Product sequence up to degree n_max: Laguerre entries start at n = 2,
/// Hermite entries at n = 4 (even) / n = 5 (odd) and step by 2.
/// Throws std::domain_error if n_max is below the family's first entry.
std::vector<ProductSequenceEntry> product_sequence(ProductFamilySpec family,
                                                   int n_max, double tol);
std::vector<ProductSequenceEntry> product_sequence(ProductFamilySpec family,
                                                   int n_max);

/// Values p_0(x)..p_{m-1}(x) of the orthonormal three-term recurrence
/// driven by the coefficients of M (dimension m), all at the common scale
/// 2^scale_log2 (nonzero only if the 1e150 overflow guard rescaled the
/// sequence).
struct OrthonormalSequence {
  double point;
  std::vector<double> values;
  int scale_log2;
};
OrthonormalSequence orthonormal_sequence(const JacobiMatrix& M, double x);

/// Classical (non-normalized) generalized Laguerre polynomial value and
/// x-derivative via the standard degree recurrence and its term-wise
/// derivative; n >= 0, alpha > -1.
double laguerre_value(int n, double alpha, double x);
double laguerre_derivative(int n, double alpha, double x);

}  // namespace zeroprod

#endif  // ZEROPROD_ORTHOPOLY_HPP
