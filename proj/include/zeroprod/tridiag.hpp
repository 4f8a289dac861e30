#ifndef ZEROPROD_TRIDIAG_HPP
#define ZEROPROD_TRIDIAG_HPP

/// Eigenvalues of symmetric tridiagonal (Jacobi) matrices by Sturm-count
/// bisection, plus eigenvector reconstruction through the orthonormal
/// three-term recurrence.
///
/// All operations are pure functions of immutable inputs and are safe to
/// call concurrently.

#include <cstddef>
#include <utility>
#include <vector>

namespace zeroprod {

/// Symmetric tridiagonal matrix stored as its coefficient arrays.
struct JacobiMatrix {
  std::vector<double> diag;     ///< a_1..a_m
  std::vector<double> offdiag;  ///< b_1..b_{m-1}

  /// Validates shape (offdiag one shorter than diag, diag nonempty) and
  /// finiteness of every entry; throws std::domain_error on violation.
  JacobiMatrix(std::vector<double> d, std::vector<double> o);

  std::size_t dim() const noexcept { return diag.size(); }

  /// True if every off-diagonal entry is nonzero (eigenvalues then simple).
  bool unreduced() const noexcept;

  /// Lower / upper endpoint of the union of Gershgorin discs; the whole
  /// spectrum lies inside [gershgorin_low(), gershgorin_high()].
  double gershgorin_low() const noexcept;
  double gershgorin_high() const noexcept;
};

/// Eigenvalues plus the accuracy actually achieved.
struct SpectrumResult {
  std::vector<double> eigenvalues;  ///< ascending
  double tolerance;  ///< largest final bisection bracket half-width
};

/// Number of eigenvalues of M strictly below x (LDL^T pivot signs).
/// Throws std::domain_error for non-finite x.
int sturm_count(const JacobiMatrix& M, double x);

/// Default bisection tolerance: 1e-13 * (Gershgorin width + 1).  The hybrid
/// absolute/relative form keeps roughly twelve significant digits on
/// spectra whose extent grows with the dimension.
double default_tol(const JacobiMatrix& M);

/// All eigenvalues, each bracketed by bisection to width <= tol starting
/// from the Gershgorin interval.  Brackets narrower than one unit in the
/// last place stop early (binary64 cannot separate the endpoints further);
/// the result reports the widest final half-width actually reached.
/// Throws std::domain_error if tol <= 0 or not finite.
SpectrumResult eigenvalues(const JacobiMatrix& M, double tol);
SpectrumResult eigenvalues(const JacobiMatrix& M);

/// (smallest, largest) eigenvalue without computing the interior spectrum:
/// only the first and last Sturm brackets are bisected.
std::pair<double, double> extreme_eigenvalues(const JacobiMatrix& M,
                                              double tol);

/// Eigenvalues with the given 1-based indices (1 = smallest, dim = largest),
/// bisected together in one batch.  Indices may repeat and need not be
/// sorted; result[i] corresponds to indices[i].
std::vector<double> eigenvalues_at_indices(const JacobiMatrix& M,
                                           const std::vector<int>& indices,
                                           double tol);

/// Batched variant for families that share every coefficient except the
/// trailing off-diagonal: entry i solves the matrix whose last off-diagonal
/// is last_off[i] (signed; only its square enters the counts) for the
/// eigenvalue of 1-based index indices[i].  This is the work horse for
/// parameter sweeps over a deformed trailing coupling.
std::vector<double> eigenvalues_lastoff_indexed(
    const JacobiMatrix& M, const std::vector<double>& last_off,
    const std::vector<int>& indices, double tol);

/// Unit eigenvector of a computed simple eigenvalue, reconstructed from the
/// matrix's own orthonormal recurrence: component k is p_{k-1}(lambda)
/// (normalized), with the last component additionally multiplied by
/// sign_last (+1 or -1, a sign convention hook for deformed couplings).
/// Throws std::domain_error if M is not unreduced, sign_last is not +-1, or
/// lambda lies farther than 10 * default_tol(M) from the spectrum (stale
/// eigenvalue).
std::vector<double> eigenvector_via_recurrence(const JacobiMatrix& M,
                                               double lambda, int sign_last);

}  // namespace zeroprod

#endif  // ZEROPROD_TRIDIAG_HPP
