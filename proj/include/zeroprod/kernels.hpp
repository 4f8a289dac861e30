#ifndef ZEROPROD_KERNELS_HPP
#define ZEROPROD_KERNELS_HPP

/// Low-level batched kernels for symmetric tridiagonal spectral work.
///
/// Two kernel families are provided:
///
///  * Sturm pivot counts: given a tridiagonal matrix (diagonal `diag`,
///    squared off-diagonals `off2`), count the eigenvalues strictly below
///    each of `k` shifts by running the LDL^T pivot recurrence
///        d_1 = a_1 - x,   d_j = (a_j - x) - b_{j-1}^2 / d_{j-1}
///    and counting negative pivots.  A batch entry is one shift; the
///    `lastoff` variant additionally overrides the squared trailing
///    off-diagonal per batch entry, which is what a parameter sweep over a
///    deformed trailing coupling needs (same matrix body, per-entry tail).
///
///  * Orthonormal recurrence tails: given recurrence coefficients
///    (a_1..a_{m-1}, b_1..b_{m-1} used), evaluate for each point x the last
///    two orthonormal polynomial values p_{m-2}(x), p_{m-1}(x) and the
///    partial sum  sum_{j=0}^{m-1} p_j(x)^2, with overflow protection: when
///    |p_j| exceeds 1e150 the running pair is rescaled by 2^-512 (and the
///    sum by 2^-1024) and the per-entry scale exponent is bumped, so callers
///    that only consume scale-homogeneous ratios can ignore the exponent.
///
/// Every kernel exists in a scalar reference version and (on x86-64) an
/// AVX2 version written with intrinsics.  Both perform the same IEEE-754
/// binary64 operations in the same order, so their results are required to
/// be bit-identical; the test suite asserts exactly that.  Which version
/// runs is selected at runtime from CPU capabilities and can be overridden.

#include <cstddef>

namespace zeroprod::kernels {

/// Instruction-set choice for the batched kernels.
enum class Isa { scalar, avx2 };

/// True if the given instruction set can run on this build and machine.
bool isa_supported(Isa isa) noexcept;

/// Currently selected instruction set (defaults to the best supported one).
Isa active_isa() noexcept;

/// Force a specific instruction set (e.g. scalar, for equivalence testing).
/// Throws std::domain_error if the requested set is not supported.
void set_isa(Isa isa);

/// Number of eigenvalues strictly below shifts[i], for i = 0..k-1.
///
/// `diag` has m entries, `off2` has m-1 entries (squared off-diagonals;
/// pass nullptr when m == 1).  Zero pivots are replaced by the tiny signed
/// value -eps*(|a_j| + |b_{j-1}| + 1), the standard safeguard that keeps
/// the count correct at shifts that hit a leading-submatrix eigenvalue.
void sturm_counts(const double* diag, const double* off2, std::size_t m,
                  const double* shifts, std::size_t k, int* counts);

/// Same as sturm_counts, but batch entry i uses last_off2[i] in place of
/// off2[m-2] for the trailing squared off-diagonal.  Requires m >= 2.
void sturm_counts_lastoff(const double* diag, const double* off2,
                          std::size_t m, const double* last_off2,
                          const double* shifts, std::size_t k, int* counts);

/// Orthonormal recurrence tails at k points.
///
/// For each i, starting from p_{-1} = 0, p_0 = 1, runs
///     p_j = ((x - a_j) p_{j-1} - b_{j-1} p_{j-2}) / b_j,   j = 1..m-1,
/// and writes p_prev[i] = p_{m-2}(x_i), p_last[i] = p_{m-1}(x_i), and
/// sumsq[i] = sum_{j=0}^{m-1} p_j(x_i)^2, all at the common per-entry scale
/// 2^scale_log2[i] (zero unless the 1e150 overflow guard fired).
/// `a` needs m-1 leading entries, `b` needs m-1 (pass nullptr when m == 1).
void recurrence_tails(const double* a, const double* b, std::size_t m,
                      const double* xs, std::size_t k, double* p_prev,
                      double* p_last, double* sumsq, int* scale_log2);

/// Reference implementations, callable directly (used by equivalence tests).
namespace scalar {
void sturm_counts(const double* diag, const double* off2, std::size_t m,
                  const double* shifts, std::size_t k, int* counts);
void sturm_counts_lastoff(const double* diag, const double* off2,
                          std::size_t m, const double* last_off2,
                          const double* shifts, std::size_t k, int* counts);
void recurrence_tails(const double* a, const double* b, std::size_t m,
                      const double* xs, std::size_t k, double* p_prev,
                      double* p_last, double* sumsq, int* scale_log2);
}  // namespace scalar

#if defined(ZEROPROD_HAVE_AVX2)
/// AVX2 implementations, callable directly (used by equivalence tests).
namespace avx2 {
void sturm_counts(const double* diag, const double* off2, std::size_t m,
                  const double* shifts, std::size_t k, int* counts);
void sturm_counts_lastoff(const double* diag, const double* off2,
                          std::size_t m, const double* last_off2,
                          const double* shifts, std::size_t k, int* counts);
void recurrence_tails(const double* a, const double* b, std::size_t m,
                      const double* xs, std::size_t k, double* p_prev,
                      double* p_last, double* sumsq, int* scale_log2);
}  // namespace avx2
#endif

}  // namespace zeroprod::kernels

#endif  // ZEROPROD_KERNELS_HPP
