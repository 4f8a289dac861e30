#ifndef ZEROPROD_HARNESS_HPP
#define ZEROPROD_HARNESS_HPP

/// Desk-scale verification harness for the extreme-zero product
/// inequalities: each check sweeps a parameter grid, decides every case as
/// holds / fails / numerically-unresolved, and aggregates the worst
/// margin.
///
/// Verdict policy: every inequality is strict, and binary64 cannot
/// certify a strict inequality at machine-epsilon gaps.  Each case
/// therefore carries a signed margin (positive = inequality satisfied by
/// that much) and a threshold of 10x the propagated eigenvalue
/// uncertainty of the quantities compared; |margin| at or below the
/// threshold yields `numerically_unresolved` instead of a pass/fail call.
/// All grids are deterministic, so verdicts are bit-stable across runs.

#include <string>
#include <vector>

namespace zeroprod {

enum class Verdict { holds, fails, numerically_unresolved };

/// "holds" / "fails" / "numerically-unresolved" (the CSV spelling).
const char* to_string(Verdict v);

struct CaseResult {
  std::string label;
  Verdict verdict;
  double margin;  ///< signed; positive means the inequality is satisfied
};

struct ConjectureReport {
  std::string name;    ///< "gazeau", "laguerre-monotone", "proposition", "conjecture"
  std::string params;  ///< human-readable grid description
  std::vector<CaseResult> cases;
  double worst_margin;
  std::string worst_label;
  Verdict overall;  ///< fails if any case fails, else unresolved if any, else holds
};

/// y_n < y_{n+2} for the products of extreme positive Hermite zeros, both
/// parities, n in {4..n_max}; also checks the parity ceilings (even
/// products below pi/2, odd below pi) and, when in range, cross-checks
/// the four historically quoted 15-digit values of y_17, y_18, y_19, y_20
/// at 1e-10 absolute.  Requires n_max >= 6.
ConjectureReport check_gazeau_inequality(int n_max);

/// y_n(alpha) strictly increasing in n, n in {2..n_max}, for each alpha in
/// the grid, where y_n(alpha) is the product of the extreme zeros of the
/// degree-n generalized Laguerre polynomial.  Requires n_max >= 3 and
/// every alpha > -1.
ConjectureReport check_laguerre_product_monotonicity(
    const std::vector<double>& alpha_grid, int n_max);

/// For the identity transition, the product of the extreme eigenvalues of
/// the deformed matrix of dimension n+1 is strictly increasing along
/// t_grid, and the sign functional Q(t) is positive at every interior
/// grid point; n in {n_lo..n_hi}, alpha over the grid.  Requires
/// n_lo >= 5, -1 < alpha <= 47.9603, and a sorted t_grid inside [0, 1).
ConjectureReport check_proposition(const std::vector<double>& alpha_grid,
                                   int n_lo, int n_hi,
                                   const std::vector<double>& t_grid);

/// product(t) > product(0) (endpoint comparison only -- the path need not
/// be monotone) for every t in the grid, n in {n_lo..n_hi}, alpha over
/// the grid, for the named transition ("t", "t2", "sqrt-t").  Cases with
/// alpha beyond 47.9603 probe outside the certified range and are
/// labeled as such.  Requires n_lo >= 5 and a sorted t_grid inside
/// (0, 1].
ConjectureReport check_conjecture(const std::vector<double>& alpha_grid,
                                  int n_lo, int n_hi,
                                  const std::vector<double>& t_grid,
                                  const std::string& transition = "t");

/// The default alpha grid {-0.9, -0.5, -0.25, 0, 0.5, 1, 10, 47.9}.
std::vector<double> default_alpha_grid();

/// count equispaced points from lo to hi inclusive; count >= 2.
std::vector<double> uniform_grid(double lo, double hi, int count);

}  // namespace zeroprod

#endif  // ZEROPROD_HARNESS_HPP
