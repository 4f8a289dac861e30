#ifndef ZEROPROD_PARAMETRIC_HPP
#define ZEROPROD_PARAMETRIC_HPP

/// Parametric deformation of a Jacobi matrix through its trailing
/// coupling: the dimension-(n+1) matrix keeps every coefficient of its
/// base except the last off-diagonal, which becomes b_n * f(t) for a
/// monotone transition function f.  This module tracks the extreme
/// eigenvalues along t, computes their derivative both as the Hadamard
/// first variation (eigenvector form) and in closed form through
/// polynomial ratios, exposes the sign functional Q that certifies when
/// the extreme-eigenvalue product increases, and verifies the polynomial
/// identities underlying the closed forms.
///
/// Eigenvalues feeding the derivative formulas and identity checks are
/// always refined to the roundoff-limited bracket regardless of the `tol`
/// argument (a few extra bisection steps); `tol` governs the reported
/// path samples and the degeneracy guards.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "zeroprod/tridiag.hpp"

namespace zeroprod {

/// Monotone scalar transition with analytic derivative on [a, b].
///
/// Construction validates the contract on a 31-point interior sample:
/// the analytic derivative must agree with a central difference to
/// relative error 1e-6, f must avoid the values 0 and 1 at the samples,
/// and the sampled derivative must keep one strict sign (monotonicity).
/// Violations throw std::domain_error.
class TransitionFunction {
 public:
  using Fn = std::function<double(double)>;

  TransitionFunction(Fn eval, Fn deriv, double a, double b,
                     std::string name = "custom");

  double value(double t) const { return eval_(t); }
  double slope(double t) const { return deriv_(t); }
  double lower() const { return a_; }
  double upper() const { return b_; }
  int monotonicity() const { return monotonicity_; }  ///< +1 or -1
  const std::string& name() const { return name_; }

  /// Built-in transitions on [0, 1].
  static TransitionFunction identity();     ///< f(t) = t
  static TransitionFunction square();       ///< f(t) = t^2
  static TransitionFunction square_root();  ///< f(t) = sqrt(t)

  /// Lookup by CLI spelling: "t", "t2", "sqrt-t".
  static TransitionFunction by_name(const std::string& name);

 private:
  Fn eval_;
  Fn deriv_;
  double a_;
  double b_;
  int monotonicity_;
  std::string name_;
};

/// A Jacobi matrix of dimension n+1 whose trailing off-diagonal is
/// deformed to b_n * f(t).  Requires dimension >= 2.
struct DeformedJacobi {
  JacobiMatrix base;
  TransitionFunction f;
  DeformedJacobi(JacobiMatrix base, TransitionFunction f);
  std::size_t dim() const noexcept { return base.dim(); }
};

/// Copy of the base with the trailing off-diagonal replaced by b_n * f(t).
/// Throws std::domain_error if t is outside [a, b].
JacobiMatrix deformed_matrix(const DeformedJacobi& D, double t);

/// Which end of the spectrum a derivative refers to.
enum class Extreme { min, max };

/// One point of an extreme-eigenvalue path.  Derivative estimates are NaN
/// at grid endpoints of [a, b] and wherever the evaluation guards refuse
/// (trailing coupling or spectral gap too small); see hadamard_derivative.
struct SpectrumPathSample {
  double t;
  double lambda_min;
  double lambda_max;
  double product;  ///< lambda_min * lambda_max
  double dlambda_min_closed;
  double dlambda_min_fd;
  double dlambda_max_closed;
  double dlambda_max_fd;
};

/// (lambda_min, lambda_max) of the deformed matrix at each grid point,
/// solved in one trailing-coupling batch.  The grid must be sorted and
/// inside [a, b].
std::vector<std::pair<double, double>> extreme_pairs(
    const DeformedJacobi& D, const std::vector<double>& t_grid, double tol);

/// Full path samples: extremes and product at every grid point, plus
/// closed-form (Hadamard) and centered finite-difference (h = 1e-6)
/// derivative estimates at interior points.
std::vector<SpectrumPathSample> extreme_path(const DeformedJacobi& D,
                                             const std::vector<double>& t_grid,
                                             double tol);

/// d lambda / d t for the chosen extreme at interior t, as the Hadamard
/// first variation 2 b_n f'(t) v_n v_{n+1} of the deformed matrix's unit
/// eigenvector v.  Throws std::domain_error for non-interior t or
/// |f(t)| < 1e-8 (coupling too weak for the eigenvector normalization),
/// std::runtime_error if the extreme eigenvalue is within 1e3 * tol of its
/// neighbor (derivative unreliable near degeneracy).
double hadamard_derivative(const DeformedJacobi& D, double t, Extreme which,
                           double tol);

/// lambda(t) / lambda'(t) in closed form:
///     (f^2 - 1) / (2 f f') * P(lambda),
///     P(x) = x p'_{n+1}(x)/p_{n+1}(x) - x p'_{n-1}(x)/p_{n-1}(x),
/// with p_k the base (undeformed) orthonormal polynomials.  Guards as for
/// hadamard_derivative, plus std::runtime_error when |f^2 - 1| < 1e-12
/// (the prefactor degenerates; the limit is finite but the quotient form
/// is not evaluable) or when lambda falls within 1e3 * tol * (1+|a_{n+1}|)
/// of the trailing diagonal entry a_{n+1} (the only configuration in which
/// p_{n+1} and p_{n-1} can vanish together).
double closed_form_inverse_derivative(const DeformedJacobi& D, double t,
                                      Extreme which, double tol);

/// Sign functional of the extreme-eigenvalue product, in the simplified
/// algebraic form valid for Laguerre-type coefficients (b_{n+1}^2 - b_n^2
/// = a_{n+1}):
///     (2 a_{n+1} - l1 - l2) * (1 - f^4/(1-f^2) * (a_{n+1}+b_n^2)
///                                  / ((a_{n+1}-l1)(l2-a_{n+1}))) + 2 f^2
/// where l1, l2 are the extreme eigenvalues at t.  Guards as for
/// closed_form_inverse_derivative.
double q_functional(const DeformedJacobi& D, double t, double tol);

/// The same functional evaluated from first principles as
/// P(l1) + P(l2) + f^2 (l1/(l1 - a_{n+1}) + l2/(l2 - a_{n+1})); used as an
/// algebraic-identity oracle for q_functional.
double q_functional_p_sum(const DeformedJacobi& D, double t, double tol);

/// One named identity residual.  Residuals are relative to the largest
/// additive term entering either side of the identity (backward-error
/// normalization: both sides of several identities vanish at eigenvalues,
/// so normalizing by the sides themselves would be meaningless).
struct IdentityResidual {
  std::string name;
  double residual;
};

struct IdentityReport {
  std::vector<IdentityResidual> items;
  double max_residual;
};

/// Evaluates the polynomial identities behind the closed forms for a
/// Laguerre-based deformation at interior t and reports their residuals:
///   relation      f^2 b_{n+1} p_{n+1}(x,t) = b_{n+1} p_{n+1}(x)
///                                            + b_n (1-f^2) p_{n-1}(x)
///   combination1  b_{n+1} p_{n+1}(l) = (f^2-1) b_n p_{n-1}(l)
///   norm          |v|^2 = b_{n+1} p'_{n+1}(l,t) p_n(l)
///                         + ((f^2-1)/f^2) p_n^2(l)
///   rel1          L_{n+1}(l) = ((n+alpha)(f^2-1)/(n+1)) L_{n-1}(l)
///   rel2          L_n(l) = -((n+alpha) f^2/(l - a_{n+1})) L_{n-1}(l)
///   P1            x L_n'(x) = n L_n(x) - (n+alpha) L_{n-1}(x)
///   P2            L_{n-1}'(x) = L_n'(x) + L_{n-1}(x)
/// evaluated at both extreme eigenvalues l (P1/P2 at five deterministic
/// pseudo-random points spanning the spectrum).  The base must carry
/// Laguerre coefficients (checked; std::domain_error otherwise).
IdentityReport verify_polynomial_identities(const DeformedJacobi& D, double t,
                                            double tol);

/// Entry-wise alpha-derivative of the deformed Laguerre matrix of
/// dimension n+1 at transition value t (identity transition): unit
/// diagonal, off-diagonals sqrt(k)/(2 sqrt(k+alpha)) for k = 1..n-1, and
/// trailing entry n t / (2 sqrt(n (n+alpha))).
///
/// For alpha > 0 every off-diagonal is < 1/2, so the matrix is strictly
/// diagonally dominant with positive diagonal, hence positive definite;
/// at alpha = 0 dominance is weak (interior row sums equal 1) but the
/// matrix is still positive definite (irreducible, with strict first and
/// last rows).  For alpha < 0 the leading off-diagonal 1/(2 sqrt(1+alpha))
/// exceeds 1/2 and the matrix can be indefinite (it is for alpha = -0.9),
/// so the definiteness argument for eigenvalue growth in alpha is confined
/// to alpha >= 0; the growth itself holds on the whole range alpha > -1
/// and is verified spectrally by the test suite.
JacobiMatrix alpha_derivative_matrix(int n, double alpha, double t);

}  // namespace zeroprod

#endif  // ZEROPROD_PARAMETRIC_HPP
