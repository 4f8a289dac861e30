#ifndef ZEROPROD_BOUNDS_HPP
#define ZEROPROD_BOUNDS_HPP

/// Closed-form bounds on the extreme zeros of generalized Laguerre
/// polynomials and the positivity chains built from them.
///
/// The three bounds are referred to throughout by their short tags:
///   dk — upper bound on the largest zero of the degree-(n+1) polynomial,
///   m0 — upper bound on the smallest zero of the degree-n polynomial,
///   m2 — lower bound on the largest zero of the degree-n polynomial.
/// From these, two derived quantities certify spectral inequalities for
/// the trailing-coupling deformation without any eigensolve:
///   prod1_margin  — lower bound on 2 a_{n+1} - lambda_min - lambda_max,
///   prod2_constant — largest K with
///       (a_{n+1} - lambda_min)(lambda_max - a_{n+1}) > K (a_{n+1} + b_n^2)
/// certified by the dk/m0/m2 sandwich.  The admissible deformation range
/// for the identity transition follows from t_threshold(K), the root of
/// t^4 / (1 - t^2) = K.

namespace zeroprod {

/// Upper bound on the largest zero of the degree-(n+1) generalized
/// Laguerre polynomial:
///   (2(n+1)^2 + 2(alpha+1) + (alpha-1)(n+1)
///     + 2 n sqrt((n+1)^2 + (alpha+1)(n+3))) / (n+3).
/// Requires n >= 1 and alpha > -1 (throws std::domain_error).
double dk_bound(int n, double alpha);

/// Upper bound on the smallest zero of the degree-n generalized Laguerre
/// polynomial:
///   [ (alpha+2)_2 (3n + 2 alpha + 2) - sqrt(R) ] / (2 (n+alpha+1)_2),
/// with (x)_2 = x (x+1) and
///   R = (alpha+2)_2 ( 9 (alpha+2)_2
///         + 2 (2 alpha + 5)(alpha^2 + 5 alpha + 10)(n - 1)
///         + (5 alpha^2 + 25 alpha + 38)(n - 1)^2 ).
/// Requires n >= 2 and alpha > -1 (throws std::domain_error).
double dj_lower_zero_bound(int n, double alpha);

/// Lower bound on the largest zero of the degree-n generalized Laguerre
/// polynomial: 2n + alpha - 2 + sqrt(n^2 - 2n + alpha n + 2).
/// Throws std::domain_error when the radicand is negative.
double m2_largest_zero_bound(int n, double alpha);

/// Explicit lower bound on 2 a_{n+1} - lambda_min(t) - lambda_max(t) for
/// the deformed matrix of dimension n+1:
///   4n + 2 alpha + 2 - m0(n, alpha) - dk(n, alpha).
/// A positive value certifies the sum bound for every t.  Requires n >= 5.
double prod1_margin(int n, double alpha);

/// Largest K such that the dk/m0/m2 sandwich certifies
/// (a_{n+1} - lambda_min)(lambda_max - a_{n+1}) > K (a_{n+1} + b_n^2):
///   K(n, alpha) = (a_{n+1} - m0)(m2 - a_{n+1}) / (a_{n+1} + b_n^2),
/// where a_{n+1} + b_n^2 = n(alpha+2) + n^2 + alpha + 1.  Requires n >= 5.
double prod2_constant(int n, double alpha);

/// The unique root t* in (0, 1) of t^4 / (1 - t^2) = K, computed from the
/// quadratic in t^2 (rationalized form t^2 = 2K / (K + sqrt(K^2 + 4K)));
/// falls back to bisection to width 1e-12 when the closed form is not
/// finite.  Strictly increasing in K with t* -> 1 as K -> infinity.
/// Requires K > 0 (throws std::domain_error).
double t_threshold(double K);

/// The supremum of alpha for which prod1_margin(n, alpha) stays positive
/// for every n in {5..n_big}, located by bisection on alpha to width
/// 1e-6.  The inner scan over n exits early once the margin has been
/// strictly increasing for 50 consecutive degrees while safely positive.
double alpha_star(int n_big = 10000);

/// All bound values for one (n, alpha) cell; n >= 5.
struct BoundsReport {
  int n;
  double alpha;
  double dk_upper;      ///< dk_bound(n, alpha)
  double m0_upper;      ///< dj_lower_zero_bound(n, alpha)
  double m2_lower;      ///< m2_largest_zero_bound(n, alpha)
  double prod1_margin;  ///< sum-bound margin; positive certifies
  double prod2_K;       ///< prod2_constant(n, alpha)
};

BoundsReport bounds_report(int n, double alpha);

}  // namespace zeroprod

#endif  // ZEROPROD_BOUNDS_HPP
