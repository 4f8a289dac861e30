// Acceptance gate: one self-contained binary that re-derives every headline
// result at desk scale and prints one PASS/FAIL line per criterion.  Exits
// nonzero if any criterion fails.  Runs in well under a minute.
#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "zeroprod/bounds.hpp"
#include "zeroprod/harness.hpp"
#include "zeroprod/orthopoly.hpp"
#include "zeroprod/parametric.hpp"
#include "zeroprod/tridiag.hpp"

using namespace zeroprod;

namespace {

int g_pass = 0, g_fail = 0;

void report(int id, bool ok, const std::string& text) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, text.c_str());
  (ok ? g_pass : g_fail)++;
}

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, pattern);
  std::vsnprintf(buf, sizeof buf, pattern, ap);
  va_end(ap);
  return buf;
}

bool all_hold(const ConjectureReport& r, const std::string& label_substr,
              int* count = nullptr) {
  bool ok = true;
  int seen = 0;
  for (const CaseResult& c : r.cases) {
    if (c.label.find(label_substr) == std::string::npos) continue;
    ++seen;
    if (c.verdict != Verdict::holds) ok = false;
  }
  if (count) *count = seen;
  return ok && seen > 0;
}

// Deterministic sample set shared by the derivative and identity criteria.
struct DerivativeSampleStats {
  double worst_fd = 0.0;      // hadamard vs centered difference, relative
  double worst_closed = 0.0;  // hadamard vs closed form, relative
  double worst_identity = 0.0;
  int sign_violations = 0;
  int unresolved = 0;  // closed form refused (too near a pole)
  int samples = 0;
};

DerivativeSampleStats run_derivative_samples() {
  DerivativeSampleStats s;
  std::mt19937 rng(20260814u);
  std::uniform_int_distribution<int> pick_n(5, 40);
  std::uniform_real_distribution<double> pick_alpha(-0.95, 48.0);
  std::uniform_real_distribution<double> pick_t(0.2, 0.8);
  std::uniform_int_distribution<int> pick_f(0, 2);
  const char* names[3] = {"t", "t2", "sqrt-t"};
  const double h = 1e-6;

  for (int i = 0; i < 100; ++i) {
    const int n = pick_n(rng);
    const double alpha = pick_alpha(rng);
    const double t = pick_t(rng);
    const DeformedJacobi D(laguerre_matrix(n + 1, alpha),
                           TransitionFunction::by_name(names[pick_f(rng)]));
    const double tol = default_tol(D.base);
    const auto pairs = extreme_pairs(D, {t - h, t, t + h}, 1e-300);
    const double ffp = D.f.value(t) * D.f.slope(t);

    for (Extreme which : {Extreme::min, Extreme::max}) {
      const bool mn = which == Extreme::min;
      const double lam = mn ? pairs[1].first : pairs[1].second;
      const double fd = mn ? (pairs[2].first - pairs[0].first) / (2 * h)
                           : (pairs[2].second - pairs[0].second) / (2 * h);
      double had = 0.0, inv = 0.0;
      try {
        had = hadamard_derivative(D, t, which, tol);
        inv = closed_form_inverse_derivative(D, t, which, tol);
      } catch (const std::runtime_error&) {
        ++s.unresolved;
        continue;
      }
      s.worst_fd = std::max(s.worst_fd, std::fabs(had - fd) / std::fabs(had));
      s.worst_closed =
          std::max(s.worst_closed, std::fabs(lam / inv - had) / std::fabs(had));
      const int want = (mn ? -1 : 1) * (ffp > 0 ? 1 : -1);
      if ((had > 0 ? 1 : -1) != want) ++s.sign_violations;
    }
    s.worst_identity = std::max(
        s.worst_identity, verify_polynomial_identities(D, t, tol).max_residual);
    ++s.samples;
  }
  return s;
}

void criterion_quoted_products() {
  const auto odd = product_sequence(ProductFamilySpec::hermite_odd(), 19);
  const auto even = product_sequence(ProductFamilySpec::hermite_even(), 20);
  const int idx[4] = {17, 18, 19, 20};
  const double quoted[4] = {2.58976219107561, 1.30382961637360,
                            2.62851205461184, 1.32176837751291};
  double got[4] = {0, 0, 0, 0};
  for (const ProductSequenceEntry& e : odd) {
    if (e.n == 17) got[0] = e.y;
    if (e.n == 19) got[2] = e.y;
  }
  for (const ProductSequenceEntry& e : even) {
    if (e.n == 18) got[1] = e.y;
    if (e.n == 20) got[3] = e.y;
  }
  bool ok = true;
  std::string detail;
  for (int k = 0; k < 4; ++k) {
    const double diff = std::fabs(got[k] - quoted[k]);
    if (diff > 1e-10) {
      ok = false;
      detail += fmt("%s y(%d) computed %.14f vs quoted %.14f (off %.2e)",
                    detail.empty() ? "" : ";", idx[k], got[k], quoted[k], diff);
    }
  }
  report(1, ok,
         ok ? "all four quoted extreme-zero products reproduced to 1e-10"
            : "quoted extreme-zero products:" + detail);
}

void criterion_interlacing_suite() {
  std::mt19937 rng(7u);
  std::uniform_int_distribution<int> pick_dim(2, 50);
  std::uniform_real_distribution<double> pick_diag(-5.0, 5.0);
  std::uniform_real_distribution<double> pick_off(0.1, 2.5);
  int bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = pick_dim(rng);
    std::vector<double> d(m), e(m - 1);
    for (double& v : d) v = pick_diag(rng);
    for (double& v : e) v = pick_off(rng) * (rng() & 1u ? 1.0 : -1.0);
    const JacobiMatrix full(d, e);
    const JacobiMatrix sub(std::vector<double>(d.begin(), d.end() - 1),
                           std::vector<double>(e.begin(), e.end() - 1));
    const SpectrumResult sf = eigenvalues(full);
    const SpectrumResult ss =
        m > 1 ? eigenvalues(sub) : SpectrumResult{{}, 0.0};
    const double slack = 10.0 * (sf.tolerance + ss.tolerance);
    for (int k = 0; k + 1 < m; ++k)
      if (!(sf.eigenvalues[k] <= ss.eigenvalues[k] + slack &&
            ss.eigenvalues[k] <= sf.eigenvalues[k + 1] + slack))
        ++bad;
  }

  // Decoupled endpoint: at f=0 the spectrum splits into the leading block's
  // zeros plus the isolated corner entry.
  int decouple_bad = 0;
  for (double alpha : {-0.5, 0.0, 1.0}) {
    const int n = 10;
    const DeformedJacobi D(laguerre_matrix(n + 1, alpha),
                           TransitionFunction::identity());
    std::vector<double> expect = laguerre_zeros(n, alpha);
    expect.push_back(D.base.diag.back());
    std::sort(expect.begin(), expect.end());
    const SpectrumResult got = eigenvalues(deformed_matrix(D, 0.0));
    for (int k = 0; k <= n; ++k)
      if (std::fabs(got.eigenvalues[k] - expect[k]) >
          1e-10 * (1.0 + std::fabs(expect[k])))
        ++decouple_bad;
  }

  // Sign flip f -> -f leaves the spectrum unchanged.
  int flip_bad = 0;
  {
    const DeformedJacobi P(laguerre_matrix(11, 0.25),
                           TransitionFunction::identity());
    const TransitionFunction neg([](double t) { return -t; },
                                 [](double) { return -1.0; }, 0.0, 1.0,
                                 "neg-t");
    const DeformedJacobi N(laguerre_matrix(11, 0.25), neg);
    for (double t : {0.2, 0.5, 0.8}) {
      const SpectrumResult a = eigenvalues(deformed_matrix(P, t));
      const SpectrumResult b = eigenvalues(deformed_matrix(N, t));
      for (std::size_t k = 0; k < a.eigenvalues.size(); ++k)
        if (std::fabs(a.eigenvalues[k] - b.eigenvalues[k]) >
            1e-11 * (1.0 + std::fabs(a.eigenvalues[k])))
          ++flip_bad;
    }
  }

  // Both extreme eigenvalues grow with alpha, across the whole alpha grid;
  // the coefficient-derivative matrix itself is positive definite for
  // alpha >= 0 (for negative alpha it can be indefinite even though the
  // growth persists, so the definiteness check is scoped accordingly).
  int growth_bad = 0, pd_bad = 0;
  for (double alpha : default_alpha_grid())
    for (double t : {0.3, 0.6, 0.9}) {
      const DeformedJacobi lo(laguerre_matrix(21, alpha),
                              TransitionFunction::identity());
      const DeformedJacobi hi(laguerre_matrix(21, alpha + 0.1),
                              TransitionFunction::identity());
      const auto pl = extreme_pairs(lo, {t}, default_tol(lo.base));
      const auto ph = extreme_pairs(hi, {t}, default_tol(hi.base));
      if (!(ph[0].first > pl[0].first + 1e-10 &&
            ph[0].second > pl[0].second + 1e-10))
        ++growth_bad;
    }
  for (double alpha : {0.0, 0.5, 1.0, 10.0, 47.9})
    for (double t : {0.3, 1.0}) {
      const SpectrumResult sp = eigenvalues(alpha_derivative_matrix(20, alpha, t));
      if (!(sp.eigenvalues.front() > 10.0 * sp.tolerance)) ++pd_bad;
    }

  const bool ok =
      bad == 0 && decouple_bad == 0 && flip_bad == 0 && growth_bad == 0 &&
      pd_bad == 0;
  report(11, ok,
         fmt("property suites: interlacing %d/1000 bad, decoupling %d bad, "
             "sign-flip %d bad, alpha-growth %d bad, dJ/dalpha PD (alpha>=0) "
             "%d bad",
             bad, decouple_bad, flip_bad, growth_bad, pd_bad));
}

}  // namespace

int main() {
  // 1. Quoted product values (two of the four historical quotes differ from
  //    the recomputed values; see README for the discrepancy analysis).
  criterion_quoted_products();

  // 2. Product growth in n plus the parity ceilings, through n = 400.
  {
    const ConjectureReport gz = check_gazeau_inequality(400);
    int growth = 0, ceil_lo = 0, ceil_hi = 0;
    bool ok = true;
    for (const CaseResult& c : gz.cases) {
      if (c.label.find("within") != std::string::npos) continue;  // criterion 1
      if (c.label.find("pi/2") != std::string::npos)
        ++ceil_lo;
      else if (c.label.find("pi") != std::string::npos)
        ++ceil_hi;
      else
        ++growth;
      if (c.verdict != Verdict::holds) ok = false;
    }
    report(2, ok && growth > 0 && ceil_lo > 0 && ceil_hi > 0,
           fmt("y(n)<y(n+2) and the pi/2 / pi ceilings hold to n=400 "
               "(%d growth, %d+%d ceiling cases)",
               growth, ceil_lo, ceil_hi));
  }

  // 3. Product sequences strictly increasing in n for five alpha values.
  {
    const ConjectureReport r = check_laguerre_product_monotonicity(
        {-0.25, -0.5, 0.0, 0.5, 1.0}, 100);
    report(3, r.overall == Verdict::holds,
           fmt("laguerre products increase through n=100 for 5 alphas "
               "(worst margin %.3e)",
               r.worst_margin));
  }

  // 4./5. Increasing product paths and Q positivity on the certified grids.
  {
    const ConjectureReport main_grid =
        check_proposition({-0.9, -0.5, 0.0, 0.5, 1.0, 10.0, 47.9}, 5, 60,
                          uniform_grid(0.0, 0.568774, 50));
    const ConjectureReport big =
        check_proposition({-0.5, 0.5}, 199, 199, uniform_grid(0.0, 0.8531, 50));
    int inc_a = 0, inc_b = 0, q_a = 0, q_b = 0;
    const bool inc_ok = all_hold(main_grid, "increasing", &inc_a) &&
                        all_hold(big, "increasing", &inc_b);
    const bool q_ok =
        all_hold(main_grid, "Qmin", &q_a) && all_hold(big, "Qmin", &q_b);
    report(4, inc_ok,
           fmt("product path increases on [0,0.568774] for n=5..60 x 7 alphas "
               "and on [0,0.8531] at n=199, alpha=+-0.5 (%d cases)",
               inc_a + inc_b));
    report(5, q_ok,
           fmt("Q functional stays positive on the same grids (%d cases)",
               q_a + q_b));
  }

  // 6. Threshold solver closed form and quoted root.
  {
    const double t_exact = t_threshold(1.0 / 12.0);
    const double t_quoted = t_threshold(0.985135);
    const bool ok = std::fabs(t_exact - 0.5) <= 1e-12 &&
                    std::fabs(t_quoted - 0.784522) <= 1e-5;
    report(6, ok,
           fmt("t_threshold(1/12)=%.15f, t_threshold(0.985135)=%.6f", t_exact,
               t_quoted));
  }

  // 7. Closed-form bounds strictly sandwich the computed extreme eigenvalues.
  {
    int bad = 0;
    double worst = 1e300;
    for (int n = 5; n <= 200; ++n)
      for (double alpha : default_alpha_grid()) {
        const BoundsReport b = bounds_report(n, alpha);
        const JacobiMatrix Jn = laguerre_matrix(n, alpha);
        const JacobiMatrix Jn1 = laguerre_matrix(n + 1, alpha);
        const double tn = default_tol(Jn), tn1 = default_tol(Jn1);
        const auto en = extreme_eigenvalues(Jn, tn);
        const auto en1 = extreme_eigenvalues(Jn1, tn1);
        for (double gap : {b.dk_upper - en1.second - 10 * tn1,
                           b.m0_upper - en.first - 10 * tn,
                           en.second - b.m2_lower - 10 * tn}) {
          worst = std::min(worst, gap);
          if (!(gap > 0)) ++bad;
        }
      }
    report(7, bad == 0,
           fmt("dk/m0/m2 bounds clear the eigenvalues at 10*tol for n=5..200 "
               "x 8 alphas (%d violations, tightest gap %.2e)",
               bad, worst));
  }

  // 8. Critical alpha recovered by bisection on the certificate margin.
  {
    const double a = alpha_star();
    report(8, a >= 47.94 && a <= 47.98, fmt("alpha* = %.9f in [47.94,47.98]", a));
  }

  // 9./10. Derivative machinery and identity residuals on one sample set.
  {
    const DerivativeSampleStats s = run_derivative_samples();
    const bool ok9 = s.samples == 100 && s.unresolved == 0 &&
                     s.sign_violations == 0 && s.worst_fd <= 1e-5 &&
                     s.worst_closed <= 1e-5;
    report(9, ok9,
           fmt("hadamard vs centered-difference %.2e, vs closed form %.2e, "
               "sign law violations %d, on %d random (n,alpha,t,f) samples",
               s.worst_fd, s.worst_closed, s.sign_violations, s.samples));
    report(10, s.worst_identity <= 1e-8,
           fmt("identity residuals max %.2e <= 1e-8 on the same samples",
               s.worst_identity));
  }

  // 11. Structural property suites.
  criterion_interlacing_suite();

  // 12. Non-monotone product paths that still end above their start.
  {
    bool ok = true;
    std::string detail;
    for (const char* fn : {"t", "sqrt-t", "t2"}) {
      const DeformedJacobi D(laguerre_matrix(21, 0.5),
                             TransitionFunction::by_name(fn));
      const auto path =
          extreme_path(D, uniform_grid(0.0, 1.0, 101), default_tol(D.base));
      std::size_t arg = 0;
      for (std::size_t j = 1; j < path.size(); ++j)
        if (path[j].product > path[arg].product) arg = j;
      const bool interior = arg != 0 && arg + 1 != path.size();
      const bool gained = path.back().product > path.front().product;
      ok = ok && interior && gained;
      detail += fmt("%sf=%s peak at t=%.2f gain %.1e",
                    detail.empty() ? "" : "; ", fn, path[arg].t,
                    path.back().product - path.front().product);
    }
    report(12, ok, "interior product maximum with net gain: " + detail);
  }

  std::printf("acceptance: %d/%d criteria passed\n", g_pass, g_pass + g_fail);
  return g_fail == 0 ? 0 : 1;
}
