// Command-line front end for the zero-product library: polynomial zeros,
// extreme-zero product sequences, deformation paths with derivative
// columns, closed-form bound grids, inequality verification reports, and
// polynomial identity residuals, all as deterministic CSV.
//
// Exit codes: 0 success (for `verify`: every requested verdict holds),
// 1 at least one verify verdict is not `holds`, 2 usage or domain error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zeroprod/bounds.hpp"
#include "zeroprod/harness.hpp"
#include "zeroprod/orthopoly.hpp"
#include "zeroprod/parametric.hpp"
#include "zeroprod/tridiag.hpp"

namespace {

using namespace zeroprod;

// Parsed command line; one subcommand per run.
struct RunConfig {
  std::string subcommand;
  std::string family;      // zeros/products
  std::string check;       // verify
  std::string transition = "t";
  int n = 0;
  int n_min = 5;
  int n_max = 0;
  double alpha = 0.0;
  bool has_alpha = false;
  double t = 0.0;
  std::vector<double> alpha_list;
  std::string t_grid_spec;  // "count,lo,hi"
  double tol = 0.0;
  bool has_tol = false;
  std::string out_path;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> parse_t_grid(const std::string& spec) {
  int count = 0;
  double lo = 0.0, hi = 0.0;
  char tail = 0;
  if (std::sscanf(spec.c_str(), "%d,%lf,%lf%c", &count, &lo, &hi, &tail) != 3)
    throw std::domain_error("t-grid must be count,lo,hi (e.g. 101,0,1)");
  return uniform_grid(lo, hi, count);
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_)
        throw std::domain_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

double tol_or_default(const RunConfig& cfg, const JacobiMatrix& M) {
  return cfg.has_tol ? cfg.tol : default_tol(M);
}

int run_zeros(const RunConfig& cfg) {
  std::vector<double> zeros;
  if (cfg.family == "laguerre") {
    if (!cfg.has_alpha)
      throw std::domain_error("zeros --family laguerre requires --alpha");
    const JacobiMatrix J = laguerre_matrix(cfg.n, cfg.alpha);
    zeros = laguerre_zeros(cfg.n, cfg.alpha, tol_or_default(cfg, J));
  } else if (cfg.family == "hermite") {
    if (cfg.has_alpha)
      throw std::domain_error("zeros --family hermite takes no --alpha");
    if (cfg.has_tol)
      zeros = hermite_positive_zeros(cfg.n, cfg.tol);
    else
      zeros = hermite_positive_zeros(cfg.n);
  } else {
    throw std::domain_error("zeros: --family must be laguerre or hermite");
  }
  Output out(cfg.out_path);
  out.stream() << "index,value\n";
  for (std::size_t i = 0; i < zeros.size(); ++i)
    out.stream() << (i + 1) << ',' << num(zeros[i]) << '\n';
  return 0;
}

int run_products(const RunConfig& cfg) {
  ProductFamilySpec spec = ProductFamilySpec::laguerre(0.0);
  if (cfg.family == "laguerre") {
    if (!cfg.has_alpha)
      throw std::domain_error("products --family laguerre requires --alpha");
    spec = ProductFamilySpec::laguerre(cfg.alpha);
  } else if (cfg.family == "hermite-even") {
    spec = ProductFamilySpec::hermite_even();
  } else if (cfg.family == "hermite-odd") {
    spec = ProductFamilySpec::hermite_odd();
  } else {
    throw std::domain_error(
        "products: --family must be laguerre, hermite-even, or hermite-odd");
  }
  const std::vector<ProductSequenceEntry> seq =
      cfg.has_tol ? product_sequence(spec, cfg.n_max, cfg.tol)
                  : product_sequence(spec, cfg.n_max);
  Output out(cfg.out_path);
  out.stream() << "n,alpha,y\n";
  for (const ProductSequenceEntry& e : seq)
    out.stream() << e.n << ',' << num(e.alpha) << ',' << num(e.y) << '\n';
  return 0;
}

int run_path(const RunConfig& cfg) {
  const JacobiMatrix base = laguerre_matrix(cfg.n + 1, cfg.alpha);
  const DeformedJacobi D(base, TransitionFunction::by_name(cfg.transition));
  const std::vector<double> grid = parse_t_grid(cfg.t_grid_spec);
  const auto samples = extreme_path(D, grid, tol_or_default(cfg, base));
  Output out(cfg.out_path);
  out.stream() << "t,lambda_min,lambda_max,product,dmin_closed,dmin_fd,"
                  "dmax_closed,dmax_fd\n";
  for (const SpectrumPathSample& s : samples)
    out.stream() << num(s.t) << ',' << num(s.lambda_min) << ','
                 << num(s.lambda_max) << ',' << num(s.product) << ','
                 << num(s.dlambda_min_closed) << ',' << num(s.dlambda_min_fd)
                 << ',' << num(s.dlambda_max_closed) << ','
                 << num(s.dlambda_max_fd) << '\n';
  return 0;
}

int run_bounds(const RunConfig& cfg) {
  const std::vector<double> alphas =
      cfg.alpha_list.empty() ? default_alpha_grid() : cfg.alpha_list;
  if (cfg.n_min < 5 || cfg.n_max < cfg.n_min)
    throw std::domain_error("bounds: need 5 <= --n-min <= --n-max");
  Output out(cfg.out_path);
  out.stream() << "n,alpha,dk,m0,m2,prod1_margin,prod2_K\n";
  for (int n = cfg.n_min; n <= cfg.n_max; ++n)
    for (double alpha : alphas) {
      const BoundsReport r = bounds_report(n, alpha);
      out.stream() << r.n << ',' << num(r.alpha) << ',' << num(r.dk_upper)
                   << ',' << num(r.m0_upper) << ',' << num(r.m2_lower) << ','
                   << num(r.prod1_margin) << ',' << num(r.prod2_K) << '\n';
    }
  return 0;
}

int run_verify(const RunConfig& cfg) {
  const std::vector<double> alphas =
      cfg.alpha_list.empty() ? default_alpha_grid() : cfg.alpha_list;
  ConjectureReport report;
  if (cfg.check == "gazeau") {
    report = check_gazeau_inequality(cfg.n_max > 0 ? cfg.n_max : 400);
  } else if (cfg.check == "laguerre-monotone") {
    report = check_laguerre_product_monotonicity(
        alphas, cfg.n_max > 0 ? cfg.n_max : 100);
  } else if (cfg.check == "proposition") {
    const std::string spec =
        cfg.t_grid_spec.empty() ? "50,0,0.568774" : cfg.t_grid_spec;
    report = check_proposition(alphas, cfg.n_min,
                               cfg.n_max > 0 ? cfg.n_max : 60,
                               parse_t_grid(spec));
  } else if (cfg.check == "conjecture") {
    const std::string spec =
        cfg.t_grid_spec.empty() ? "20,0.05,1" : cfg.t_grid_spec;
    report = check_conjecture(alphas, cfg.n_min,
                              cfg.n_max > 0 ? cfg.n_max : 60,
                              parse_t_grid(spec), cfg.transition);
  } else {
    throw std::domain_error(
        "verify: --check must be gazeau, laguerre-monotone, proposition, or "
        "conjecture");
  }
  Output out(cfg.out_path);
  out.stream() << "case,verdict,margin\n";
  for (const CaseResult& c : report.cases)
    out.stream() << c.label << ',' << to_string(c.verdict) << ','
                 << num(c.margin) << '\n';
  std::cerr << report.name << " [" << report.params
            << "]: overall=" << to_string(report.overall)
            << " worst_margin=" << num(report.worst_margin) << " at \""
            << report.worst_label << "\"\n";
  return report.overall == Verdict::holds ? 0 : 1;
}

int run_identities(const RunConfig& cfg) {
  const JacobiMatrix base = laguerre_matrix(cfg.n + 1, cfg.alpha);
  const DeformedJacobi D(base, TransitionFunction::by_name(cfg.transition));
  const IdentityReport report =
      verify_polynomial_identities(D, cfg.t, tol_or_default(cfg, base));
  Output out(cfg.out_path);
  out.stream() << "identity,residual\n";
  for (const IdentityResidual& item : report.items)
    out.stream() << item.name << ',' << num(item.residual) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{
      "zeroprod: extreme zeros of Laguerre/Hermite polynomials, "
      "trailing-coupling deformation paths, bounds, and inequality checks"};
  app.require_subcommand(1);

  CLI::App* zeros = app.add_subcommand(
      "zeros", "Zeros of a Laguerre polynomial / positive Hermite zeros");
  zeros->add_option("--family", cfg.family, "laguerre or hermite")
      ->required();
  zeros->add_option("--n", cfg.n, "polynomial degree")->required();
  auto* zeros_alpha = zeros->add_option("--alpha", cfg.alpha,
                                        "Laguerre parameter (> -1)");

  CLI::App* products = app.add_subcommand(
      "products", "Extreme-zero product sequence y_n");
  products
      ->add_option("--family", cfg.family,
                   "laguerre, hermite-even, or hermite-odd")
      ->required();
  products->add_option("--n-max", cfg.n_max, "largest degree")->required();
  auto* products_alpha =
      products->add_option("--alpha", cfg.alpha, "Laguerre parameter (> -1)");

  CLI::App* path = app.add_subcommand(
      "path", "Extreme eigenvalue path of the deformed matrix over t");
  path->add_option("--n", cfg.n, "deformation index (matrix dimension n+1)")
      ->required();
  path->add_option("--alpha", cfg.alpha, "Laguerre parameter (> -1)")
      ->required();
  path->add_option("--f", cfg.transition, "transition: t, t2, or sqrt-t")
      ->capture_default_str();
  path->add_option("--t-grid", cfg.t_grid_spec, "count,lo,hi")
      ->default_val("101,0,1");

  CLI::App* bounds = app.add_subcommand(
      "bounds", "Closed-form bound grid (dk/m0/m2 and positivity margins)");
  bounds->add_option("--n-min", cfg.n_min, "smallest n (>= 5)")
      ->capture_default_str();
  bounds->add_option("--n-max", cfg.n_max, "largest n")->default_val(200);
  bounds->add_option("--alpha-list", cfg.alpha_list,
                     "comma-separated alpha values")
      ->delimiter(',');

  CLI::App* verify = app.add_subcommand(
      "verify", "Inequality verification report (exit 0 iff all hold)");
  verify
      ->add_option("--check", cfg.check,
                   "gazeau, laguerre-monotone, proposition, or conjecture")
      ->required();
  verify->add_option("--n-min", cfg.n_min, "smallest n")
      ->capture_default_str();
  verify->add_option("--n-max", cfg.n_max, "largest n (0 = check default)");
  verify->add_option("--alpha-list", cfg.alpha_list,
                     "comma-separated alpha values")
      ->delimiter(',');
  verify->add_option("--t-grid", cfg.t_grid_spec, "count,lo,hi");
  verify->add_option("--f", cfg.transition, "transition for conjecture")
      ->capture_default_str();

  CLI::App* identities = app.add_subcommand(
      "identities", "Polynomial identity residual table at one (n, alpha, t)");
  identities
      ->add_option("--n", cfg.n, "deformation index (matrix dimension n+1)")
      ->required();
  identities->add_option("--alpha", cfg.alpha, "Laguerre parameter (> -1)")
      ->required();
  identities->add_option("--f", cfg.transition, "transition: t, t2, or sqrt-t")
      ->capture_default_str();
  identities->add_option("--t", cfg.t, "deformation parameter in (0, 1)")
      ->required();

  for (CLI::App* sub : {zeros, products, path, bounds, verify, identities}) {
    sub->add_option("--tol", cfg.tol,
                    "bisection tolerance (default: per-matrix)");
    sub->add_option("--out", cfg.out_path, "output CSV path (default stdout)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cfg.has_alpha = zeros_alpha->count() > 0 || products_alpha->count() > 0 ||
                  path->parsed() || identities->parsed();
  for (CLI::App* sub : {zeros, products, path, bounds, verify, identities})
    if (sub->parsed()) {
      cfg.subcommand = sub->get_name();
      if (sub->count("--tol") > 0) cfg.has_tol = true;
    }

  try {
    if (cfg.has_tol && !(cfg.tol > 0.0))
      throw std::domain_error("--tol must be positive");
    if (cfg.subcommand == "zeros") return run_zeros(cfg);
    if (cfg.subcommand == "products") return run_products(cfg);
    if (cfg.subcommand == "path") return run_path(cfg);
    if (cfg.subcommand == "bounds") return run_bounds(cfg);
    if (cfg.subcommand == "verify") return run_verify(cfg);
    if (cfg.subcommand == "identities") return run_identities(cfg);
    throw std::domain_error("no subcommand selected");
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
}
