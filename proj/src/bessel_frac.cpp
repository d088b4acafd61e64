#include "fracops/bessel_frac.hpp"

#include <cmath>

#include "fracops/classical.hpp"
#include "fracops/specfun.hpp"

namespace fracops::bessel {

using quadrature::integrate;
using quadrature::SingularityPolicy;
using specfun::Regime;

double bessel_apply(double nu, const FunctionHandle& f, double x) {
  if (!(x > 0.0)) throw DomainError("bessel_apply: need x > 0");
  return f.derivative(2, x) + nu / x * f.derivative(1, x);
}

double ib(double nu, double alpha, const FunctionHandle& f, double x,
          const QuadratureConfig& cfg) {
  if (!(alpha > 0.0)) throw ConfigError("ib: alpha must be > 0");
  if (!(x > 0.0)) throw DomainError("ib: need x > 0");
  const double hi = f.upper_truncation(x, cfg.abs_tol);
  if (hi <= x) return 0.0;
  const double a = alpha, b = 0.5 * (nu - 1.0);
  auto integrand = [&](double y) {
    const double w = (y * y - x * x) / (2.0 * y);
    const double omz = (x * x) / (y * y);  // 1 - z, exact for small x/y
    return std::pow(w, 2.0 * a - 1.0) *
           specfun::gauss_2f1_cc(a + b, a, 2.0 * a, omz) * f.eval(y);
  };
  QuadratureConfig local = cfg;
  if (2.0 * a - 1.0 < 0.0)
    local.policy = SingularityPolicy::left(2.0 * a - 1.0);
  auto r = integrate(integrand, x, hi, local);
  return r.value / specfun::gamma(2.0 * a);
}

double ib_legendre_form(double nu, double alpha, const FunctionHandle& f,
                        double x, const QuadratureConfig& cfg) {
  if (!(alpha > 0.0)) throw ConfigError("ib_legendre_form: alpha must be > 0");
  if (!(x > 0.0)) throw DomainError("ib_legendre_form: need x > 0");
  const double hi = f.upper_truncation(x, cfg.abs_tol);
  if (hi <= x) return 0.0;
  const double coef =
      specfun::gamma(alpha + 0.5) / specfun::gamma(2.0 * alpha);
  auto integrand = [&](double y) {
    const double d = (y - x) * (y - x) / (2.0 * x * y);
    if (d < 1e-8) {
      // leading edge behavior; the power and Legendre divergences cancel
      return std::pow(y - x, 2.0 * alpha - 1.0) * std::pow(y / x, 0.5 * nu) *
             f.eval(y) / specfun::gamma(alpha + 0.5);
    }
    const double z = 1.0 + d;
    return std::pow(y * y - x * x, alpha - 0.5) *
           std::pow(y / x, 0.5 * nu) *
           specfun::legendre_p(0.5 * nu - 1.0, 0.5 - alpha, z, Regime::OffCut) *
           f.eval(y);
  };
  QuadratureConfig local = cfg;
  // combined edge behavior (y-x)^(2 alpha - 1) after the kernel's own
  // (z-1)^((alpha-1/2)/...) factor is included
  if (2.0 * alpha - 1.0 < 0.0)
    local.policy = SingularityPolicy::left(2.0 * alpha - 1.0);
  auto r = integrate(integrand, x, hi, local);
  return coef * r.value;
}

FunctionHandle ib_image_handle(double nu, double alpha,
                               const FunctionHandle& f,
                               const QuadratureConfig& cfg) {
  if (!f.support().compact)
    throw BadSupport("ib_image_handle: operand must be compactly supported");
  const double hi = f.support().hi;
  auto eval = [nu, alpha, f, cfg](double y) {
    if (y <= 0.0) return 0.0;
    return ib(nu, alpha, f, y, cfg);
  };
  return funcmodel::make_callable(eval, funcmodel::Support::interval(1e-12, hi),
                                  0);
}

namespace {

// B_nu applied to a numerically evaluated image via a 5-point stencil.
double bessel_fd(double nu, const std::function<double(double)>& g, double x,
                 double h) {
  const double gp2 = g(x + 2.0 * h), gp1 = g(x + h), g0 = g(x),
               gm1 = g(x - h), gm2 = g(x - 2.0 * h);
  const double d1 = (-gp2 + 8.0 * gp1 - 8.0 * gm1 + gm2) / (12.0 * h);
  const double d2 =
      (-gp2 + 16.0 * gp1 - 30.0 * g0 + 16.0 * gm1 - gm2) / (12.0 * h * h);
  return d2 + nu / x * d1;
}

}  // namespace

double db(double nu, double alpha, const FunctionHandle& f, double x,
          const QuadratureConfig& cfg) {
  if (!(alpha > 0.0)) throw ConfigError("db: alpha must be > 0");
  if (!(x > 0.0)) throw DomainError("db: need x > 0");
  const int n = int(std::floor(alpha)) + 1;
  QuadratureConfig tight = cfg;
  tight.rel_tol = std::min(cfg.rel_tol, 1e-12);
  tight.abs_tol = std::min(cfg.abs_tol, 1e-13);
  std::function<double(double)> g = [=, &f](double y) {
    return ib(nu, double(n) - alpha, f, y, tight);
  };
  const double h = 0.02 * std::max(1.0, x);
  for (int j = 1; j < n; ++j) {
    auto prev = g;
    const double hj = h;
    g = [=](double y) { return bessel_fd(nu, prev, y, hj); };
  }
  return bessel_fd(nu, g, x, h);
}

double saigo(const SaigoParams& p, const FunctionHandle& f, double x,
             const QuadratureConfig& cfg) {
  if (!(p.gamma > 0.0)) throw ConfigError("saigo: gamma must be > 0");
  if (!(x > 0.0)) throw DomainError("saigo: need x > 0");
  const double hi = f.upper_truncation(x, cfg.abs_tol);
  if (hi <= x) return 0.0;
  auto integrand = [&](double t) {
    return std::pow(t, -p.gamma - p.beta) *
           specfun::gauss_2f1_cc(p.gamma + p.beta, -p.eta, p.gamma, x / t) *
           f.eval(t);
  };
  auto r = quadrature::integrate_singular_edge(
      integrand, x, hi, p.gamma, quadrature::SingularSide::Lower, cfg);
  return r.value / specfun::gamma(p.gamma);
}

double ib_power(double nu, double alpha, double m) {
  if (!(m + 2.0 * alpha + nu < 1.0))
    throw ValidityViolation("ib_power: need m + 2 alpha + nu < 1");
  const double c = specfun::gamma_ratio(
      {-alpha - 0.5 * m, -0.5 * (nu - 1.0) - alpha - 0.5 * m},
      {0.5 * (1.0 - nu - m), -0.5 * m});
  return std::pow(2.0, -2.0 * alpha) * c;
}

complex ib_mellin_multiplier(double nu, double alpha, complex s) {
  const complex h = 0.5 * s;
  const double b = 0.5 * (nu - 1.0);
  specfun::GammaRatioSpec spec;
  spec.numerator_args = {h, h - b};
  spec.denominator_args = {alpha + h - b, alpha + h};
  return std::pow(2.0, -2.0 * alpha) * specfun::gamma_ratio(spec);
}

complex db_mellin_multiplier(double nu, double alpha, complex s) {
  const complex h = 0.5 * s;
  const double b = 0.5 * (nu - 1.0);
  specfun::GammaRatioSpec spec;
  spec.numerator_args = {h, h - b};
  spec.denominator_args = {h - alpha - b, h - alpha};
  return std::pow(2.0, 2.0 * alpha) * specfun::gamma_ratio(spec);
}

VerificationReport ib_via_saigo_check(double nu, double alpha,
                                      const FunctionHandle& f,
                                      const std::vector<double>& grid,
                                      double tol) {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-10;
  cfg.abs_tol = 1e-12;
  VerificationReport rep;
  rep.check_name =
      "ib_via_saigo_nu" + std::to_string(nu) + "_a" + std::to_string(alpha);
  rep.grid = grid;
  rep.tolerance = tol;
  if (!f.support().compact)
    throw BadSupport("ib_via_saigo_check: operand must be compactly supported");
  // g(t) = t^((nu-1)/2) f(sqrt(t)) on [lo^2, hi^2]
  const double glo = f.support().lo * f.support().lo;
  const double ghi = f.support().hi * f.support().hi;
  auto g = funcmodel::make_callable(
      [f, nu](double t) {
        return std::pow(t, 0.5 * (nu - 1.0)) * f.eval(std::sqrt(t));
      },
      funcmodel::Support::interval(glo, ghi), 0);
  SaigoParams p;
  p.gamma = 2.0 * alpha;
  p.beta = 0.5 * (nu - 1.0) - alpha;
  p.eta = -alpha;
  for (double x : grid) {
    const double lhs = ib(nu, alpha, f, x, cfg);
    const double rhs =
        std::pow(2.0, -2.0 * alpha) * saigo(p, g, x * x, cfg);
    report::accumulate_error(rep, lhs, rhs);
  }
  report::finalize(rep);
  return rep;
}

VerificationReport ib_semigroup_check(double nu, double alpha, double beta,
                                      const FunctionHandle& f,
                                      const std::vector<double>& grid,
                                      double tol) {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-9;
  cfg.abs_tol = 1e-11;
  VerificationReport rep;
  rep.check_name = "ib_semigroup_nu" + std::to_string(nu) + "_a" +
                   std::to_string(alpha) + "_b" + std::to_string(beta);
  rep.grid = grid;
  rep.tolerance = tol;
  auto inner = ib_image_handle(nu, beta, f, cfg);
  for (double x : grid) {
    const double lhs = ib(nu, alpha, inner, x, cfg);
    const double rhs = ib(nu, alpha + beta, f, x, cfg);
    report::accumulate_error(rep, lhs, rhs);
  }
  report::finalize(rep);
  return rep;
}

VerificationReport ib_inversion_check(double nu, const FunctionHandle& f,
                                      const std::vector<double>& grid,
                                      double tol) {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-10;
  cfg.abs_tol = 1e-12;
  VerificationReport rep;
  rep.check_name = "ib_inversion_nu" + std::to_string(nu);
  rep.grid = grid;
  rep.tolerance = tol;
  auto bimage = funcmodel::make_callable(
      [f, nu](double y) { return bessel_apply(nu, f, y); }, f.support(), 0);
  for (double x : grid) {
    const double got = ib(nu, 1.0, bimage, x, cfg);
    report::accumulate_error(rep, got, f.eval(x));
  }
  report::finalize(rep);
  return rep;
}

}  // namespace fracops::bessel
