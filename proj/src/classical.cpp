#include "fracops/classical.hpp"

#include <cmath>

#include "fracops/specfun.hpp"

namespace fracops::classical {

using quadrature::integrate;
using quadrature::integrate_singular_edge;
using quadrature::SingularSide;

namespace {

double recip_gamma(double x) {
  if (specfun::is_nonpositive_integer(x)) return 0.0;
  return 1.0 / specfun::gamma(x);
}

int caputo_order(double alpha) { return int(std::floor(alpha)) + 1; }

// k-th derivative of f rewrapped as a handle.
FunctionHandle derivative_handle(const FunctionHandle& f, int k) {
  if (k == 0) return f;
  auto eval = [f, k](double t) { return f.derivative(k, t); };
  auto deriv = [f, k](int j, double t) { return f.derivative(k + j, t); };
  return funcmodel::make_callable(eval, f.support(),
                                  std::max(0, f.smoothness() - k), deriv,
                                  std::max(0, f.smoothness() - k));
}

}  // namespace

double rl_integral_left(const FunctionHandle& f, double a, double alpha,
                        double x, const QuadratureConfig& cfg) {
  if (!(alpha > 0.0)) throw ConfigError("rl_integral_left: alpha must be > 0");
  if (!(x > a)) throw DomainError("rl_integral_left: need x > a");
  auto r = integrate_singular_edge([&](double t) { return f.eval(t); }, x, a,
                                   alpha, SingularSide::Upper, cfg);
  return r.value / specfun::gamma(alpha);
}

double rl_integral_right(const FunctionHandle& f, double b, double alpha,
                         double x, const QuadratureConfig& cfg) {
  if (!(alpha > 0.0)) throw ConfigError("rl_integral_right: alpha must be > 0");
  if (!(x < b)) throw DomainError("rl_integral_right: need x < b");
  auto r = integrate_singular_edge([&](double t) { return f.eval(t); }, x, b,
                                   alpha, SingularSide::Lower, cfg);
  return r.value / specfun::gamma(alpha);
}

double rl_derivative_left(const FunctionHandle& f, double a, double alpha,
                          double x, const QuadratureConfig& cfg) {
  if (!(alpha > 0.0)) throw ConfigError("rl_derivative_left: alpha must be > 0");
  if (!(x > a)) throw DomainError("rl_derivative_left: need x > a");
  const int n = caputo_order(alpha);
  if (f.smoothness() < n)
    throw InsufficientSmoothness("rl_derivative_left: operand needs " +
                                 std::to_string(n) + " derivatives");
  double boundary = 0.0;
  for (int k = 0; k < n; ++k) {
    const double c = recip_gamma(k - alpha + 1.0);
    if (c != 0.0)
      boundary += f.derivative(k, a) * std::pow(x - a, k - alpha) * c;
  }
  auto r = integrate_singular_edge([&](double t) { return f.derivative(n, t); },
                                   x, a, double(n) - alpha, SingularSide::Upper,
                                   cfg);
  return boundary + r.value / specfun::gamma(double(n) - alpha);
}

double rl_derivative_right(const FunctionHandle& f, double b, double alpha,
                           double x, const QuadratureConfig& cfg) {
  if (!(alpha > 0.0)) throw ConfigError("rl_derivative_right: alpha must be > 0");
  if (!(x < b)) throw DomainError("rl_derivative_right: need x < b");
  const int n = caputo_order(alpha);
  if (f.smoothness() < n)
    throw InsufficientSmoothness("rl_derivative_right: operand needs " +
                                 std::to_string(n) + " derivatives");
  double boundary = 0.0;
  for (int k = 0; k < n; ++k) {
    const double c = recip_gamma(k - alpha + 1.0);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    if (c != 0.0)
      boundary += sign * f.derivative(k, b) * std::pow(b - x, k - alpha) * c;
  }
  auto r = integrate_singular_edge([&](double t) { return f.derivative(n, t); },
                                   x, b, double(n) - alpha, SingularSide::Lower,
                                   cfg);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return boundary + sign * r.value / specfun::gamma(double(n) - alpha);
}

double liouville_left(const FunctionHandle& f, double alpha, double x,
                      const QuadratureConfig& cfg) {
  return rl_integral_left(f, 0.0, alpha, x, cfg);
}

double liouville_right(const FunctionHandle& f, double alpha, double x,
                       const QuadratureConfig& cfg) {
  const double b = f.upper_truncation(x, cfg.abs_tol);
  if (b <= x) return 0.0;
  return rl_integral_right(f, b, alpha, x, cfg);
}

namespace {

// Plain integral-branch EK left operator, alpha > 0, in the w = t^2
// coordinate.
double ek_left_integral(const FunctionHandle& f, double alpha, double y,
                        double x, const QuadratureConfig& cfg) {
  const double w_hi = x * x;
  double w_lo = 0.0;
  if (f.support().compact)
    w_lo = std::min(w_hi, f.support().lo * f.support().lo);
  if (w_lo >= w_hi) return 0.0;
  auto integrand = [&](double w) { return std::pow(w, y) * f.eval(std::sqrt(w)); };
  auto r = integrate_singular_edge(integrand, w_hi, w_lo, alpha,
                                   SingularSide::Upper, cfg);
  return std::pow(x, -2.0 * (alpha + y)) * r.value / specfun::gamma(alpha);
}

double richardson_d1(const std::function<double(double)>& g, double w) {
  const double h = 1e-3 * std::max(1.0, std::abs(w));
  const double d1 = (g(w + h) - g(w - h)) / (2.0 * h);
  const double d2 = (g(w + 0.5 * h) - g(w - 0.5 * h)) / h;
  return (4.0 * d2 - d1) / 3.0;
}

}  // namespace

double erdelyi_kober_left(const FunctionHandle& f, double alpha, double y,
                          double x, const QuadratureConfig& cfg, int n) {
  if (!(x > 0.0)) throw DomainError("erdelyi_kober_left: need x > 0");
  if (alpha > 0.0) return ek_left_integral(f, alpha, y, x, cfg);
  if (!(alpha + n > 0.0))
    throw ConfigError("erdelyi_kober_left: continued branch needs alpha > -n");
  // x^(-2(alpha+y)) (d/dx^2)^n [ x^(2(alpha+y+n)) I^(alpha+n) ]
  const double beta = alpha + y + double(n);
  std::function<double(double)> g = [&, alpha, y](double w) {
    return std::pow(w, beta) * ek_left_integral(f, alpha + n, y, std::sqrt(w), cfg);
  };
  std::function<double(double)> cur = g;
  for (int j = 1; j < n; ++j) {
    auto prev = cur;
    cur = [prev](double w) { return richardson_d1(prev, w); };
  }
  const double dn = richardson_d1(cur, x * x);
  return std::pow(x, -2.0 * (alpha + y)) * dn;
}

double erdelyi_kober_right(const FunctionHandle& f, double alpha, double y,
                           double x, const QuadratureConfig& cfg) {
  if (!(x > 0.0)) throw DomainError("erdelyi_kober_right: need x > 0");
  if (!(alpha > 0.0)) throw ConfigError("erdelyi_kober_right: alpha must be > 0");
  const double upper = f.upper_truncation(x, cfg.abs_tol);
  if (upper <= x) return 0.0;
  const double w_lo = x * x, w_hi = upper * upper;
  auto integrand = [&](double w) {
    return std::pow(w, -alpha - y) * f.eval(std::sqrt(w));
  };
  auto r = integrate_singular_edge(integrand, w_lo, w_hi, alpha,
                                   SingularSide::Lower, cfg);
  return std::pow(x, 2.0 * y) * r.value / specfun::gamma(alpha);
}

namespace {

// Inverts a strictly increasing weight on [lo, hi] by safeguarded Newton.
double invert_weight(const FunctionHandle& g, double w, double lo, double hi) {
  const double glo = g.eval(lo), ghi = g.eval(hi);
  double t = lo + (hi - lo) * (w - glo) / (ghi - glo);
  double bl = lo, bh = hi;
  for (int it = 0; it < 80; ++it) {
    const double val = g.eval(t);
    if (val == w) return t;
    if (val < w) bl = std::max(bl, t);
    else bh = std::min(bh, t);
    const double gp = g.derivative(1, t);
    double next = t - (val - w) / gp;
    if (!(next > bl && next < bh)) next = 0.5 * (bl + bh);
    if (std::abs(next - t) <= 1e-16 * std::max(1.0, std::abs(t))) return next;
    t = next;
  }
  return t;
}

}  // namespace

double frac_by_function_left(const FunctionHandle& f, const FunctionHandle& g,
                             double alpha, double x, double lo,
                             const QuadratureConfig& cfg) {
  if (!(alpha > 0.0)) throw ConfigError("frac_by_function_left: alpha must be > 0");
  if (!(x > lo)) throw DomainError("frac_by_function_left: need x > lo");
  for (int i = 0; i <= 16; ++i) {
    const double t = lo + (x - lo) * i / 16.0;
    if (!(g.derivative(1, t) > 0.0))
      throw NonMonotoneWeight("frac_by_function_left: weight derivative not positive");
  }
  const double gx = g.eval(x), glo = g.eval(lo);
  auto integrand = [&](double w) { return f.eval(invert_weight(g, w, lo, x)); };
  auto r = integrate_singular_edge(integrand, gx, glo, alpha,
                                   SingularSide::Upper, cfg);
  return r.value / specfun::gamma(alpha);
}

FunctionHandle identity_weight() {
  return funcmodel::make_callable([](double t) { return t; },
                                  funcmodel::Support::half_axis(), 1000,
                                  [](int k, double) { return k == 1 ? 1.0 : 0.0; },
                                  1000);
}

FunctionHandle square_weight() {
  return funcmodel::make_callable(
      [](double t) { return t * t; }, funcmodel::Support::half_axis(), 1000,
      [](int k, double t) {
        if (k == 1) return 2.0 * t;
        if (k == 2) return 2.0;
        return 0.0;
      },
      1000);
}

FunctionHandle log_weight() {
  return funcmodel::make_callable(
      [](double t) { return std::log(t); }, funcmodel::Support::half_axis(),
      1000,
      [](int k, double t) {
        double c = 1.0;
        for (int j = 1; j < k; ++j) c *= -double(j);
        return c * std::pow(t, -k);
      },
      1000);
}

double hadamard_left(const FunctionHandle& f, double alpha, double x,
                     double lo, const QuadratureConfig& cfg) {
  return frac_by_function_left(f, log_weight(), alpha, x, lo, cfg);
}

double gerasimov_derivative(const FunctionHandle& f, double alpha, double x,
                            const QuadratureConfig& cfg) {
  return gerasimov_caputo(f, alpha, x, 1, cfg);
}

double gerasimov_caputo(const FunctionHandle& f, double alpha, double x,
                        int n, const QuadratureConfig& cfg) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw ConfigError("gerasimov_caputo: alpha must lie in (0,1)");
  if (f.smoothness() < n)
    throw InsufficientSmoothness("gerasimov_caputo: operand needs " +
                                 std::to_string(n) + " derivatives");
  const double b = f.upper_truncation(x, cfg.abs_tol);
  if (b <= x) return 0.0;
  auto r = integrate_singular_edge([&](double t) { return f.derivative(n, t); },
                                   x, b, alpha, SingularSide::Lower, cfg);
  // right-sided: each derivative moved inside the integral carries a sign
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * r.value / specfun::gamma(alpha);
}

double distributed_apply(const DistributedSpec& spec,
                         const QuadratureConfig& cfg) {
  if (!(spec.a < spec.b)) throw ConfigError("distributed_apply: need a < b");
  QuadratureConfig outer = cfg;
  outer.rel_tol *= 10.0;
  auto r = integrate(spec.inner_at_order, spec.a, spec.b, outer);
  return spec.averaged ? r.value / (spec.b - spec.a) : r.value;
}

DNSignature::DNSignature(std::vector<double> g) : gammas(std::move(g)) {
  sigma = 0.0;
  for (double v : gammas) sigma += v;
}

FunctionHandle rl_integral_left_handle(const FunctionHandle& f, double a,
                                       double alpha,
                                       const QuadratureConfig& cfg) {
  auto eval = [f, a, alpha, cfg](double x) {
    if (x <= a) return 0.0;
    return rl_integral_left(f, a, alpha, x, cfg);
  };
  // d^k I^a f = I^a f^(k) + sum_j f^(k-j)(a) (x-a)^(a-j) / Gamma(a-j+1)
  auto deriv = [f, a, alpha, cfg](int k, double x) {
    if (x <= a) return 0.0;
    double v = rl_integral_left(derivative_handle(f, k), a, alpha, x, cfg);
    for (int j = 1; j <= k; ++j) {
      const double c = recip_gamma(alpha - j + 1.0);
      if (c != 0.0)
        v += f.derivative(k - j, a) * std::pow(x - a, alpha - j) * c;
    }
    return v;
  };
  return funcmodel::make_callable(eval, funcmodel::Support::half_axis(),
                                  f.smoothness(), deriv, f.smoothness());
}

FunctionHandle rl_derivative_left_handle(const FunctionHandle& f, double a,
                                         double alpha,
                                         const QuadratureConfig& cfg) {
  auto eval = [f, a, alpha, cfg](double x) {
    if (x <= a) return 0.0;
    return rl_derivative_left(f, a, alpha, x, cfg);
  };
  auto deriv = [f, a, alpha, cfg](int k, double x) {
    if (x <= a) return 0.0;
    double v = rl_derivative_left(derivative_handle(f, k), a, alpha, x, cfg);
    for (int j = 1; j <= k; ++j) {
      const double c = recip_gamma(1.0 - alpha - j);
      if (c != 0.0)
        v += f.derivative(k - j, a) * std::pow(x - a, -alpha - j) * c;
    }
    return v;
  };
  const int smooth = std::max(0, f.smoothness() - caputo_order(alpha));
  return funcmodel::make_callable(eval, funcmodel::Support::half_axis(), smooth,
                                  deriv, smooth);
}

double dn_apply(const DNSignature& sig, const FunctionHandle& f, double x,
                double origin, const QuadratureConfig& cfg) {
  FunctionHandle cur = f;
  for (auto it = sig.gammas.rbegin(); it != sig.gammas.rend(); ++it) {
    const double g = *it;
    if (g == 0.0) continue;
    if (g < 0.0)
      cur = rl_integral_left_handle(cur, origin, -g, cfg);
    else
      cur = rl_derivative_left_handle(cur, origin, g, cfg);
  }
  return cur.eval(x);
}

}  // namespace fracops::classical
