#include "fracops/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

namespace fracops::quadrature {

namespace {

// (G7,K15) nodes and weights on [-1,1], QUADPACK values.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo, hi, value, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gk15(const Integrand& f, double lo, double hi) {
  const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
  double fv[15];
  for (int j = 0; j < 7; ++j) {
    fv[j] = f(c - h * kXgk[j]);
    fv[14 - j] = f(c + h * kXgk[j]);
  }
  fv[7] = f(c);
  double resk = kWgk[7] * fv[7];
  double resg = kWg[3] * fv[7];
  for (int j = 0; j < 7; ++j) {
    resk += kWgk[j] * (fv[j] + fv[14 - j]);
    if (j % 2 == 1) resg += kWg[j / 2] * (fv[j] + fv[14 - j]);
  }
  for (int j = 0; j < 15; ++j) {
    if (!std::isfinite(fv[j]))
      throw NonFinite("integrate: integrand not finite at interior node");
  }
  Panel p;
  p.lo = lo;
  p.hi = hi;
  p.value = resk * h;
  // QUADPACK-style sharpened estimate of |K15 - G7|.
  double resabs = 0.0, resasc = 0.0;
  const double mean = resk * 0.5;
  resabs += kWgk[7] * std::abs(fv[7]);
  resasc += kWgk[7] * std::abs(fv[7] - mean);
  for (int j = 0; j < 7; ++j) {
    resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
    resasc += kWgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));
  }
  resabs *= std::abs(h);
  resasc *= std::abs(h);
  double err = std::abs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps_floor = 50.0 * 2.2204460492503131e-16 * resabs;
  p.error = std::max(err, eps_floor);
  return p;
}

IntegralResult integrate_plain(const Integrand& f, double lo, double hi,
                               const QuadratureConfig& cfg) {
  if (hi == lo) return {0.0, 0.0};
  std::priority_queue<Panel> heap;
  Panel root = gk15(f, lo, hi);
  double total = root.value, toterr = root.error;
  heap.push(root);
  int used = 1;
  while (toterr > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
    if (used >= cfg.max_subdivisions)
      throw NoConvergence("integrate: subdivision limit reached");
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (mid <= worst.lo || mid >= worst.hi)
      throw NoConvergence("integrate: interval collapsed below machine precision");
    Panel a = gk15(f, worst.lo, mid);
    Panel b = gk15(f, mid, worst.hi);
    total += a.value + b.value - worst.value;
    toterr += a.error + b.error - worst.error;
    heap.push(a);
    heap.push(b);
    ++used;
  }
  return {total, toterr};
}

// Removes a left-edge algebraic singularity (t-lo)^e by t = lo + u^p,
// p = 1/(1+e); the transformed integrand is bounded near u=0.
IntegralResult integrate_left_algebraic(const Integrand& f, double lo, double hi,
                                        double e, const QuadratureConfig& cfg) {
  const double p = 1.0 / (1.0 + e);
  const double ulim = std::pow(hi - lo, 1.0 + e);
  auto g = [&](double u) { return f(lo + std::pow(u, p)) * p * std::pow(u, p - 1.0); };
  return integrate_plain(g, 0.0, ulim, cfg);
}

IntegralResult integrate_right_algebraic(const Integrand& f, double lo, double hi,
                                         double e, const QuadratureConfig& cfg) {
  const double p = 1.0 / (1.0 + e);
  const double ulim = std::pow(hi - lo, 1.0 + e);
  auto g = [&](double u) { return f(hi - std::pow(u, p)) * p * std::pow(u, p - 1.0); };
  return integrate_plain(g, 0.0, ulim, cfg);
}

}  // namespace

IntegralResult integrate(const Integrand& f, double lo, double hi,
                         const QuadratureConfig& cfg) {
  if (!(lo <= hi)) throw DomainError("integrate: lo must not exceed hi");
  if (lo == hi) return {0.0, 0.0};
  if (cfg.rel_tol <= 0.0 || cfg.abs_tol <= 0.0)
    throw ConfigError("integrate: tolerances must be positive");
  using Kind = SingularityPolicy::Kind;
  switch (cfg.policy.kind) {
    case Kind::None:
      return integrate_plain(f, lo, hi, cfg);
    case Kind::LeftAlgebraic:
      if (cfg.policy.left_exponent <= -1.0)
        throw ConfigError("integrate: non-integrable left exponent");
      return integrate_left_algebraic(f, lo, hi, cfg.policy.left_exponent, cfg);
    case Kind::RightAlgebraic:
      if (cfg.policy.right_exponent <= -1.0)
        throw ConfigError("integrate: non-integrable right exponent");
      return integrate_right_algebraic(f, lo, hi, cfg.policy.right_exponent, cfg);
    case Kind::BothAlgebraic: {
      if (cfg.policy.left_exponent <= -1.0 || cfg.policy.right_exponent <= -1.0)
        throw ConfigError("integrate: non-integrable exponent");
      const double mid = 0.5 * (lo + hi);
      QuadratureConfig half = cfg;
      half.abs_tol = 0.5 * cfg.abs_tol;
      IntegralResult a = integrate_left_algebraic(f, lo, mid, cfg.policy.left_exponent, half);
      IntegralResult b = integrate_right_algebraic(f, mid, hi, cfg.policy.right_exponent, half);
      return {a.value + b.value, a.error_estimate + b.error_estimate};
    }
  }
  throw ConfigError("integrate: unknown singularity policy");
}

IntegralResult integrate_singular_edge(const Integrand& f, double x,
                                       double other_limit, double alpha,
                                       SingularSide side,
                                       const QuadratureConfig& cfg) {
  if (alpha <= 0.0) throw ConfigError("integrate_singular_edge: alpha must be > 0");
  const double inv = 1.0 / alpha;
  if (side == SingularSide::Lower) {
    if (other_limit <= x)
      throw DomainError("integrate_singular_edge: upper limit must exceed x");
    // u = (t-x)^alpha
    const double ulim = std::pow(other_limit - x, alpha);
    auto g = [&](double u) { return f(x + std::pow(u, inv)); };
    IntegralResult r = integrate_plain(g, 0.0, ulim, cfg);
    return {r.value * inv, r.error_estimate * inv};
  }
  if (other_limit >= x)
    throw DomainError("integrate_singular_edge: lower limit must be below x");
  const double ulim = std::pow(x - other_limit, alpha);
  auto g = [&](double u) { return f(x - std::pow(u, inv)); };
  IntegralResult r = integrate_plain(g, 0.0, ulim, cfg);
  return {r.value * inv, r.error_estimate * inv};
}

}  // namespace fracops::quadrature
