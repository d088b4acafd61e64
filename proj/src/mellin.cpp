#include "fracops/mellin.hpp"

#include <algorithm>
#include <cmath>

namespace fracops::mellin {

using quadrature::integrate;

complex mellin_numeric(const FunctionHandle& f, complex s,
                       const QuadratureConfig& cfg) {
  double lo = 1e-12, hi = 0.0;
  if (f.support().compact) {
    lo = f.support().lo;
    hi = f.support().hi;
  } else {
    hi = f.upper_truncation(0.0, cfg.abs_tol);
  }
  auto weighted = [&](double x, bool imag_part) {
    const double lx = std::log(x);
    const double mag = std::exp((s.real() - 1.0) * lx);
    const double phase = s.imag() * lx;
    return mag * (imag_part ? std::sin(phase) : std::cos(phase)) * f.eval(x);
  };
  const double re =
      integrate([&](double x) { return weighted(x, false); }, lo, hi, cfg).value;
  double im = 0.0;
  if (s.imag() != 0.0)
    im = integrate([&](double x) { return weighted(x, true); }, lo, hi, cfg).value;
  return {re, im};
}

std::vector<double> default_t_grid() {
  std::vector<double> grid;
  const int half = 256;
  const double lo = 1e-3, hi = 1e3;
  for (int i = 0; i < half; ++i) {
    const double t = lo * std::pow(hi / lo, double(i) / double(half - 1));
    grid.push_back(t);
    grid.push_back(-t);
  }
  std::sort(grid.begin(), grid.end());
  return grid;
}

namespace {

double abs_at(const LineMultiplier& m, double t, int* violations) {
  bool strip = true;
  const complex v = m(t, &strip);
  if (!strip && violations) ++*violations;
  return std::abs(v);
}

// Refines geometrically from t0 in the direction given by factor
// (either toward 0 or toward infinity) while |m| keeps increasing.
bool refine_direction(const LineMultiplier& m, double t0, double factor,
                      double threshold, double* sup, int* violations) {
  double t = t0, prev = abs_at(m, t, violations);
  for (int i = 0; i < 60; ++i) {
    t *= factor;
    if (t == 0.0 || !std::isfinite(t)) break;
    double cur;
    try {
      cur = abs_at(m, t, violations);
    } catch (const NumericsError&) {
      // a pole this close to the line means divergence
      return true;
    }
    if (!std::isfinite(cur) || cur > threshold) return true;
    *sup = std::max(*sup, cur);
    if (cur <= prev) return false;
    prev = cur;
  }
  return false;
}

}  // namespace

NormEstimate plancherel_norm(const LineMultiplier& m,
                             const std::vector<double>& t_grid,
                             double divergence_threshold) {
  if (t_grid.empty()) throw ConfigError("plancherel_norm: empty grid");
  std::vector<double> grid = t_grid;
  std::sort(grid.begin(), grid.end());
  NormEstimate est;
  std::vector<double> vals(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) {
    vals[i] = abs_at(m, grid[i], &est.strip_violations);
    if (!std::isfinite(vals[i]) || vals[i] > divergence_threshold) {
      est.unbounded = true;
      return est;
    }
    est.value = std::max(est.value, vals[i]);
  }
  // The sup may hide past either grid end or inside the gap around t=0;
  // follow any rising trend geometrically.
  const size_t n = grid.size();
  size_t p = 0;  // first strictly positive entry
  while (p < n && grid[p] <= 0.0) ++p;
  auto refine = [&](double t0, double factor) {
    if (refine_direction(m, t0, factor, divergence_threshold, &est.value,
                         &est.strip_violations))
      est.unbounded = true;
  };
  // inner ends (toward t = 0)
  if (p >= 2 && vals[p - 2] < vals[p - 1]) refine(grid[p - 1], 0.5);
  if (!est.unbounded && p + 1 < n && vals[p + 1] < vals[p])
    refine(grid[p], 0.5);
  // outer ends
  if (!est.unbounded && p >= 2 && vals[1] < vals[0]) refine(grid[0], 2.0);
  if (!est.unbounded && p + 1 < n && vals[n - 2] < vals[n - 1])
    refine(grid[n - 1], 2.0);
  return est;
}

}  // namespace fracops::mellin
