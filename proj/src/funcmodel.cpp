#include "fracops/funcmodel.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace fracops::funcmodel {

struct FunctionHandle::Impl {
  Eval eval;
  Deriv deriv;
  int closed_form_order = 0;
  Support support;
  int smoothness = 0;
  TailBound tail;
};

namespace {

double raw_eval(const FunctionHandle::Impl& impl, double x) {
  if (impl.support.compact && (x < impl.support.lo || x > impl.support.hi))
    return 0.0;
  return impl.eval(x);
}

double raw_derivative(const FunctionHandle::Impl& impl, int k, double x);

// Richardson-extrapolated central difference of the (k-1)-th derivative.
double fd_derivative(const FunctionHandle::Impl& impl, int k, double x) {
  const double h = 1e-4 * std::max(1.0, std::abs(x));
  auto lower = [&](double t) { return raw_derivative(impl, k - 1, t); };
  const double d1 = (lower(x + h) - lower(x - h)) / (2.0 * h);
  const double d2 = (lower(x + 0.5 * h) - lower(x - 0.5 * h)) / h;
  return (4.0 * d2 - d1) / 3.0;
}

double raw_derivative(const FunctionHandle::Impl& impl, int k, double x) {
  if (k == 0) return raw_eval(impl, x);
  if (impl.support.compact && (x < impl.support.lo || x > impl.support.hi))
    return 0.0;
  if (k <= impl.closed_form_order && impl.deriv) return impl.deriv(k, x);
  return fd_derivative(impl, k, x);
}

}  // namespace

FunctionHandle::FunctionHandle(Eval eval, Deriv deriv, int closed_form_order,
                               Support support, int smoothness) {
  auto impl = std::make_shared<Impl>();
  impl->eval = std::move(eval);
  impl->deriv = std::move(deriv);
  impl->closed_form_order = closed_form_order;
  impl->support = support;
  impl->smoothness = smoothness;
  impl_ = std::move(impl);
}

double FunctionHandle::eval(double x) const {
  if (!impl_) throw ConfigError("FunctionHandle: empty handle");
  return raw_eval(*impl_, x);
}

double FunctionHandle::derivative(int k, double x) const {
  if (!impl_) throw ConfigError("FunctionHandle: empty handle");
  if (k < 0) throw ConfigError("FunctionHandle: negative derivative order");
  if (k > impl_->smoothness)
    throw InsufficientSmoothness("FunctionHandle: derivative order " +
                                 std::to_string(k) + " exceeds declared smoothness " +
                                 std::to_string(impl_->smoothness));
  return raw_derivative(*impl_, k, x);
}

const Support& FunctionHandle::support() const {
  if (!impl_) throw ConfigError("FunctionHandle: empty handle");
  return impl_->support;
}

int FunctionHandle::smoothness() const {
  if (!impl_) throw ConfigError("FunctionHandle: empty handle");
  return impl_->smoothness;
}

double FunctionHandle::upper_truncation(double x, double abs_tol) const {
  if (!impl_) throw ConfigError("FunctionHandle: empty handle");
  if (impl_->support.compact) return std::max(x, impl_->support.hi);
  if (impl_->tail) return impl_->tail(x, abs_tol);
  throw BadSupport(
      "FunctionHandle: half-axis operand without a tail bound cannot be "
      "truncated");
}

FunctionHandle FunctionHandle::with_tail_bound(TailBound tb) const {
  if (!impl_) throw ConfigError("FunctionHandle: empty handle");
  FunctionHandle copy;
  auto impl = std::make_shared<Impl>(*impl_);
  impl->tail = std::move(tb);
  copy.impl_ = std::move(impl);
  return copy;
}

FunctionHandle make_monomial(double m) {
  auto eval = [m](double x) { return std::pow(x, m); };
  auto deriv = [m](int k, double x) {
    double coef = 1.0;
    for (int j = 0; j < k; ++j) coef *= (m - j);
    return coef * std::pow(x, m - k);
  };
  return FunctionHandle(eval, deriv, 1000, Support::half_axis(), 1000);
}

namespace {

// Derivatives of the bump profile g(u) = exp(1 - 1/(1-u^2)) via the
// chain rule on phi = 1 - 1/(1-u^2), so g = e^phi.
void bump_phi_derivs(double u, double* phi1, double* phi2, double* phi3,
                     double* phi4) {
  const double d = 1.0 - u * u;
  const double i2 = 1.0 / (d * d);
  const double i3 = i2 / d;
  const double i4 = i3 / d;
  const double i5 = i4 / d;
  *phi1 = -2.0 * u * i2;
  *phi2 = -2.0 * i2 - 8.0 * u * u * i3;
  *phi3 = -24.0 * u * i3 - 48.0 * u * u * u * i4;
  *phi4 = -24.0 * i3 - 288.0 * u * u * i4 - 384.0 * u * u * u * u * i5;
}

}  // namespace

FunctionHandle make_bump(const BumpSpec& spec) {
  if (!(spec.center - spec.radius > 0.0))
    throw BadSupport("make_bump: support must stay inside (0, inf)");
  const double c = spec.center, r = spec.radius, amp = spec.amplitude;
  auto eval = [c, r, amp](double x) {
    const double u = (x - c) / r;
    if (std::abs(u) >= 1.0) return 0.0;
    return amp * std::exp(1.0 - 1.0 / (1.0 - u * u));
  };
  auto deriv = [c, r, amp](int k, double x) {
    const double u = (x - c) / r;
    if (std::abs(u) >= 1.0) return 0.0;
    const double g = amp * std::exp(1.0 - 1.0 / (1.0 - u * u));
    double p1, p2, p3, p4;
    bump_phi_derivs(u, &p1, &p2, &p3, &p4);
    double du = 0.0;
    switch (k) {
      case 1: du = g * p1; break;
      case 2: du = g * (p1 * p1 + p2); break;
      case 3: du = g * (p1 * p1 * p1 + 3.0 * p1 * p2 + p3); break;
      case 4:
        du = g * (p1 * p1 * p1 * p1 + 6.0 * p1 * p1 * p2 + 3.0 * p2 * p2 +
                  4.0 * p1 * p3 + p4);
        break;
      default: return 0.0;
    }
    return du / std::pow(r, k);
  };
  return FunctionHandle(eval, deriv, 4, Support::interval(c - r, c + r), 1000);
}

FunctionHandle make_exponential(double lambda) {
  if (!(lambda > 0.0)) throw ConfigError("make_exponential: lambda must be > 0");
  auto eval = [lambda](double x) { return std::exp(-lambda * x); };
  auto deriv = [lambda](int k, double x) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign * std::pow(lambda, k) * std::exp(-lambda * x);
  };
  FunctionHandle h(eval, deriv, 1000, Support::half_axis(), 1000);
  auto tail = [lambda](double x, double abs_tol) {
    return std::max(x, 0.0) + std::log(1.0 / abs_tol) / lambda;
  };
  return h.with_tail_bound(tail);
}

FunctionHandle make_callable(FunctionHandle::Eval eval, Support support,
                             int smoothness, FunctionHandle::Deriv deriv,
                             int closed_form_order) {
  return FunctionHandle(std::move(eval), std::move(deriv), closed_form_order,
                        support, smoothness);
}

namespace {

// C-infinity step: 1 for v <= 0, 0 for v >= 1.
double smooth_step_down(double v) {
  if (v <= 0.0) return 1.0;
  if (v >= 1.0) return 0.0;
  const double a = std::exp(-1.0 / v);
  const double b = std::exp(-1.0 / (1.0 - v));
  return b / (a + b);
}

}  // namespace

FunctionHandle truncate_smooth(const FunctionHandle& f, double r) {
  if (!(r > 0.0)) throw ConfigError("truncate_smooth: radius must be > 0");
  const FunctionHandle inner = f;
  auto eval = [inner, r](double x) {
    if (x >= 2.0 * r) return 0.0;
    return inner.eval(x) * smooth_step_down((x - r) / r);
  };
  const double lo = f.support().compact ? f.support().lo : 1e-12;
  return FunctionHandle(eval, nullptr, 0,
                        Support::interval(lo, 2.0 * r),
                        inner.smoothness());
}

namespace {

std::map<std::string, double> parse_kv(const std::string& body) {
  std::map<std::string, double> kv;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ConfigError("function spec: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    try {
      kv[key] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ConfigError("function spec: bad numeric value in '" + item + "'");
    }
  }
  return kv;
}

double require(const std::map<std::string, double>& kv, const std::string& key,
               const std::string& spec) {
  auto it = kv.find(key);
  if (it == kv.end())
    throw ConfigError("function spec '" + spec + "': missing parameter '" + key + "'");
  return it->second;
}

}  // namespace

FunctionHandle parse_function_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string body = (colon == std::string::npos) ? "" : spec.substr(colon + 1);
  const auto kv = parse_kv(body);
  if (name == "pow") return make_monomial(require(kv, "m", spec));
  if (name == "exp") return make_exponential(require(kv, "l", spec));
  if (name == "bump") {
    BumpSpec b;
    b.center = require(kv, "c", spec);
    b.radius = require(kv, "r", spec);
    if (auto it = kv.find("amp"); it != kv.end()) b.amplitude = it->second;
    return make_bump(b);
  }
  throw ConfigError("function spec: unknown family '" + name + "'");
}

}  // namespace fracops::funcmodel
