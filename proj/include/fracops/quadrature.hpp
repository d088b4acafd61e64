#ifndef FRACOPS_QUADRATURE_HPP
#define FRACOPS_QUADRATURE_HPP

#include <functional>

#include "fracops/errors.hpp"

namespace fracops::quadrature {

using Integrand = std::function<double(double)>;

/// Endpoint behavior of the integrand.  An algebraic policy with
/// exponent e declares that the integrand behaves like (t-edge)^e near
/// that edge; e must be > -1 for integrability.
struct SingularityPolicy {
  enum class Kind { None, LeftAlgebraic, RightAlgebraic, BothAlgebraic };
  Kind kind = Kind::None;
  double left_exponent = 0.0;
  double right_exponent = 0.0;

  static SingularityPolicy none() { return {}; }
  static SingularityPolicy left(double e) {
    return {Kind::LeftAlgebraic, e, 0.0};
  }
  static SingularityPolicy right(double e) {
    return {Kind::RightAlgebraic, 0.0, e};
  }
  static SingularityPolicy both(double l, double r) {
    return {Kind::BothAlgebraic, l, r};
  }
};

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 200;
  SingularityPolicy policy;
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Adaptive Gauss-Kronrod (G7,K15) integration of f over the finite
/// interval [lo, hi].  Endpoints are never sampled.  Algebraic endpoint
/// singularities declared in the config are removed by a power
/// substitution before subdivision.
IntegralResult integrate(const Integrand& f, double lo, double hi,
                         const QuadratureConfig& config = {});

enum class SingularSide { Lower, Upper };

/// Weakly singular power-kernel integrals.
///   Lower: int_x^upper (t-x)^(alpha-1) f(t) dt
///   Upper: int_lower^x (x-t)^(alpha-1) f(t) dt
/// The substitution u = |t-x|^alpha removes the edge singularity exactly.
IntegralResult integrate_singular_edge(const Integrand& f, double x,
                                       double other_limit, double alpha,
                                       SingularSide side,
                                       const QuadratureConfig& config = {});

}  // namespace fracops::quadrature

#endif  // FRACOPS_QUADRATURE_HPP
