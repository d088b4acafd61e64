#ifndef FRACOPS_CLASSICAL_HPP
#define FRACOPS_CLASSICAL_HPP

#include <functional>
#include <vector>

#include "fracops/funcmodel.hpp"
#include "fracops/quadrature.hpp"

namespace fracops::classical {

using funcmodel::FunctionHandle;
using quadrature::QuadratureConfig;

/// (I^alpha_{a+} f)(x) = (1/Gamma(alpha)) int_a^x (x-t)^(alpha-1) f(t) dt
double rl_integral_left(const FunctionHandle& f, double a, double alpha,
                        double x, const QuadratureConfig& cfg = {});

/// (I^alpha_{b-} f)(x) = (1/Gamma(alpha)) int_x^b (t-x)^(alpha-1) f(t) dt
double rl_integral_right(const FunctionHandle& f, double b, double alpha,
                         double x, const QuadratureConfig& cfg = {});

/// Riemann-Liouville derivatives of order alpha with n = floor(alpha)+1,
/// evaluated through the Caputo form plus explicit boundary terms.
double rl_derivative_left(const FunctionHandle& f, double a, double alpha,
                          double x, const QuadratureConfig& cfg = {});
double rl_derivative_right(const FunctionHandle& f, double b, double alpha,
                           double x, const QuadratureConfig& cfg = {});

/// Half-axis (Liouville) versions; the right operator truncates at the
/// operand's support or tail bound.
double liouville_left(const FunctionHandle& f, double alpha, double x,
                      const QuadratureConfig& cfg = {});
double liouville_right(const FunctionHandle& f, double alpha, double x,
                       const QuadratureConfig& cfg = {});

/// Erdelyi-Kober operators.  For alpha > 0 the integral forms
///   left  = (2/Gamma(a)) x^(-2(a+y)) int_0^x (x^2-t^2)^(a-1) t^(2y+1) f dt
///   right = (2/Gamma(a)) x^(2y) int_x^inf (t^2-x^2)^(a-1) t^(2(1-a-y)-1) f dt
/// For -n < alpha <= 0 the continued branch differentiates n times in
/// the x^2 variable.
double erdelyi_kober_left(const FunctionHandle& f, double alpha, double y,
                          double x, const QuadratureConfig& cfg = {}, int n = 1);
double erdelyi_kober_right(const FunctionHandle& f, double alpha, double y,
                           double x, const QuadratureConfig& cfg = {});

/// Fractional integral by a strictly increasing weight g:
///   (1/Gamma(alpha)) int_lo^x (g(x)-g(t))^(alpha-1) g'(t) f(t) dt
/// Evaluated in the w = g(t) coordinate, so g = id reproduces
/// rl_integral_left bit for bit.
double frac_by_function_left(const FunctionHandle& f, const FunctionHandle& g,
                             double alpha, double x, double lo,
                             const QuadratureConfig& cfg = {});

/// Hadamard operator: frac_by_function with g = ln.
double hadamard_left(const FunctionHandle& f, double alpha, double x,
                     double lo, const QuadratureConfig& cfg = {});

/// Weight handles for frac_by_function.
FunctionHandle identity_weight();
FunctionHandle square_weight();
FunctionHandle log_weight();

/// (1/Gamma(alpha)) int_x^inf (t-x)^(alpha-1) f'(t) dt, 0 < alpha < 1
double gerasimov_derivative(const FunctionHandle& f, double alpha, double x,
                            const QuadratureConfig& cfg = {});

/// Same kernel with f^(n); the (t-x)^(alpha-1) exponent is kept for all
/// n as displayed in the source definition.
double gerasimov_caputo(const FunctionHandle& f, double alpha, double x,
                        int n, const QuadratureConfig& cfg = {});

struct DistributedSpec {
  /// order t -> value of the inner operator applied to f at x
  std::function<double(double)> inner_at_order;
  double a = 0.0;
  double b = 1.0;
  bool averaged = false;
};

double distributed_apply(const DistributedSpec& spec,
                         const QuadratureConfig& cfg = {});

struct DNSignature {
  std::vector<double> gammas;
  double sigma = 0.0;

  explicit DNSignature(std::vector<double> g);
};

/// Dzhrbashyan-Nersesyan composition D^(g0) D^(g1) ... D^(gm) f with
/// gamma > 0 a derivative, gamma < 0 an integral of order -gamma and
/// gamma = 0 the identity; applied right to left from the given origin.
double dn_apply(const DNSignature& sig, const FunctionHandle& f, double x,
                double origin, const QuadratureConfig& cfg = {});

/// Operator images wrapped as handles with analytic derivative
/// propagation, for composing operators without grid tabulation.
FunctionHandle rl_integral_left_handle(const FunctionHandle& f, double a,
                                       double alpha,
                                       const QuadratureConfig& cfg = {});
FunctionHandle rl_derivative_left_handle(const FunctionHandle& f, double a,
                                         double alpha,
                                         const QuadratureConfig& cfg = {});

}  // namespace fracops::classical

#endif  // FRACOPS_CLASSICAL_HPP
