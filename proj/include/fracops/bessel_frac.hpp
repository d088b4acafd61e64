#ifndef FRACOPS_BESSEL_FRAC_HPP
#define FRACOPS_BESSEL_FRAC_HPP

#include <complex>
#include <vector>

#include "fracops/funcmodel.hpp"
#include "fracops/quadrature.hpp"
#include "fracops/report.hpp"

namespace fracops::bessel {

using complex = std::complex<double>;
using funcmodel::FunctionHandle;
using quadrature::QuadratureConfig;
using report::VerificationReport;

/// B_nu f = f'' + (nu/x) f'
double bessel_apply(double nu, const FunctionHandle& f, double x);

/// Fractional Bessel integral on the half-axis:
/// (1/Gamma(2a)) int_x^inf ((y^2-x^2)/(2y))^(2a-1)
///   2F1(a+(nu-1)/2, a; 2a; 1-x^2/y^2) f(y) dy
double ib(double nu, double alpha, const FunctionHandle& f, double x,
          const QuadratureConfig& cfg = {});

/// Same operator through the Legendre-kernel form.
double ib_legendre_form(double nu, double alpha, const FunctionHandle& f,
                        double x, const QuadratureConfig& cfg = {});

/// Fractional Bessel derivative: B_nu^n applied to the ib(nu, n-alpha)
/// image, n = floor(alpha)+1, with the outer Bessel powers evaluated on
/// a finite-difference stencil.
double db(double nu, double alpha, const FunctionHandle& f, double x,
          const QuadratureConfig& cfg = {});

struct SaigoParams {
  double gamma = 1.0;
  double beta = 0.0;
  double eta = 0.0;
};

/// (1/Gamma(g)) int_x^inf (t-x)^(g-1) t^(-g-b) 2F1(g+b, -eta; g; 1-x/t) f dt
double saigo(const SaigoParams& params, const FunctionHandle& f, double x,
             const QuadratureConfig& cfg = {});

/// Coefficient C with IB x^m = C x^(2a+m); requires m + 2a + nu < 1.
double ib_power(double nu, double alpha, double m);

/// Gamma-ratio factors of the Mellin images (the argument shift
/// 2a +/- s is the caller's contract).
complex ib_mellin_multiplier(double nu, double alpha, complex s);
complex db_mellin_multiplier(double nu, double alpha, complex s);

VerificationReport ib_via_saigo_check(double nu, double alpha,
                                      const FunctionHandle& f,
                                      const std::vector<double>& grid,
                                      double tol = 1e-5);
VerificationReport ib_semigroup_check(double nu, double alpha, double beta,
                                      const FunctionHandle& f,
                                      const std::vector<double>& grid,
                                      double tol = 1e-4);
VerificationReport ib_inversion_check(double nu, const FunctionHandle& f,
                                      const std::vector<double>& grid,
                                      double tol = 1e-5);

/// Wraps the ib image as a handle supported on (0, support hi].
FunctionHandle ib_image_handle(double nu, double alpha,
                               const FunctionHandle& f,
                               const QuadratureConfig& cfg = {});

}  // namespace fracops::bessel

#endif  // FRACOPS_BESSEL_FRAC_HPP
