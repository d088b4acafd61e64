#ifndef FRACOPS_SPECFUN_HPP
#define FRACOPS_SPECFUN_HPP

#include <complex>
#include <vector>

#include "fracops/errors.hpp"

namespace fracops::specfun {

using complex = std::complex<double>;

/// Gamma function for real argument.  Throws PoleError at 0, -1, -2, ...
double gamma(double x);

/// log|Gamma(x)| together with the sign of Gamma(x).
double log_abs_gamma(double x, int* sign = nullptr);

/// Log-Gamma, principal branch (real on the positive real axis).
/// For Re z < 1/2 the reflection formula is used; the real part is then
/// exact while the imaginary part is reported modulo 2*pi.
complex log_gamma(complex z);

complex gamma(complex z);

/// Digamma (psi) function for real non-pole argument.
double digamma(double x);

/// Ratio of Gamma products evaluated in log space,
/// Gamma(num_0)...Gamma(num_m) / (Gamma(den_0)...Gamma(den_n)).
/// A non-positive-integer numerator argument is a PoleError unless an
/// exactly equal denominator argument cancels it.  Non-positive-integer
/// denominator arguments send the ratio to zero.
struct GammaRatioSpec {
  std::vector<complex> numerator_args;
  std::vector<complex> denominator_args;
};
complex gamma_ratio(const GammaRatioSpec& spec);
double gamma_ratio(const std::vector<double>& num, const std::vector<double>& den);

/// Gauss hypergeometric function 2F1(a,b;c;z) for real parameters and
/// real z < 1.  Handles terminating series, the z<0 Pfaff map, the
/// z->1-z linear transformation, and the logarithmic cases where c-a-b
/// is an integer.
double gauss_2f1(double a, double b, double c, double z);

/// Same function with the complementary argument 1-z given directly,
/// for callers whose z is so close to 1 that forming it would lose the
/// distance to the singular point.
double gauss_2f1_cc(double a, double b, double c, double one_minus_z);

enum class Regime { OffCut, OnCut };

struct LegendreArg {
  double degree = 0.0;   // nu
  double order = 0.0;    // mu, |Re mu| handled for mu < 1
  double z = 0.0;
  Regime regime = Regime::OffCut;
};

/// Legendre function of the first kind P_nu^mu(z) (OffCut, z > 1) or the
/// Ferrers function of the first kind (OnCut, -1 < z < 1).
double legendre_p(const LegendreArg& arg);
double legendre_p(double nu, double mu, double z, Regime regime);

/// Order-zero shortcut, P_nu(z).
double legendre_p(double nu, double z, Regime regime);

/// k-th z-derivative of P_nu(z) (order zero), valid in both regimes.
double legendre_p_deriv(double nu, double z, Regime regime, int k = 1);

/// Legendre function of the second kind Q_nu(z) / Ferrers Q.
/// nu must not be a negative integer.
double legendre_q(double nu, double z, Regime regime);

/// First z-derivative of Q_nu.
double legendre_q_deriv(double nu, double z, Regime regime);

/// Order-one associated function: Q_nu^1(z) = sqrt(z^2-1) Q_nu'(z) off
/// the cut, and the Ferrers version -sqrt(1-z^2) Q_nu'(z) on the cut.
double legendre_q1(double nu, double z, Regime regime);

bool is_nonpositive_integer(double x, double tol = 1e-12);

}  // namespace fracops::specfun

#endif  // FRACOPS_SPECFUN_HPP
