#ifndef FRACOPS_BUSCHMAN_ERDELYI_HPP
#define FRACOPS_BUSCHMAN_ERDELYI_HPP

#include <complex>
#include <vector>

#include "fracops/funcmodel.hpp"
#include "fracops/quadrature.hpp"
#include "fracops/report.hpp"

namespace fracops::be {

using complex = std::complex<double>;
using funcmodel::FunctionHandle;
using quadrature::QuadratureConfig;
using report::VerificationReport;

struct BEParams {
  double nu = 0.0;
  double mu = 0.0;
  enum class Side { ZeroPlus, Minus } side = Side::ZeroPlus;
  enum class Family { B, E } family = Family::B;
};

/// First-kind operators with Legendre kernel P_nu^mu, Re mu < 1.
/// The kernel is evaluated in the combined form
/// (x^2-t^2)^(-mu/2) P_nu^mu(ratio) = (|x-t|)^(-mu) / Gamma(1-mu) * 2F1(...)
/// so the edge singularity is a clean power.
double be_first_kind(const BEParams& params, const FunctionHandle& f, double x,
                     const QuadratureConfig& cfg = {});

enum class ZeroOrderKind { S0plus, P0plus, Sminus, Pminus };

/// Zero-order-smoothness operators.  Outer derivatives are converted
/// analytically; the two f'-based forms are evaluated by parts, so only
/// operand values are needed and f must vanish at the support edges.
double be_zero_order(ZeroOrderKind which, double nu, const FunctionHandle& f,
                     double x, const QuadratureConfig& cfg = {});

/// Closed-form Mellin multiplier of a zero-order operator.
struct MellinMultiplier {
  ZeroOrderKind which = ZeroOrderKind::S0plus;
  double nu = 0.0;

  /// Gamma-ratio value; throws StripViolation outside the validity strip.
  complex eval(complex s) const;
  /// Analytic continuation of the Gamma ratio; sets *in_strip if given.
  complex eval_continued(complex s, bool* in_strip = nullptr) const;
  bool in_strip(complex s) const;
};

MellinMultiplier make_multiplier(ZeroOrderKind which, double nu);

struct NormValue {
  bool unbounded = false;
  double value = 0.0;
};

/// L2 operator norm from the closed-form expressions; exact period 2
/// in nu.
NormValue be_norm(ZeroOrderKind which, double nu);

enum class ThirdKind { SU, PU };

/// Unitary third-kind operators (Sonine-Katrakhov / Poisson-Katrakhov):
/// cos(pi nu/2) times a zero-order piece plus (2/pi) sin(pi nu/2) times
/// second-kind Legendre pieces, with the diagonal principal value
/// evaluated as a paired integral.
double be_third_kind(ThirdKind which, double nu, const FunctionHandle& f,
                     double x, const QuadratureConfig& cfg = {});

VerificationReport be_factorization_check(double nu, double mu,
                                          BEParams::Family family,
                                          const FunctionHandle& f,
                                          const std::vector<double>& grid,
                                          double tol = 1e-5);

/// |m(1/2+it)| over the grid; passes iff sup and inf are within 1e-8 of 1.
VerificationReport be_unitarity_check(ZeroOrderKind which, double nu,
                                      const std::vector<double>& t_grid);

/// Mutual inversion at integer nu: Pminus(S0plus f) = f and
/// P0plus(Sminus f) = f on interior grid points.
VerificationReport be_inversion_check(double nu, const FunctionHandle& f,
                                      const std::vector<double>& grid,
                                      double tol = 1e-5);

enum class IntertwineTarget { BesselBnu, AngularLnu };

/// Exploratory check of S(target f) = d^2/dx^2 (S f); records the
/// residual rather than asserting a tolerance.
VerificationReport be_intertwining_check(ThirdKind which, double nu,
                                         const FunctionHandle& f,
                                         IntertwineTarget target,
                                         const std::vector<double>& grid);

}  // namespace fracops::be

#endif  // FRACOPS_BUSCHMAN_ERDELYI_HPP
