#ifndef FRACOPS_MELLIN_HPP
#define FRACOPS_MELLIN_HPP

#include <complex>
#include <functional>
#include <vector>

#include "fracops/funcmodel.hpp"
#include "fracops/quadrature.hpp"

namespace fracops::mellin {

using complex = std::complex<double>;
using funcmodel::FunctionHandle;
using quadrature::QuadratureConfig;

/// M f(s) = int x^(s-1) f(x) dx over the operand's support (compact, or
/// truncated through its tail bound).
complex mellin_numeric(const FunctionHandle& f, complex s,
                       const QuadratureConfig& cfg = {});

struct NormEstimate {
  bool unbounded = false;
  double value = 0.0;
  int strip_violations = 0;
};

/// Multiplier on the critical line: t -> m(1/2 + it); the bool flag
/// reports whether the point lies in the stated strip.
using LineMultiplier = std::function<complex(double, bool*)>;

/// sup over the grid of |m(1/2+it)|, with geometric refinement past the
/// grid ends when |m| is still increasing there; flags Unbounded once
/// the refined values pass the divergence threshold.
NormEstimate plancherel_norm(const LineMultiplier& m,
                             const std::vector<double>& t_grid,
                             double divergence_threshold = 1e6);

/// 512 points, log-spaced |t| in [1e-3, 1e3], both signs.
std::vector<double> default_t_grid();

}  // namespace fracops::mellin

#endif  // FRACOPS_MELLIN_HPP
