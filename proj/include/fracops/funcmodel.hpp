#ifndef FRACOPS_FUNCMODEL_HPP
#define FRACOPS_FUNCMODEL_HPP

#include <functional>
#include <memory>
#include <string>

#include "fracops/errors.hpp"

namespace fracops::funcmodel {

/// Support of an operand on (0, inf).  Compact supports satisfy
/// 0 < lo < hi < inf; non-compact analytic operands use half_axis().
struct Support {
  bool compact = false;
  double lo = 0.0;
  double hi = 0.0;

  static Support half_axis() { return {}; }
  static Support interval(double a, double b) {
    if (!(0.0 < a && a < b))
      throw BadSupport("Support: need 0 < lo < hi");
    return {true, a, b};
  }
};

/// An evaluable real function on (0, inf) with analytic derivatives up
/// to a declared order and support metadata.  Immutable; cheap to copy.
class FunctionHandle {
 public:
  using Eval = std::function<double(double)>;
  /// derivative callback: (order k >= 1, x) -> value
  using Deriv = std::function<double(int, double)>;
  /// tail bound: (x, abs_tol) -> upper limit beyond which the operand's
  /// contribution to any half-axis integral from x is below abs_tol
  using TailBound = std::function<double(double, double)>;

  FunctionHandle() = default;
  FunctionHandle(Eval eval, Deriv deriv, int closed_form_order,
                 Support support, int smoothness);

  double operator()(double x) const { return eval(x); }
  double eval(double x) const;

  /// k-th derivative; analytic up to the closed-form order, Richardson
  /// finite differences beyond (step 1e-4 * max(1,|x|)).
  double derivative(int k, double x) const;

  const Support& support() const;
  int smoothness() const;

  /// Exact or tolerance-based truncation point for integrals over
  /// (x, inf).  Compact supports return hi; decaying operands use their
  /// tail bound; otherwise BadSupport.
  double upper_truncation(double x, double abs_tol) const;

  FunctionHandle with_tail_bound(TailBound tb) const;

  bool valid() const { return bool(impl_); }

  struct Impl;

 private:
  std::shared_ptr<const Impl> impl_;
};

struct BumpSpec {
  double center = 2.0;
  double radius = 1.0;
  double amplitude = 1.0;
};

/// x^m with closed-form derivatives of every order; half-axis support.
FunctionHandle make_monomial(double m);

/// Peak-normalized C-infinity bump amplitude * exp(1 - 1/(1-u^2)),
/// u = (x-c)/r, supported on [c-r, c+r].  Closed-form derivatives to
/// order 4, finite differences beyond.
FunctionHandle make_bump(const BumpSpec& spec);

/// exp(-lambda x), lambda > 0, with closed-form derivatives and an
/// exponential tail bound.
FunctionHandle make_exponential(double lambda);

/// Wraps an arbitrary evaluator (e.g. an inner operator image) as a
/// handle; derivatives by finite differences unless a callback is given.
FunctionHandle make_callable(FunctionHandle::Eval eval, Support support,
                             int smoothness = 2,
                             FunctionHandle::Deriv deriv = nullptr,
                             int closed_form_order = 0);

/// Multiplies f by a C-infinity cutoff that is 1 on (0, r] and 0 on
/// [2r, inf), giving a compactly supported handle.
FunctionHandle truncate_smooth(const FunctionHandle& f, double r);

/// Parses "pow:m=-2", "bump:c=2,r=1", "bump:c=2,r=1,amp=0.5",
/// "exp:l=1".  Throws ConfigError on anything else.
FunctionHandle parse_function_spec(const std::string& spec);

}  // namespace fracops::funcmodel

#endif  // FRACOPS_FUNCMODEL_HPP
