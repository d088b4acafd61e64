#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "fracops/buschman_erdelyi.hpp"
#include "fracops/classical.hpp"
#include "fracops/errors.hpp"
#include "fracops/funcmodel.hpp"
#include "fracops/mellin.hpp"
#include "fracops/quadrature.hpp"

using namespace fracops;
using namespace fracops::be;
using funcmodel::make_bump;
using doctest::Approx;
using complexd = std::complex<double>;

namespace {
funcmodel::FunctionHandle std_bump() { return make_bump({2.0, 1.0, 1.0}); }
}  // namespace

TEST_CASE("first kind reduces to riemann-liouville at nu = 0") {
  // P_0^mu kernel collapses: B^(0,mu)_(0+) = I^(1-mu)_(0+)
  auto f = std_bump();
  BEParams p;
  p.nu = 0.0;
  p.mu = 0.3;
  for (auto family : {BEParams::Family::B, BEParams::Family::E}) {
    p.family = family;
    for (double x : {1.5, 2.0, 2.6}) {
      CHECK(be_first_kind(p, f, x, {}) ==
            Approx(classical::rl_integral_left(f, 0.0, 0.7, x, {}))
                .epsilon(1e-10));
    }
  }
  p.mu = 1.2;
  CHECK_THROWS_AS(be_first_kind(p, f, 1.5, {}), ConfigError);
}

TEST_CASE("zero order operators collapse to identity at nu = 0") {
  auto f = std_bump();
  for (auto kind : {ZeroOrderKind::S0plus, ZeroOrderKind::P0plus,
                    ZeroOrderKind::Sminus, ZeroOrderKind::Pminus}) {
    for (double x : {1.3, 2.0, 2.7}) {
      CHECK(be_zero_order(kind, 0.0, f, x, {}) == Approx(f.eval(x)).epsilon(1e-10));
    }
  }
}

TEST_CASE("mellin multiplier strip handling") {
  const auto m = make_multiplier(ZeroOrderKind::S0plus, 1.0);
  // strip: Re s < min(2+nu, 1-nu) = 0
  CHECK(m.in_strip(complexd(-0.5, 3.0)));
  CHECK(!m.in_strip(complexd(0.5, 0.0)));
  CHECK_THROWS_AS(m.eval(complexd(0.5, 0.0)), StripViolation);
  bool in = true;
  const complexd v = m.eval_continued(complexd(0.5, 2.0), &in);
  CHECK(!in);
  CHECK(std::isfinite(std::abs(v)));
  // continuation agrees with eval inside the strip
  bool in2 = false;
  CHECK(std::abs(m.eval_continued(complexd(-0.5, 1.0), &in2) -
                 m.eval(complexd(-0.5, 1.0))) < 1e-14);
  CHECK(in2);
}

TEST_CASE("norm formulas") {
  // nu = 0: every operator has norm 1
  for (auto kind : {ZeroOrderKind::S0plus, ZeroOrderKind::P0plus,
                    ZeroOrderKind::Sminus, ZeroOrderKind::Pminus}) {
    const auto n = be_norm(kind, 0.0);
    CHECK(!n.unbounded);
    CHECK(n.value == Approx(1.0));
  }
  // smoothing pair is unbounded at sin(pi nu) = 1
  CHECK(be_norm(ZeroOrderKind::S0plus, 0.5).unbounded);
  CHECK(be_norm(ZeroOrderKind::Pminus, 0.5).unbounded);
  // roughening pair reaches sqrt(2) at nu = -1/2
  CHECK(be_norm(ZeroOrderKind::P0plus, -0.5).value == Approx(std::sqrt(2.0)));
  CHECK(be_norm(ZeroOrderKind::Sminus, -0.5).value == Approx(std::sqrt(2.0)));
  // exact period 2
  CHECK(be_norm(ZeroOrderKind::P0plus, 0.75).value ==
        be_norm(ZeroOrderKind::P0plus, 2.75).value);
}

TEST_CASE("unitarity on the critical line at integer nu") {
  const auto grid = mellin::default_t_grid();
  for (double nu : {1.0, 2.0}) {
    const auto rep = be_unitarity_check(ZeroOrderKind::P0plus, nu, grid);
    CHECK(rep.pass);
    CHECK(rep.max_rel_err < 1e-8);
  }
}

TEST_CASE("mutual inversion at integer nu") {
  const auto rep = be_inversion_check(1.0, std_bump(), {1.5, 2.0, 2.5}, 1e-5);
  CHECK(rep.pass);
}

TEST_CASE("factorization through zero-order operators") {
  const auto rep = be_factorization_check(1.0, 0.4, BEParams::Family::B,
                                          std_bump(), {1.8, 2.3}, 1e-5);
  CHECK(rep.pass);
}

TEST_CASE("third kind operators preserve the L2 norm") {
  auto f = std_bump();
  quadrature::QuadratureConfig cfg;
  cfg.rel_tol = 1e-8;
  cfg.abs_tol = 1e-10;
  cfg.max_subdivisions = 2000;
  quadrature::QuadratureConfig outer;
  outer.rel_tol = 1e-6;
  outer.abs_tol = 1e-9;
  outer.max_subdivisions = 600;
  const double f2 =
      quadrature::integrate([&](double x) { return f.eval(x) * f.eval(x); },
                            1.0, 3.0, outer)
          .value;
  const double nu = 0.5;
  for (auto which : {ThirdKind::SU, ThirdKind::PU}) {
    auto g = [&](double x) { return be_third_kind(which, nu, f, x, cfg); };
    const double t2 =
        quadrature::integrate([&](double x) { return g(x) * g(x); }, 1e-4, 12.0,
                              outer)
            .value;
    CHECK(t2 / f2 == Approx(1.0).epsilon(1e-2));
  }
}

TEST_CASE("third kind intertwines the angular operator") {
  // S(L_nu f) = (S f)'' with L_nu = d^2/dx^2 - nu(nu+1)/x^2
  auto f = std_bump();
  const auto rep = be_intertwining_check(ThirdKind::SU, 1.0, f,
                                         IntertwineTarget::AngularLnu,
                                         {1.8, 2.2});
  CHECK(rep.n_points > 0);
  CHECK(rep.max_rel_err < 1e-4);
}
