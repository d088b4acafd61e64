#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "fracops/classical.hpp"
#include "fracops/errors.hpp"
#include "fracops/funcmodel.hpp"
#include "fracops/specfun.hpp"

using namespace fracops;
using namespace fracops::classical;
using funcmodel::make_bump;
using funcmodel::make_exponential;
using funcmodel::make_monomial;
using doctest::Approx;

TEST_CASE("riemann-liouville integral power oracle") {
  // I^alpha_{0+} t^m (x) = Gamma(m+1)/Gamma(m+1+alpha) x^(m+alpha)
  auto f = make_monomial(1.0);
  CHECK(rl_integral_left(f, 0.0, 0.5, 1.0, {}) ==
        Approx(specfun::gamma(2.0) / specfun::gamma(2.5)).epsilon(1e-11));
  CHECK(rl_integral_left(f, 0.0, 0.5, 4.0, {}) ==
        Approx(specfun::gamma(2.0) / specfun::gamma(2.5) * 8.0).epsilon(1e-11));
  CHECK(rl_integral_left(make_monomial(2.0), 0.0, 1.3, 2.0, {}) ==
        Approx(specfun::gamma(3.0) / specfun::gamma(4.3) *
               std::pow(2.0, 3.3)).epsilon(1e-11));
  CHECK_THROWS_AS(rl_integral_left(f, 0.0, -0.5, 1.0, {}), ConfigError);
  CHECK_THROWS_AS(rl_integral_left(f, 2.0, 0.5, 1.0, {}), DomainError);
}

TEST_CASE("riemann-liouville derivative power oracle") {
  // D^0.5_{0+} t (x=1) = Gamma(2)/Gamma(1.5)
  auto f = make_monomial(1.0);
  CHECK(rl_derivative_left(f, 0.0, 0.5, 1.0, {}) ==
        Approx(specfun::gamma(2.0) / specfun::gamma(1.5)).epsilon(1e-10));
  // D then I of the same order recovers the operand
  auto b = make_bump({2.0, 1.0, 1.0});
  auto image = rl_integral_left_handle(b, 0.0, 0.7, {});
  for (double x : {1.5, 2.0, 2.5})
    CHECK(rl_derivative_left(image, 0.0, 0.7, x, {}) ==
          Approx(b.eval(x)).epsilon(1e-8));
}

TEST_CASE("right-sided operators") {
  // I^alpha_- e^(-t) = e^(-x) for every alpha
  auto e = make_exponential(1.0);
  for (double alpha : {0.3, 0.5, 1.4}) {
    CHECK(liouville_right(e, alpha, 1.0, {}) ==
          Approx(std::exp(-1.0)).epsilon(1e-8));
  }
  // right RL derivative inverts the right integral on bump interiors
  auto b = make_bump({2.0, 1.0, 1.0});
  auto image = funcmodel::make_callable(
      [&](double x) { return liouville_right(b, 0.6, x, {}); },
      funcmodel::Support::interval(1e-12, 3.0), 4);
  CHECK(rl_derivative_right(image, 3.0, 0.6, 2.0, {}) ==
        Approx(b.eval(2.0)).epsilon(1e-5));
}

TEST_CASE("rl semigroup") {
  auto b = make_bump({2.0, 1.0, 1.0});
  auto inner = rl_integral_left_handle(b, 0.0, 0.4, {});
  for (double x : {1.5, 2.2, 2.9}) {
    CHECK(rl_integral_left(inner, 0.0, 0.3, x, {}) ==
          Approx(rl_integral_left(b, 0.0, 0.7, x, {})).epsilon(1e-9));
  }
}

TEST_CASE("erdelyi-kober") {
  // constant-image law: EK(alpha, y) 1 = Gamma(y+1)/Gamma(alpha+y+1)
  auto one = make_monomial(0.0);
  for (double alpha : {0.5, 1.2}) {
    for (double y : {0.0, 0.7}) {
      CHECK(erdelyi_kober_left(one, alpha, y, 1.7, {}) ==
            Approx(specfun::gamma(y + 1.0) / specfun::gamma(alpha + y + 1.0))
                .epsilon(1e-9));
    }
  }
  // inverse pair: EK(-1/2, y=1/2) EK(1/2, y=0) = id (continued branch)
  auto b = make_bump({2.0, 1.0, 1.0});
  auto image = funcmodel::make_callable(
      [&](double x) { return erdelyi_kober_left(b, 0.5, 0.0, x, {}); },
      funcmodel::Support::interval(1e-12, 3.0), 2);
  for (double x : {1.6, 2.0, 2.4}) {
    CHECK(erdelyi_kober_left(image, -0.5, 0.5, x, {}, 1) ==
          Approx(b.eval(x)).epsilon(1e-6));
  }
  // right-sided constant law on a decaying operand checks plumbing only
  CHECK(std::isfinite(erdelyi_kober_right(make_exponential(1.0), 0.5, 0.3, 1.0, {})));
}

TEST_CASE("fractional integral by a function") {
  auto b = make_bump({2.0, 1.0, 1.0});
  // g = id reproduces RL bit for bit
  for (double x : {1.5, 2.0, 2.7}) {
    CHECK(frac_by_function_left(b, identity_weight(), 0.5, x, 0.5, {}) ==
          rl_integral_left(b, 0.5, 0.5, x, {}));
  }
  // g = t^2 relates to Erdelyi-Kober with y = 0:
  //   fracg_sq = Gamma-normalized integral in w = t^2 = x^(2 alpha) EK(alpha, 0)
  // lo = 0.5 is below the bump support, so the weighted integral agrees
  // with the Erdelyi-Kober form anchored at 0
  const double alpha = 0.5, x = 2.2;
  CHECK(frac_by_function_left(b, square_weight(), alpha, x, 0.5, {}) ==
        Approx(std::pow(x, 2.0 * alpha) *
               erdelyi_kober_left(b, alpha, 0.0, x, {})).epsilon(1e-9));
}

TEST_CASE("hadamard") {
  // Hadamard integral of 1 from 1: (ln x)^alpha / Gamma(alpha+1)
  auto one = make_monomial(0.0);
  for (double alpha : {0.5, 1.0, 1.7}) {
    CHECK(hadamard_left(one, alpha, std::exp(1.0), 1.0, {}) ==
          Approx(1.0 / specfun::gamma(alpha + 1.0)).epsilon(1e-10));
  }
}

TEST_CASE("gerasimov derivative") {
  auto b = make_bump({2.0, 1.0, 1.0});
  const double alpha = 0.5;
  // -d/dx of the right Liouville integral of matching order
  for (double x : {1.5, 2.0}) {
    const double h = 1e-4;
    const double want = -(liouville_right(b, alpha, x + h, {}) -
                          liouville_right(b, alpha, x - h, {})) /
                        (2.0 * h);
    CHECK(gerasimov_derivative(b, alpha, x, {}) == Approx(want).epsilon(1e-5));
  }
  CHECK(gerasimov_derivative(b, alpha, 1.5, {}) ==
        gerasimov_caputo(b, alpha, 1.5, 1, {}));
  CHECK_THROWS_AS(gerasimov_caputo(b, 1.5, 1.5, 1, {}), ConfigError);
}

TEST_CASE("distributed order") {
  DistributedSpec spec;
  spec.inner_at_order = [](double t) { return t * t; };
  spec.a = 0.0;
  spec.b = 1.0;
  CHECK(distributed_apply(spec, {}) == Approx(1.0 / 3.0).epsilon(1e-10));
  spec.averaged = true;
  spec.a = 1.0;
  spec.b = 3.0;
  spec.inner_at_order = [](double) { return 5.0; };
  CHECK(distributed_apply(spec, {}) == Approx(5.0).epsilon(1e-12));
}

TEST_CASE("dzhrbashyan-nersesyan composition") {
  const DNSignature sig({0.5, -0.25, 1.0});
  CHECK(sig.sigma == Approx(1.25));
  auto b = make_bump({2.0, 1.0, 1.0});
  // D^(1/2) I^(1/2) = id
  const DNSignature id_sig({0.5, -0.5});
  for (double x : {1.5, 2.5})
    CHECK(dn_apply(id_sig, b, x, 0.0, {}) == Approx(b.eval(x)).epsilon(1e-6));
  // I^(1/2) I^(1/2) = I^1
  const DNSignature ii({-0.5, -0.5});
  CHECK(dn_apply(ii, b, 2.0, 0.0, {}) ==
        Approx(rl_integral_left(b, 0.0, 1.0, 2.0, {})).epsilon(1e-8));
}
