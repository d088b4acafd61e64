#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "fracops/bessel_frac.hpp"
#include "fracops/errors.hpp"
#include "fracops/funcmodel.hpp"
#include "fracops/specfun.hpp"

using namespace fracops;
using namespace fracops::bessel;
using funcmodel::make_bump;
using funcmodel::make_monomial;
using doctest::Approx;
using complexd = std::complex<double>;

namespace {
funcmodel::FunctionHandle std_bump() { return make_bump({2.0, 1.0, 1.0}); }
}  // namespace

TEST_CASE("bessel operator on powers") {
  // B_nu x^m = m (m + nu - 1) x^(m-2)
  for (double nu : {0.0, 1.0, 2.5}) {
    for (double m : {-2.0, -1.5}) {
      auto f = make_monomial(m);
      for (double x : {0.7, 1.3}) {
        CHECK(bessel_apply(nu, f, x) ==
              Approx(m * (m + nu - 1.0) * std::pow(x, m - 2.0)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("ib power coefficient") {
  // nu = 1, alpha = 1/4, m = -2: C = Gamma(3/4)^2 / sqrt(2)
  const double g34 = specfun::gamma(0.75);
  CHECK(ib_power(1.0, 0.25, -2.0) ==
        Approx(g34 * g34 / std::sqrt(2.0)).epsilon(1e-13));
  // validity: m + 2 alpha + nu < 1
  CHECK_THROWS_AS(ib_power(1.0, 0.25, 0.5), ValidityViolation);
  CHECK_THROWS_AS(ib_power(0.0, 0.5, 0.0), ValidityViolation);
}

TEST_CASE("ib agrees with its legendre form") {
  auto f = std_bump();
  const double nu = 1.5, alpha = 0.35;
  for (double x : {1.2, 2.0, 2.8}) {
    CHECK(ib(nu, alpha, f, x, {}) ==
          Approx(ib_legendre_form(nu, alpha, f, x, {})).epsilon(1e-8));
  }
  CHECK_THROWS_AS(ib(1.0, 0.0, f, 2.0, {}), ConfigError);
  CHECK_THROWS_AS(ib(1.0, -0.3, f, 2.0, {}), ConfigError);
}

TEST_CASE("ib through saigo") {
  const auto rep = ib_via_saigo_check(1.0, 0.3, std_bump(), {1.5, 2.0, 2.5});
  CHECK(rep.pass);
}

TEST_CASE("mellin multipliers are mutually inverse") {
  for (double nu : {0.0, 1.0, 2.3}) {
    for (double alpha : {0.25, 0.4}) {
      for (double t : {-3.0, 0.5, 4.0}) {
        // m_ib(s) m_db(s + 2 alpha) = 1: the derivative acts on the
        // integral's image, whose Mellin argument is shifted by 2 alpha
        const complexd s(nu + 1.5, t);
        const complexd prod = ib_mellin_multiplier(nu, alpha, s) *
                              db_mellin_multiplier(nu, alpha, s + 2.0 * alpha);
        CHECK(std::abs(prod - 1.0) < 1e-12);
      }
    }
  }
}

TEST_CASE("db inverts ib") {
  auto f = std_bump();
  const double nu = 1.0, alpha = 0.6;
  for (double x : {1.5, 2.0, 2.5}) {
    const double got = db(nu, alpha, ib_image_handle(nu, alpha, f, {}), x, {});
    CHECK(got == Approx(f.eval(x)).epsilon(1e-4));
  }
  CHECK_THROWS_AS(db(1.0, 0.0, f, 2.0, {}), ConfigError);
}

TEST_CASE("semigroup") {
  const auto rep = ib_semigroup_check(1.0, 0.3, 0.4, std_bump(), {1.5, 2.2});
  CHECK(rep.pass);
}

TEST_CASE("image handle requires compact support") {
  CHECK_THROWS_AS(ib_image_handle(1.0, 0.3, make_monomial(-2.0), {}),
                  BadSupport);
  auto h = ib_image_handle(1.0, 0.3, std_bump(), {});
  CHECK(h.support().hi == Approx(3.0));
  CHECK(h.eval(3.5) == 0.0);
  CHECK(h.eval(2.0) == Approx(ib(1.0, 0.3, std_bump(), 2.0, {})).epsilon(1e-12));
}
