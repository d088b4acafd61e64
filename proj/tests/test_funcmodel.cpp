#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "fracops/errors.hpp"
#include "fracops/funcmodel.hpp"
#include "fracops/quadrature.hpp"

using namespace fracops;
using namespace fracops::funcmodel;
using doctest::Approx;

TEST_CASE("support invariants") {
  CHECK_THROWS_AS(Support::interval(0.0, 1.0), BadSupport);
  CHECK_THROWS_AS(Support::interval(2.0, 1.0), BadSupport);
  const Support s = Support::interval(1.0, 3.0);
  CHECK(s.compact);
  CHECK(!Support::half_axis().compact);
}

TEST_CASE("monomial") {
  auto f = make_monomial(-2.0);
  CHECK(f.eval(2.0) == Approx(0.25).epsilon(1e-15));
  CHECK(f.derivative(1, 2.0) == Approx(-2.0 * std::pow(2.0, -3.0)).epsilon(1e-14));
  CHECK(f.derivative(3, 1.5) ==
        Approx(-2.0 * -3.0 * -4.0 * std::pow(1.5, -5.0)).epsilon(1e-13));
  // half-axis support without a tail bound cannot be truncated
  CHECK_THROWS_AS(f.upper_truncation(1.0, 1e-10), BadSupport);
}

TEST_CASE("bump") {
  auto f = make_bump({2.0, 1.0, 1.0});
  CHECK(f.eval(2.0) == Approx(1.0).epsilon(1e-15));
  CHECK(f.eval(1.0) == 0.0);
  CHECK(f.eval(0.5) == 0.0);
  CHECK(f.eval(3.5) == 0.0);
  CHECK(f.support().compact);
  CHECK(f.support().lo == Approx(1.0));
  CHECK(f.support().hi == Approx(3.0));

  // closed-form derivatives against central differences
  for (int k = 1; k <= 4; ++k) {
    for (double x : {1.4, 2.0, 2.6}) {
      auto prev = [&](double t) {
        return k == 1 ? f.eval(t) : f.derivative(k - 1, t);
      };
      auto central = [&](double h) {
        return (prev(x + h) - prev(x - h)) / (2.0 * h);
      };
      const double h = 1e-3;
      const double fd = (4.0 * central(0.5 * h) - central(h)) / 3.0;
      CHECK(f.derivative(k, x) == Approx(fd).epsilon(1e-6));
    }
  }
  // amplitude scaling
  auto g = make_bump({2.0, 1.0, 0.5});
  CHECK(g.eval(2.0) == Approx(0.5).epsilon(1e-15));
}

TEST_CASE("exponential and tail truncation") {
  auto f = make_exponential(2.0);
  CHECK(f.eval(1.0) == Approx(std::exp(-2.0)).epsilon(1e-15));
  CHECK(f.derivative(2, 0.7) == Approx(4.0 * std::exp(-1.4)).epsilon(1e-13));
  const double cut = f.upper_truncation(1.0, 1e-10);
  // the discarded mass must actually be below the tolerance
  CHECK(std::exp(-2.0 * cut) / 2.0 <= 1e-10);
  CHECK(cut < 30.0);
}

TEST_CASE("make_callable smoothness budget") {
  auto f = make_callable([](double x) { return x * x; }, Support::half_axis(), 2);
  CHECK(f.derivative(1, 3.0) == Approx(6.0).epsilon(1e-7));
  CHECK(f.derivative(2, 3.0) == Approx(2.0).epsilon(1e-4));
  CHECK_THROWS_AS(f.derivative(3, 3.0), InsufficientSmoothness);
}

TEST_CASE("truncate_smooth") {
  auto f = truncate_smooth(make_monomial(-2.0), 10.0);
  CHECK(f.support().compact);
  CHECK(f.support().hi == Approx(20.0));
  // identity below the cutoff radius
  CHECK(f.eval(5.0) == Approx(1.0 / 25.0).epsilon(1e-14));
  CHECK(f.eval(10.0) == Approx(0.01).epsilon(1e-14));
  // zero beyond 2r
  CHECK(f.eval(20.5) == 0.0);
  // monotone decay through the transition
  double prev = f.eval(10.0);
  for (double x = 11.0; x < 20.0; x += 1.0) {
    const double cur = f.eval(x);
    CHECK(cur <= prev + 1e-15);
    CHECK(cur >= 0.0);
    prev = cur;
  }
}

TEST_CASE("with_tail_bound enables truncation") {
  auto raw = make_callable([](double x) { return std::exp(-x); },
                           Support::half_axis(), 2);
  CHECK_THROWS_AS(raw.upper_truncation(0.0, 1e-8), BadSupport);
  auto f = raw.with_tail_bound(
      [](double x, double tol) { return x + std::log(1.0 / tol); });
  CHECK(f.upper_truncation(1.0, 1e-8) > 1.0);
}

TEST_CASE("parse_function_spec") {
  auto p = parse_function_spec("pow:m=-2");
  CHECK(p.eval(2.0) == Approx(0.25));
  auto b = parse_function_spec("bump:c=2,r=1");
  CHECK(b.eval(2.0) == Approx(1.0));
  auto ba = parse_function_spec("bump:c=2,r=1,amp=0.25");
  CHECK(ba.eval(2.0) == Approx(0.25));
  auto e = parse_function_spec("exp:l=1");
  CHECK(e.eval(1.0) == Approx(std::exp(-1.0)));
  CHECK_THROWS_AS(parse_function_spec("gauss:s=1"), ConfigError);
  CHECK_THROWS_AS(parse_function_spec("pow:q=1"), ConfigError);
  CHECK_THROWS_AS(parse_function_spec(""), ConfigError);
}

TEST_CASE("compact supports integrate to their mass only") {
  auto f = make_bump({2.0, 1.0, 1.0});
  auto whole = quadrature::integrate([&](double x) { return f.eval(x); }, 0.5,
                                     4.0, {});
  auto inner = quadrature::integrate([&](double x) { return f.eval(x); }, 1.0,
                                     3.0, {});
  CHECK(whole.value == Approx(inner.value).epsilon(1e-10));
}
