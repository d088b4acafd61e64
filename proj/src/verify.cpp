#include "fracops/verify.hpp"

#include <cmath>
#include <complex>

#include "fracops/bessel_frac.hpp"
#include "fracops/buschman_erdelyi.hpp"
#include "fracops/classical.hpp"
#include "fracops/funcmodel.hpp"
#include "fracops/mellin.hpp"
#include "fracops/specfun.hpp"

namespace fracops::verify {

namespace {

using complex = std::complex<double>;
using funcmodel::FunctionHandle;
using quadrature::QuadratureConfig;

FunctionHandle std_bump() { return funcmodel::make_bump({2.0, 1.0, 1.0}); }

std::vector<double> interior_grid(int n) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i)
    g.push_back(1.1 + 1.8 * double(i) / double(n - 1));
  return g;
}

std::vector<double> pick(const std::vector<double>& override_list,
                         std::vector<double> defaults) {
  return override_list.empty() ? defaults : override_list;
}

void acc_complex(VerificationReport& rep, complex got, complex want) {
  const double scale = std::max(std::abs(want), 1e-30);
  const double rel = std::abs(got - want) / scale;
  rep.max_rel_err = std::max(rep.max_rel_err, rel);
  rep.mean_rel_err += rel;
  rep.n_points += 1;
}

// ---------------------------------------------------------------- rl-basic

std::vector<VerificationReport> suite_rl_basic(const Options& opts) {
  std::vector<VerificationReport> out;
  const auto f = std_bump();
  QuadratureConfig cfg;
  const auto alphas = pick(opts.alpha, {0.5});

  {
    VerificationReport rep;
    rep.check_name = "rl_left_inverse_identity";
    rep.tolerance = 1e-6;
    for (double alpha : alphas) {
      auto image = classical::rl_integral_left_handle(f, 0.0, alpha, cfg);
      for (double x : interior_grid(7)) {
        const double got = classical::rl_derivative_left(image, 0.0, alpha, x, cfg);
        report::accumulate_error(rep, got, f.eval(x));
      }
    }
    report::finalize(rep);
    out.push_back(rep);
  }
  {
    VerificationReport rep;
    rep.check_name = "rl_integral_power_oracle";
    rep.tolerance = 1e-10;
    const double got =
        classical::rl_integral_left(funcmodel::make_monomial(1.0), 0.0, 0.5, 1.0, cfg);
    report::accumulate_error(rep, got,
                             specfun::gamma(2.0) / specfun::gamma(2.5));
    report::finalize(rep);
    out.push_back(rep);
  }
  {
    VerificationReport rep;
    rep.check_name = "rl_semigroup";
    rep.tolerance = 1e-7;
    auto inner = classical::rl_integral_left_handle(f, 0.0, 0.4, cfg);
    for (double x : interior_grid(10)) {
      const double lhs = classical::rl_integral_left(inner, 0.0, 0.3, x, cfg);
      const double rhs = classical::rl_integral_left(f, 0.0, 0.7, x, cfg);
      report::accumulate_error(rep, lhs, rhs);
    }
    report::finalize(rep);
    out.push_back(rep);
  }
  {
    VerificationReport rep;
    rep.check_name = "frac_by_function_identity_weight";
    rep.tolerance = 1e-12;
    auto g = classical::identity_weight();
    for (double x : {1.5, 2.0, 2.5}) {
      const double lhs = classical::frac_by_function_left(f, g, 0.5, x, 0.5, cfg);
      const double rhs = classical::rl_integral_left(f, 0.5, 0.5, x, cfg);
      report::accumulate_error(rep, lhs, rhs);
    }
    report::finalize(rep);
    out.push_back(rep);
  }
  {
    VerificationReport rep;
    rep.check_name = "hadamard_trivial";
    rep.tolerance = 1e-10;
    const double got = classical::hadamard_left(funcmodel::make_monomial(0.0),
                                                1.0, std::exp(1.0), 1.0, cfg);
    report::accumulate_error(rep, got, 1.0);
    report::finalize(rep);
    out.push_back(rep);
  }
  {
    VerificationReport rep;
    rep.check_name = "ek_constant_image_law";
    rep.tolerance = 1e-8;
    const auto one = funcmodel::make_monomial(0.0);
    for (double alpha : {0.5, 1.0, 1.3}) {
      for (double y : {0.0, 0.5, 1.0}) {
        const double want = specfun::gamma(y + 1.0) / specfun::gamma(alpha + y + 1.0);
        for (double x : {0.7, 1.4, 2.6}) {
          const double got = classical::erdelyi_kober_left(one, alpha, y, x, cfg);
          report::accumulate_error(rep, got, want);
        }
      }
    }
    report::finalize(rep);
    out.push_back(rep);
  }
  {
    VerificationReport rep;
    rep.check_name = "gerasimov_equals_minus_ddx_liouville_right";
    rep.tolerance = 1e-6;
    const double alpha = 0.5;
    auto lr = [&](double x) { return classical::liouville_right(f, alpha, x, cfg); };
    for (double x : interior_grid(5)) {
      const double h = 1e-3;
      const double d1 = (lr(x + h) - lr(x - h)) / (2.0 * h);
      const double d2 = (lr(x + 0.5 * h) - lr(x - 0.5 * h)) / h;
      const double want = -(4.0 * d2 - d1) / 3.0;
      const double got = classical::gerasimov_derivative(f, alpha, x, cfg);
      report::accumulate_error(rep, got, want, 1e-3);
    }
    report::finalize(rep);
    out.push_back(rep);
  }
  return out;
}

// ----------------------------------------------------------- be-multipliers

std::vector<VerificationReport> suite_be_multipliers(const Options& opts) {
  std::vector<VerificationReport> out;
  const auto nus = pick(opts.nu, {-0.5, 0.0, 0.3, 1.0, 1.7});
  for (double nu : nus) {
    using be::ZeroOrderKind;
    const auto s0 = be::make_multiplier(ZeroOrderKind::S0plus, nu);
    const auto p0 = be::make_multiplier(ZeroOrderKind::P0plus, nu);
    const auto sm = be::make_multiplier(ZeroOrderKind::Sminus, nu);
    const auto pm = be::make_multiplier(ZeroOrderKind::Pminus, nu);
    VerificationReport rep;
    rep.check_name = "be_multiplier_identities_nu" + std::to_string(nu);
    rep.tolerance = 1e-12;
    const double left_bound = std::min({1.0, 2.0 + nu, 1.0 - nu});
    const double right_bound = std::max({0.0, nu, -1.0 - nu});
    for (int k = 0; k < 100; ++k) {
      const double im = -5.0 + 10.0 * double(k) / 99.0;
      const double u = 0.15 + 1.7 * double((k * 37) % 100) / 99.0;
      const complex sl(left_bound - u, im);   // in S0plus and P0plus strips
      const complex sr(right_bound + u, im);  // in Sminus and Pminus strips
      acc_complex(rep, p0.eval(sl) * s0.eval(sl), 1.0);
      acc_complex(rep, pm.eval(sr) * sm.eval(sr), 1.0);
      acc_complex(rep, pm.eval(sr), s0.eval(1.0 - sr));
      acc_complex(rep, p0.eval(sl), sm.eval(1.0 - sl));
    }
    report::finalize(rep);
    out.push_back(rep);
  }
  return out;
}

// ---------------------------------------------------------------- be-norms

mellin::LineMultiplier line_multiplier(be::ZeroOrderKind kind, double nu) {
  const auto m = be::make_multiplier(kind, nu);
  return [m](double t, bool* strip) {
    return m.eval_continued(complex(0.5, t), strip);
  };
}

std::vector<VerificationReport> suite_be_norms(const Options& opts) {
  std::vector<VerificationReport> out;
  const auto grid = mellin::default_t_grid();
  const std::vector<be::ZeroOrderKind> kinds = {
      be::ZeroOrderKind::S0plus, be::ZeroOrderKind::P0plus,
      be::ZeroOrderKind::Sminus, be::ZeroOrderKind::Pminus};
  const char* names[] = {"S0plus", "P0plus", "Sminus", "Pminus"};
  const auto nus = pick(opts.nu, {-0.5, -0.2, 0.0, 0.3, 0.5, 1.0});
  for (double nu : nus) {
    VerificationReport rep;
    rep.check_name = "be_norms_nu" + std::to_string(nu);
    rep.tolerance = 1e-3;
    for (size_t i = 0; i < kinds.size(); ++i) {
      const auto want = be::be_norm(kinds[i], nu);
      const auto got = mellin::plancherel_norm(line_multiplier(kinds[i], nu), grid);
      if (want.unbounded || got.unbounded) {
        report::accumulate_error(rep, want.unbounded == got.unbounded ? 1.0 : 2.0,
                                 1.0);
        if (want.unbounded != got.unbounded)
          rep.note += std::string(names[i]) + " unbounded mismatch; ";
      } else {
        report::accumulate_error(rep, got.value, want.value);
      }
    }
    report::finalize(rep);
    out.push_back(rep);
  }
  {
    VerificationReport rep;
    rep.check_name = "be_norm_periodicity_exact";
    rep.tolerance = 0.0;
    // dyadic nu so that nu + 2 itself is exact in double precision
    for (double nu : {-0.5, -0.25, 0.25, 0.75, 1.0}) {
      for (auto kind : kinds) {
        const auto a = be::be_norm(kind, nu);
        const auto b = be::be_norm(kind, nu + 2.0);
        const double err = (a.unbounded != b.unbounded)
                               ? 1.0
                               : (a.unbounded ? 0.0 : std::abs(a.value - b.value));
        report::accumulate_error(rep, 1.0 + err, 1.0);
      }
    }
    report::finalize(rep);
    out.push_back(rep);
  }
  {
    VerificationReport rep;
    rep.check_name = "be_norm_sqrt2_maximum";
    rep.tolerance = 1e-3;
    const auto got = mellin::plancherel_norm(
        line_multiplier(be::ZeroOrderKind::P0plus, -0.5), grid);
    report::accumulate_error(rep, got.value, std::sqrt(2.0));
    report::finalize(rep);
    out.push_back(rep);
  }
  return out;
}

// -------------------------------------------------------------- be-unitary

std::vector<VerificationReport> suite_be_unitary(const Options& opts) {
  std::vector<VerificationReport> out;
  const auto grid = mellin::default_t_grid();
  const std::vector<be::ZeroOrderKind> kinds = {
      be::ZeroOrderKind::S0plus, be::ZeroOrderKind::P0plus,
      be::ZeroOrderKind::Sminus, be::ZeroOrderKind::Pminus};
  const auto nus = pick(opts.nu, {0.0, 1.0, 2.0, 3.0});
  for (double nu : nus) {
    VerificationReport combined;
    combined.check_name = "be_unitary_modulus_nu" + std::to_string(nu);
    combined.tolerance = 1e-8;
    for (auto kind : kinds) {
      const auto rep = be::be_unitarity_check(kind, nu, grid);
      combined.max_rel_err = std::max(combined.max_rel_err, rep.max_rel_err);
      combined.mean_rel_err += rep.mean_rel_err;
      combined.n_points += 1;
      if (!rep.note.empty()) combined.note = rep.note;
    }
    report::finalize(combined);
    out.push_back(combined);
  }
  {
    // nu = 0 collapse to the identity in direct space
    VerificationReport rep;
    rep.check_name = "be_zero_order_nu0_identity";
    rep.tolerance = 1e-8;
    const auto f = std_bump();
    QuadratureConfig cfg;
    for (auto kind : kinds) {
      for (double x : interior_grid(20)) {
        const double got = be::be_zero_order(kind, 0.0, f, x, cfg);
        report::accumulate_error(rep, got, f.eval(x));
      }
    }
    report::finalize(rep);
    out.push_back(rep);
  }
  return out;
}

// -------------------------------------------------------- be-inverse-pairs

std::vector<VerificationReport> suite_be_inverse_pairs(const Options& opts) {
  std::vector<VerificationReport> out;
  const auto f = std_bump();
  const auto nus = pick(opts.nu, {1.0, 2.0});
  for (double nu : nus)
    out.push_back(be::be_inversion_check(nu, f, interior_grid(5), 1e-5));
  return out;
}

// -------------------------------------------------------- be-factorization

std::vector<VerificationReport> suite_be_factorization(const Options& opts) {
  std::vector<VerificationReport> out;
  const auto f = std_bump();
  const std::vector<double> grid = {1.5, 2.0, 2.5};
  struct Pair { double nu, mu; };
  std::vector<Pair> pairs = {{1.0, 0.3}, {1.0, 0.5}, {2.0, 0.3}};
  if (!opts.nu.empty()) {
    pairs.clear();
    for (double nu : opts.nu) pairs.push_back({nu, 0.3});
  }
  for (const auto& p : pairs) {
    out.push_back(be::be_factorization_check(p.nu, p.mu,
                                             be::BEParams::Family::B, f, grid));
    out.push_back(be::be_factorization_check(p.nu, p.mu,
                                             be::BEParams::Family::E, f, grid));
  }
  return out;
}

// ------------------------------------------------------- bessel-reduction

std::vector<VerificationReport> suite_bessel_reduction(const Options& opts) {
  std::vector<VerificationReport> out;
  const auto f = std_bump();
  QuadratureConfig cfg;
  const auto alphas = pick(opts.alpha, {0.25, 0.5, 0.75});
  for (double alpha : alphas) {
    VerificationReport rep;
    rep.check_name = "ib_nu0_equals_liouville_a" + std::to_string(alpha);
    rep.tolerance = 1e-7;
    for (double x : {0.5, 1.0, 1.5, 2.0, 2.5}) {
      const double lhs = bessel::ib(0.0, alpha, f, x, cfg);
      const double rhs = classical::liouville_right(f, 2.0 * alpha, x, cfg);
      report::accumulate_error(rep, lhs, rhs, 1e-12);
    }
    report::finalize(rep);
    out.push_back(rep);
  }
  return out;
}

// ----------------------------------------------------------- bessel-power

std::vector<VerificationReport> suite_bessel_power(const Options&) {
  std::vector<VerificationReport> out;
  struct Triple { double nu, alpha, m, radius; };
  const std::vector<Triple> triples = {
      {1.0, 0.25, -2.0, 1e3}, {0.0, 0.25, -1.5, 3e4}, {2.0, 0.2, -2.5, 3e4}};
  for (const auto& t : triples) {
    VerificationReport rep;
    rep.check_name = "ib_power_nu" + std::to_string(t.nu) + "_a" +
                     std::to_string(t.alpha) + "_m" + std::to_string(t.m);
    rep.tolerance = 1e-4;
    const double want = bessel::ib_power(t.nu, t.alpha, t.m);
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-9;
    cfg.max_subdivisions = 4000;
    const auto f = funcmodel::truncate_smooth(funcmodel::make_monomial(t.m),
                                              t.radius);
    const double got = bessel::ib(t.nu, t.alpha, f, 1.0, cfg);
    report::accumulate_error(rep, got, want);
    report::finalize(rep);
    out.push_back(rep);
  }
  return out;
}

// ------------------------------------------------------- bessel-semigroup

std::vector<VerificationReport> suite_bessel_semigroup(const Options& opts) {
  std::vector<VerificationReport> out;
  const auto f = std_bump();
  const auto grid = interior_grid(5);
  const auto nus = pick(opts.nu, {1.0});
  for (double nu : nus)
    out.push_back(bessel::ib_semigroup_check(nu, 0.3, 0.4, f, grid));
  out.push_back(bessel::ib_semigroup_check(0.0, 0.25, 0.5, f, grid));
  {
    // coefficient product on powers inside the validity region
    VerificationReport rep;
    rep.check_name = "ib_power_semigroup_coefficients";
    rep.tolerance = 1e-12;
    const double nu = 0.0, a = 0.1, b = 0.1, m = -1.5;
    const double cb = bessel::ib_power(nu, b, m);
    const double ca = bessel::ib_power(nu, a, 2.0 * b + m);
    const double cab = bessel::ib_power(nu, a + b, m);
    report::accumulate_error(rep, ca * cb, cab);
    report::finalize(rep);
    out.push_back(rep);
  }
  return out;
}

// ------------------------------------------------------- bessel-inversion

std::vector<VerificationReport> suite_bessel_inversion(const Options& opts) {
  std::vector<VerificationReport> out;
  const auto f = std_bump();
  const auto nus = pick(opts.nu, {0.0, 1.0, 3.0});
  for (double nu : nus)
    out.push_back(bessel::ib_inversion_check(nu, f, {1.3, 2.0, 2.7}, 1e-5));
  for (double nu : nus) {
    VerificationReport rep;
    rep.check_name = "db_after_ib_identity_nu" + std::to_string(nu);
    rep.tolerance = 1e-4;
    QuadratureConfig cfg;
    const double alpha = 0.6;
    auto image = bessel::ib_image_handle(nu, alpha, f, cfg);
    for (double x : {1.5, 2.0, 2.5}) {
      const double got = bessel::db(nu, alpha, image, x, cfg);
      report::accumulate_error(rep, got, f.eval(x), 1e-3);
    }
    report::finalize(rep);
    out.push_back(rep);
  }
  return out;
}

// ---------------------------------------------------------- bessel-mellin

std::vector<VerificationReport> suite_bessel_mellin(const Options&) {
  std::vector<VerificationReport> out;
  const auto f = std_bump();
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-9;
  cfg.abs_tol = 1e-11;
  cfg.max_subdivisions = 4000;
  struct Pair { double nu, alpha; };
  for (const Pair& p : {Pair{1.0, 0.3}, Pair{2.0, 0.4}}) {
    VerificationReport rep;
    rep.check_name = "ib_mellin_factorization_nu" + std::to_string(p.nu) +
                     "_a" + std::to_string(p.alpha);
    rep.tolerance = 1e-5;
    auto image = bessel::ib_image_handle(p.nu, p.alpha, f, cfg);
    for (int i = 0; i < 10; ++i) {
      const double s = std::max(1.0, p.nu) + 0.1 + 0.2 * i;
      // the image tends to a constant at 0, so x^(s-1) drives the
      // outer integrand; remove that power explicitly
      QuadratureConfig outer = cfg;
      outer.policy = quadrature::SingularityPolicy::left(s - 1.0);
      outer.max_subdivisions = 4000;
      const complex lhs = mellin::mellin_numeric(image, complex(s, 0.0), outer);
      const complex rhs =
          bessel::ib_mellin_multiplier(p.nu, p.alpha, complex(s, 0.0)) *
          mellin::mellin_numeric(f, complex(2.0 * p.alpha + s, 0.0), cfg);
      acc_complex(rep, lhs, rhs);
    }
    report::finalize(rep);
    out.push_back(rep);
  }
  return out;
}

// ------------------------------------------------------------- dn-identity

std::vector<VerificationReport> suite_dn_identity(const Options&) {
  std::vector<VerificationReport> out;
  const auto f = std_bump();
  QuadratureConfig cfg;
  {
    VerificationReport rep;
    rep.check_name = "dn_halves_identity";
    rep.tolerance = 1e-5;
    const classical::DNSignature sig({0.5, -0.5});
    for (double x : interior_grid(5)) {
      const double got = classical::dn_apply(sig, f, x, 0.0, cfg);
      report::accumulate_error(rep, got, f.eval(x));
    }
    report::finalize(rep);
    out.push_back(rep);
  }
  {
    VerificationReport rep;
    rep.check_name = "dn_two_integrals_equal_I1";
    rep.tolerance = 1e-7;
    const classical::DNSignature sig({-0.5, -0.5});
    for (double x : interior_grid(5)) {
      const double got = classical::dn_apply(sig, f, x, 0.0, cfg);
      const double want = classical::rl_integral_left(f, 0.0, 1.0, x, cfg);
      report::accumulate_error(rep, got, want);
    }
    report::finalize(rep);
    out.push_back(rep);
  }
  {
    VerificationReport rep;
    rep.check_name = "dn_zero_signature_identity";
    rep.tolerance = 1e-14;
    const classical::DNSignature sig({0.0, 0.0});
    const double x = 2.0;
    report::accumulate_error(rep, classical::dn_apply(sig, f, x, 0.0, cfg),
                             f.eval(x));
    report::finalize(rep);
    out.push_back(rep);
  }
  return out;
}

}  // namespace

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> table = {
      {"rl-basic", suite_rl_basic},
      {"be-multipliers", suite_be_multipliers},
      {"be-norms", suite_be_norms},
      {"be-unitary", suite_be_unitary},
      {"be-factorization", suite_be_factorization},
      {"be-inverse-pairs", suite_be_inverse_pairs},
      {"bessel-reduction", suite_bessel_reduction},
      {"bessel-power", suite_bessel_power},
      {"bessel-semigroup", suite_bessel_semigroup},
      {"bessel-inversion", suite_bessel_inversion},
      {"bessel-mellin", suite_bessel_mellin},
      {"dn-identity", suite_dn_identity},
  };
  return table;
}

std::vector<VerificationReport> run_suite(const std::string& name,
                                          const Options& opts) {
  const auto& table = suites();
  auto it = table.find(name);
  if (it == table.end())
    throw ConfigError("unknown verification suite '" + name + "'");
  return it->second(opts);
}

}  // namespace fracops::verify
