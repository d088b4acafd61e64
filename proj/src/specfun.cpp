#include "fracops/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fracops::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640561764;

// Lanczos approximation, g = 607/128, 15 coefficients (Godfrey).
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczosCoef[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

bool is_integer(double x, double tol = 1e-12) {
  return std::abs(x - std::round(x)) <= tol;
}

// Lanczos core; requires Re z >= 0.5.
complex log_gamma_core(complex z) {
  complex ser(kLanczosCoef[0], 0.0);
  for (int j = 1; j < 15; ++j) ser += kLanczosCoef[j] / (z + double(j - 1));
  const complex t = z + (kLanczosG - 0.5);
  return (z - 0.5) * std::log(t) - t + kLogSqrt2Pi + std::log(ser);
}

// log(sin(pi z)) with the real part accurate for any |Im z|; the
// imaginary part is reported modulo 2*pi.
complex log_sin_pi(complex z) {
  const double y = z.imag();
  if (y > 10.0) {
    // sin(pi z) ~ -exp(-i pi z) / (2i)
    return complex(0.0, -kPi) * z - std::log(complex(0.0, -2.0));
  }
  if (y < -10.0) {
    return complex(0.0, kPi) * z - std::log(complex(0.0, 2.0));
  }
  return std::log(std::sin(kPi * z));
}

}  // namespace

bool is_nonpositive_integer(double x, double tol) {
  return x <= tol && std::abs(x - std::round(x)) <= tol;
}

complex log_gamma(complex z) {
  if (z.imag() == 0.0 && is_nonpositive_integer(z.real()))
    throw PoleError("log_gamma: pole at non-positive integer " + std::to_string(z.real()));
  if (z.real() >= 0.5) return log_gamma_core(z);
  // Reflection: log Gamma(z) = log(pi) - log sin(pi z) - log Gamma(1-z).
  return std::log(kPi) - log_sin_pi(z) - log_gamma_core(1.0 - z);
}

complex gamma(complex z) { return std::exp(log_gamma(z)); }

double log_abs_gamma(double x, int* sign) {
  if (is_nonpositive_integer(x))
    throw PoleError("gamma: pole at non-positive integer " + std::to_string(x));
  if (x >= 0.5) {
    if (sign) *sign = 1;
    return log_gamma_core(complex(x, 0.0)).real();
  }
  // Gamma(x) = pi / (sin(pi x) Gamma(1-x))
  const double s = std::sin(kPi * x);
  if (sign) *sign = (s > 0.0) ? 1 : -1;
  return std::log(kPi / std::abs(s)) - log_gamma_core(complex(1.0 - x, 0.0)).real();
}

double gamma(double x) {
  int sign = 1;
  const double lg = log_abs_gamma(x, &sign);
  if (lg > 709.0) throw NonFinite("gamma: overflow at x = " + std::to_string(x));
  return sign * std::exp(lg);
}

double digamma(double x) {
  if (is_nonpositive_integer(x))
    throw PoleError("digamma: pole at non-positive integer " + std::to_string(x));
  double result = 0.0;
  if (x < 0.5) {
    // psi(x) = psi(1-x) - pi cot(pi x)
    result -= kPi / std::tan(kPi * x);
    x = 1.0 - x;
  }
  while (x < 8.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  // Asymptotic series in 1/x^2.
  const double inv = 1.0 / x, inv2 = inv * inv;
  result += std::log(x) - 0.5 * inv;
  static const double kBern[] = {1.0 / 12.0,  -1.0 / 120.0, 1.0 / 252.0,
                                 -1.0 / 240.0, 1.0 / 132.0,  -691.0 / 32760.0,
                                 1.0 / 12.0};
  double p = inv2;
  for (double b : kBern) {
    result -= b * p;
    p *= inv2;
  }
  return result;
}

complex gamma_ratio(const GammaRatioSpec& spec) {
  std::vector<complex> num = spec.numerator_args;
  std::vector<complex> den = spec.denominator_args;

  // Exact-equality cancellation of pole arguments.
  for (auto it = num.begin(); it != num.end();) {
    if (it->imag() == 0.0 && is_nonpositive_integer(it->real())) {
      auto match = std::find(den.begin(), den.end(), *it);
      if (match == den.end())
        throw PoleError("gamma_ratio: numerator pole at " + std::to_string(it->real()));
      den.erase(match);
      it = num.erase(it);
    } else {
      ++it;
    }
  }
  // Remaining denominator poles send the ratio to zero.
  for (const auto& d : den) {
    if (d.imag() == 0.0 && is_nonpositive_integer(d.real())) return complex(0.0, 0.0);
  }
  complex acc(0.0, 0.0);
  for (const auto& n : num) acc += log_gamma(n);
  for (const auto& d : den) acc -= log_gamma(d);
  return std::exp(acc);
}

double gamma_ratio(const std::vector<double>& num, const std::vector<double>& den) {
  GammaRatioSpec spec;
  for (double x : num) spec.numerator_args.emplace_back(x, 0.0);
  for (double x : den) spec.denominator_args.emplace_back(x, 0.0);
  const complex r = gamma_ratio(spec);
  return r.real();
}

namespace {

constexpr int kMaxSeriesTerms = 6000;

// Plain power series; converges for |z| < 1 (slow near 1).
double hyp2f1_series(double a, double b, double c, double z) {
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum) && k > 4) return sum;
  }
  throw NoConvergence("gauss_2f1: series did not converge");
}

// Terminating series when a (or b) is a non-positive integer.
double hyp2f1_poly(double a, double b, double c, double z) {
  if (!is_nonpositive_integer(a)) std::swap(a, b);
  const int n = int(std::round(-a));
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < n; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    sum += term;
  }
  return sum;
}

double hyp2f1_impl(double a, double b, double c, double z, double omz,
                   int depth);

// A&S 15.3.10 / 15.3.11: c = a + b + m with integer m >= 0, 0.5 < z < 1.
// w = 1 - z is passed directly so callers with z very close to 1 keep
// full precision in the logarithm.
double hyp2f1_log_case(double a, double b, int m, double w) {
  const double lw = std::log(w);
  double sum = 0.0;

  if (m == 0) {
    // Gamma(a+b)/(Gamma(a)Gamma(b)) sum ((a)_n (b)_n / (n!)^2) w^n
    //   * [2 psi(n+1) - psi(a+n) - psi(b+n) - ln w]
    const double coef = gamma_ratio({a + b}, {a, b});
    double pw = 1.0;
    double poch = 1.0;  // (a)_n (b)_n / (n!)^2
    for (int n = 0; n < kMaxSeriesTerms; ++n) {
      const double bracket =
          2.0 * digamma(n + 1.0) - digamma(a + n) - digamma(b + n) - lw;
      const double term = poch * pw * bracket;
      sum += term;
      if (std::abs(term) <= 1e-17 * std::abs(sum) && n > 4) break;
      poch *= (a + n) * (b + n) / ((n + 1.0) * (n + 1.0));
      pw *= w;
      if (n == kMaxSeriesTerms - 1)
        throw NoConvergence("gauss_2f1: logarithmic series did not converge");
    }
    return coef * sum;
  }

  // Finite part.
  double finite = 0.0;
  {
    double poch = 1.0;  // (a)_n (b)_n / (n! (1-m)_n)
    double pw = 1.0;
    for (int n = 0; n <= m - 1; ++n) {
      finite += poch * pw;
      if (n < m - 1) {
        poch *= (a + n) * (b + n) / ((n + 1.0) * (1.0 - m + n));
        pw *= w;
      }
    }
    finite *= gamma_ratio({double(m), a + b + m}, {a + m, b + m});
  }
  // Infinite part.
  {
    double poch = 1.0;  // (a+m)_n (b+m)_n / (n! (n+m)!)
    for (int k = 1; k <= m; ++k) poch /= double(k);
    double pw = std::pow(w, m);
    for (int n = 0; n < kMaxSeriesTerms; ++n) {
      const double bracket = lw - digamma(n + 1.0) - digamma(n + m + 1.0) +
                             digamma(a + m + n) + digamma(b + m + n);
      const double term = poch * pw * bracket;
      sum += term;
      if (std::abs(term) <= 1e-17 * (std::abs(sum) + std::abs(finite)) && n > 4) break;
      poch *= (a + m + n) * (b + m + n) / ((n + 1.0) * (n + m + 1.0));
      pw *= w;
      if (n == kMaxSeriesTerms - 1)
        throw NoConvergence("gauss_2f1: logarithmic series did not converge");
    }
    const int sign = (m % 2 == 0) ? 1 : -1;
    sum *= -sign * gamma_ratio({a + b + m}, {a, b});
  }
  return finite + sum;
}

// omz = 1 - z carried separately so values of z near 1 keep full
// precision through the 1-z transformations.
double hyp2f1_impl(double a, double b, double c, double z, double omz,
                   int depth) {
  if (depth > 4) throw NoConvergence("gauss_2f1: transformation recursion too deep");
  if (is_nonpositive_integer(c)) {
    const bool terminates =
        (is_nonpositive_integer(a) && a > c - 0.5) || (is_nonpositive_integer(b) && b > c - 0.5);
    if (!terminates)
      throw ParameterPole("gauss_2f1: c is a non-positive integer");
  }
  if (z == 0.0) return 1.0;
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b))
    return hyp2f1_poly(a, b, c, z);
  if (omz <= 0.0) throw DomainError("gauss_2f1: z must be < 1");
  if (z < 0.0) {
    // Pfaff map onto (0,1); 1 - z/(z-1) = 1/(1-z) exactly.
    const double zz = z / (z - 1.0);
    const double omzz = 1.0 / omz;
    if (!is_nonpositive_integer(c - b))
      return std::pow(omz, -a) * hyp2f1_impl(a, c - b, c, zz, omzz, depth + 1);
    return std::pow(omz, -b) * hyp2f1_impl(c - a, b, c, zz, omzz, depth + 1);
  }
  if (z <= 0.5) return hyp2f1_series(a, b, c, z);

  const double d = c - a - b;
  if (is_integer(d, 1e-8)) {
    const int m = int(std::round(d));
    if (m < 0) {
      // Euler map flips the sign of c-a-b.
      return std::pow(omz, d) * hyp2f1_impl(c - a, c - b, c, z, omz, depth + 1);
    }
    return hyp2f1_log_case(a, b, m, omz);
  }
  // Linear transformation z -> 1-z.
  const double t1 =
      gamma_ratio({c, d}, {c - a, c - b}) * hyp2f1_series(a, b, 1.0 - d, omz);
  const double t2 = gamma_ratio({c, -d}, {a, b}) * std::pow(omz, d) *
                    hyp2f1_series(c - a, c - b, 1.0 + d, omz);
  return t1 + t2;
}

}  // namespace

double gauss_2f1(double a, double b, double c, double z) {
  return hyp2f1_impl(a, b, c, z, 1.0 - z, 0);
}

double gauss_2f1_cc(double a, double b, double c, double one_minus_z) {
  return hyp2f1_impl(a, b, c, 1.0 - one_minus_z, one_minus_z, 0);
}

double legendre_p(double nu, double mu, double z, Regime regime) {
  if (regime == Regime::OffCut) {
    if (z < 1.0) throw DomainError("legendre_p: OffCut requires z >= 1");
  } else {
    if (z <= -1.0 || z >= 1.0) throw DomainError("legendre_p: OnCut requires -1 < z < 1");
  }
  if (is_nonpositive_integer(1.0 - mu) && !is_nonpositive_integer(-nu))
    throw ParameterPole("legendre_p: 1-mu is a non-positive integer");
  if (z == 1.0) {
    if (mu == 0.0) return 1.0;
    if (mu < 0.0) return 0.0;
    throw DomainError("legendre_p: divergent limit at z=1 for mu > 0");
  }
  const double w = 0.5 * (1.0 - z);
  double pre = 1.0;
  if (mu != 0.0) {
    const double ratio =
        (regime == Regime::OffCut) ? (z + 1.0) / (z - 1.0) : (1.0 + z) / (1.0 - z);
    pre = std::pow(ratio, 0.5 * mu);
  }
  return pre / gamma(1.0 - mu) * gauss_2f1(-nu, nu + 1.0, 1.0 - mu, w);
}

double legendre_p(const LegendreArg& arg) {
  return legendre_p(arg.degree, arg.order, arg.z, arg.regime);
}

double legendre_p(double nu, double z, Regime regime) {
  return legendre_p(nu, 0.0, z, regime);
}

double legendre_p_deriv(double nu, double z, Regime regime, int k) {
  if (k == 0) return legendre_p(nu, z, regime);
  if (regime == Regime::OffCut) {
    if (z < 1.0) throw DomainError("legendre_p_deriv: OffCut requires z >= 1");
  } else if (z <= -1.0 || z >= 1.0) {
    throw DomainError("legendre_p_deriv: OnCut requires -1 < z < 1");
  }
  // d^k/dz^k P_nu(z) = (-1/2)^k (-nu)_k (nu+1)_k / k! * 2F1(k-nu, nu+1+k; 1+k; (1-z)/2)
  double coef = 1.0;
  for (int j = 0; j < k; ++j)
    coef *= -0.5 * (-nu + j) * (nu + 1.0 + j) / (1.0 + j);
  if (coef == 0.0) return 0.0;
  return coef * gauss_2f1(k - nu, nu + 1.0 + k, 1.0 + k, 0.5 * (1.0 - z));
}

namespace {

// Q_nu(z) for z > 1 via the hypergeometric representation; needs nu > -1.
double legendre_q_offcut(double nu, double z, double* dq) {
  const double coef =
      std::sqrt(kPi) * std::exp(log_abs_gamma(nu + 1.0) - log_abs_gamma(nu + 1.5)) /
      std::pow(2.0, nu + 1.0);
  const double u = 1.0 / (z * z);
  const double a = 0.5 * nu + 1.0, b = 0.5 * nu + 0.5, c = nu + 1.5;
  const double f = gauss_2f1(a, b, c, u);
  const double q = coef * std::pow(z, -nu - 1.0) * f;
  if (dq) {
    const double fp = (a * b / c) * gauss_2f1(a + 1.0, b + 1.0, c + 1.0, u);
    *dq = -coef * std::pow(z, -nu - 2.0) * ((nu + 1.0) * f + 2.0 * u * fp);
  }
  return q;
}

bool integer_degree(double nu) { return std::abs(nu - std::round(nu)) <= 1e-9; }

// Integer-degree Q via forward recurrence; works in both regimes.
double legendre_q_integer(int n, double z, Regime regime, double* dq) {
  const double q0 = (regime == Regime::OffCut)
                        ? 0.5 * std::log((z + 1.0) / (z - 1.0))
                        : std::atanh(z);
  if (n == 0) {
    if (dq) *dq = (regime == Regime::OffCut) ? -1.0 / (z * z - 1.0) : 1.0 / (1.0 - z * z);
    return q0;
  }
  double qm = q0, q = z * q0 - 1.0;
  for (int k = 1; k < n; ++k) {
    const double qn = ((2.0 * k + 1.0) * z * q - k * qm) / (k + 1.0);
    qm = q;
    q = qn;
  }
  if (dq) *dq = n * (z * q - qm) / (z * z - 1.0);
  return q;
}

}  // namespace

double legendre_q(double nu, double z, Regime regime) {
  if (integer_degree(nu) && nu < -0.5)
    throw ParameterPole("legendre_q: undefined at negative integer degree");
  if (regime == Regime::OffCut) {
    if (z <= 1.0) throw DomainError("legendre_q: OffCut requires z > 1");
    if (integer_degree(nu)) return legendre_q_integer(int(std::round(nu)), z, regime, nullptr);
    if (nu <= -1.0) throw ParameterPole("legendre_q: off-cut representation needs nu > -1");
    return legendre_q_offcut(nu, z, nullptr);
  }
  if (z <= -1.0 || z >= 1.0) throw DomainError("legendre_q: OnCut requires -1 < z < 1");
  if (integer_degree(nu)) return legendre_q_integer(int(std::round(nu)), z, regime, nullptr);
  // Connection formula through the Ferrers P at +-z.
  const double s = std::sin(kPi * nu), c = std::cos(kPi * nu);
  return 0.5 * kPi / s * (c * legendre_p(nu, z, regime) - legendre_p(nu, -z, regime));
}

double legendre_q_deriv(double nu, double z, Regime regime) {
  if (regime == Regime::OffCut) {
    if (z <= 1.0) throw DomainError("legendre_q_deriv: OffCut requires z > 1");
    double dq = 0.0;
    if (integer_degree(nu)) {
      legendre_q_integer(int(std::round(nu)), z, regime, &dq);
    } else {
      if (nu <= -1.0) throw ParameterPole("legendre_q_deriv: needs nu > -1 off the cut");
      legendre_q_offcut(nu, z, &dq);
    }
    return dq;
  }
  if (z <= -1.0 || z >= 1.0) throw DomainError("legendre_q_deriv: OnCut requires -1 < z < 1");
  if (integer_degree(nu)) {
    double dq = 0.0;
    legendre_q_integer(int(std::round(nu)), z, regime, &dq);
    return dq;
  }
  const double s = std::sin(kPi * nu), c = std::cos(kPi * nu);
  return 0.5 * kPi / s *
         (c * legendre_p_deriv(nu, z, regime) + legendre_p_deriv(nu, -z, regime));
}

double legendre_q1(double nu, double z, Regime regime) {
  const double dq = legendre_q_deriv(nu, z, regime);
  if (regime == Regime::OffCut) return std::sqrt(z * z - 1.0) * dq;
  return -std::sqrt(1.0 - z * z) * dq;
}

}  // namespace fracops::specfun
