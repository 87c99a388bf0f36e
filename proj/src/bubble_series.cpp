#include "rotameniscus/bubble_series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>

#include "rotameniscus/errors.hpp"

namespace rotameniscus {

namespace {

// beta_n = b_n sqrt(1 - A^2) obeys the Miller recursion with B / (1 - A^2) = r / 8,
// which is a polynomial in r: no cancellation and no singularity at the wall.
std::vector<double> normalized_b(double r, std::size_t n_max) {
  const double A = r;
  const double B = (r - r * r * r) / 8.0;
  const double Bt = r / 8.0;
  std::vector<double> beta(n_max + 1, 0.0);
  beta[0] = 1.0;
  if (n_max >= 1) beta[1] = A * Bt;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const double dn = static_cast<double>(n);
    beta[n] = ((2.0 * dn - 1.0) * A * Bt * beta[n - 1] + (dn - 1.0) * Bt * B * beta[n - 2]) / dn;
  }
  return beta;
}

void check_radius(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("radius must lie in [0, 1]");
  if (r == 1.0) throw SingularPointError("Taylor coefficients of h' are singular at r = 1");
}

}  // namespace

std::vector<double> miller_b_coeffs(double r, std::size_t n_max) {
  check_radius(r);
  auto b = normalized_b(r, n_max);
  const double root = std::sqrt((1.0 - r) * (1.0 + r));
  for (auto& v : b) v /= root;
  return b;
}

std::vector<double> c_coeffs(double r, std::size_t n_max) {
  check_radius(r);
  const auto beta = normalized_b(r, n_max);
  const double B = (r - r * r * r) / 8.0;
  const double root = std::sqrt((1.0 - r) * (1.0 + r));
  std::vector<double> c(n_max + 1);
  c[0] = r * beta[0] / root;
  for (std::size_t n = 1; n <= n_max; ++n) c[n] = (r * beta[n] + B * beta[n - 1]) / root;
  return c;
}

std::vector<double> bubble_scaled_coefficients(std::size_t n_max, const quadrature::Options& opt) {
  const std::size_t dim = n_max + 1;
  std::vector<double> beta(dim);
  // r = 1 - t^2, dr = 2t dt, sqrt(1 - r^2) = t sqrt(2 - t^2). With
  // beta^_n = 4^n beta_n the integrand of 4^n C_n is
  //   4 (A beta^_n + 4 B beta^_{n-1}) / sqrt(2 - t^2).
  auto integrand = [&](double t, std::vector<double>& out) {
    const double t2 = t * t;
    const double r = 1.0 - t2;
    const double A = r;
    const double B = r * t2 * (2.0 - t2) / 8.0;
    const double Bt4 = r / 2.0;
    const double BtB16 = 2.0 * r * B;
    const double w = 4.0 / std::sqrt(2.0 - t2);
    beta[0] = 1.0;
    out[0] = w * A;
    if (dim == 1) return;
    beta[1] = A * Bt4;
    out[1] = w * (A * beta[1] + 4.0 * B * beta[0]);
    for (std::size_t n = 2; n < dim; ++n) {
      const double dn = static_cast<double>(n);
      beta[n] = ((2.0 * dn - 1.0) * A * Bt4 * beta[n - 1] + (dn - 1.0) * BtB16 * beta[n - 2]) / dn;
      out[n] = w * (A * beta[n] + 4.0 * B * beta[n - 1]);
    }
  };
  return quadrature::integrate_vector(integrand, dim, 0.0, 1.0, opt).values;
}

std::vector<double> bubble_scaled_coefficients(std::size_t n_max) {
  static std::mutex mutex;
  static std::vector<double> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (cache.size() < n_max + 1) {
    const std::size_t n = std::max<std::size_t>({n_max, 2 * cache.size(), 64});
    quadrature::Options opt;
    opt.rel_tol = 1e-12;
    opt.abs_tol = 0.0;
    opt.max_intervals = 20000;
    cache = bubble_scaled_coefficients(n, opt);
  }
  return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(n_max + 1)};
}

PowerSeries bubble_power_series(std::size_t k_max) {
  auto c = bubble_scaled_coefficients(k_max);
  double scale = 1.0;
  for (auto& v : c) {
    v *= scale;
    scale /= 4.0;
  }
  return {Geometry::bubble, kBubbleLambdaC, std::move(c)};
}

namespace {

SeriesSum sum_terms(double lambda, std::size_t max_terms, double tolerance, bool use_tolerance) {
  if (!(lambda >= 0.0)) throw DomainError("rotational Bond number must be non-negative");
  if (max_terms == 0) throw DomainError("at least one series term is required");
  SeriesSum out;
  out.divergent = lambda >= kBubbleLambdaC;
  const double x = lambda / kBubbleLambdaC;
  const double tail_factor =
      out.divergent ? std::numeric_limits<double>::infinity() : 1.0 / (1.0 - x);
  std::vector<double> c;
  double sum = 0.0;
  double power = 1.0;
  std::size_t n = 0;
  double next = 0.0;
  while (n < max_terms) {
    if (c.size() < n + 2) {
      const std::size_t want = use_tolerance ? std::min(std::max<std::size_t>(64, 2 * c.size()), max_terms)
                                             : max_terms;
      c = bubble_scaled_coefficients(want);
    }
    sum += c[n] * power;
    ++n;
    power *= x;
    next = c[n] * power;
    if (use_tolerance && !out.divergent && next * tail_factor < tolerance) break;
  }
  out.value = sum;
  out.terms = n;
  out.tail_estimate = out.divergent ? std::numeric_limits<double>::infinity() : next * tail_factor;
  out.converged = !out.divergent && out.tail_estimate < tolerance;
  return out;
}

}  // namespace

SeriesSum bubble_H_series(double lambda, std::size_t n_terms) {
  return sum_terms(lambda, n_terms, SeriesControl{}.tolerance, false);
}

SeriesSum bubble_H_series(double lambda, const SeriesControl& control) {
  return sum_terms(lambda, control.max_terms, control.tolerance, true);
}

namespace {

// Summand of the explicit sum as a function of continuous m = x, with the
// 1 / (sqrt(pi) 8^p) prefactor folded in:
//   f(x) = [Gamma(x + 1/2) / Gamma(x + 2)] prod_{j=1..p} (2x + 2 - j) / (8 (x + 1 + j)) / sqrt(pi).
// Each product factor tends to 1/4, so f ~ 4^-p x^(-3/2) / sqrt(pi).
struct Summand {
  std::size_t p;

  double product(double x) const {
    double prod = 1.0;
    for (std::size_t j = 1; j <= p; ++j) {
      const double dj = static_cast<double>(j);
      prod *= (2.0 * x + 2.0 - dj) / (8.0 * (x + 1.0 + dj));
    }
    return prod / std::sqrt(std::numbers::pi);
  }

  double value(double x) const { return boost::math::tgamma_delta_ratio(x + 0.5, 1.5) * product(x); }

  /// x^(3/2) f(x), bounded for large x.
  double scaled(double x) const {
    return boost::math::tgamma_delta_ratio(x + 0.5, 1.5) * std::pow(x, 1.5) * product(x);
  }

  /// Logarithmic derivatives of order 1..3.
  std::array<double, 3> log_derivatives(double x) const {
    using boost::math::polygamma;
    std::array<double, 3> L{boost::math::digamma(x + 0.5) - boost::math::digamma(x + 2.0),
                            polygamma(1, x + 0.5) - polygamma(1, x + 2.0),
                            polygamma(2, x + 0.5) - polygamma(2, x + 2.0)};
    for (std::size_t j = 1; j <= p; ++j) {
      const double a = 1.0 / (2.0 * x + 2.0 - static_cast<double>(j));
      const double b = 1.0 / (x + 1.0 + static_cast<double>(j));
      L[0] += 2.0 * a - b;
      L[1] += -4.0 * a * a + b * b;
      L[2] += 16.0 * a * a * a - 2.0 * b * b * b;
    }
    return L;
  }

  /// Term ratio f(m + 1) / f(m) at integer m.
  double ratio(double m) const {
    const double dp = static_cast<double>(p);
    return (m + 0.5) * (2.0 * m + 3.0) * (2.0 * m + 2.0) /
           ((2.0 * m + 3.0 - dp) * (2.0 * m + 2.0 - dp) * (m + 2.0 + dp));
  }
};

}  // namespace

ExplicitCoefficient explicit_Cp_detail(std::size_t p, double tail_tolerance) {
  constexpr std::size_t kMaxTerms = 1000000;
  const Summand f{p};
  const std::size_t m0 = p / 2;  // smallest m with 2m + 1 >= p
  quadrature::Options opt;
  opt.rel_tol = 1e-14;
  opt.abs_tol = 0.0;

  double direct = 0.0;
  double term = f.value(static_cast<double>(m0));
  std::size_t m = m0;
  std::size_t offset = 200;
  while (true) {
    for (; m < m0 + offset; ++m) {
      direct += term;
      term *= f.ratio(static_cast<double>(m));
    }
    // Euler-Maclaurin: sum_{k >= M} f(k) = int_M^inf f + f(M)/2 - f'(M)/12 + f'''(M)/720 - ...
    // The integral is taken in s with x = M / s^2.
    const double M = static_cast<double>(m);
    const double fm = f.value(M);
    const auto L = f.log_derivatives(M);
    const double d1 = fm * L[0];
    const double d3 = fm * (L[0] * L[0] * L[0] + 3.0 * L[0] * L[1] + L[2]);
    auto integrand = [&](double s) { return 2.0 / std::sqrt(M) * f.scaled(M / (s * s)); };
    const double integral = quadrature::integrate(integrand, 0.0, 1.0, opt).value;
    const double value = direct + integral + 0.5 * fm - d1 / 12.0;
    const double bound = std::abs(d3) / 720.0;
    if (bound <= tail_tolerance * std::abs(value)) return {value, bound, m - m0};
    offset *= 2;
    if (offset > kMaxTerms) {
      throw ConvergenceError("explicit C_p sum: tail bound not met within 10^6 terms");
    }
  }
}

double explicit_Cp(std::size_t p, double tail_tolerance) {
  return explicit_Cp_detail(p, tail_tolerance).value;
}

}  // namespace rotameniscus
