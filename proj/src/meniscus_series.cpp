#include "rotameniscus/meniscus_series.hpp"

#include <cmath>
#include <limits>

#include "rotameniscus/errors.hpp"

namespace rotameniscus {

namespace {

// b_{m+2} / b_m for odd m:
//   (1/64) (m+2)(m+1)((m+1)/2) / [((3m+7)/2)((3m+5)/2)((3m+3)/2)]
// = (m+2)(m+1)^2 / [16 (3m+7)(3m+5)(3m+3)].
template <class Real>
Real b_step(std::size_t m) {
  const Real mm(static_cast<double>(m));
  return (mm + 2) * (mm + 1) * (mm + 1) / (16 * (3 * mm + 7) * (3 * mm + 5) * (3 * mm + 3));
}

// a_{m+2} / a_m = m / (m + 1) for odd m.
template <class Real>
Real a_step(std::size_t m) {
  const Real mm(static_cast<double>(m));
  return mm / (mm + 1);
}

template <class Real>
std::vector<Real> coefficients(std::size_t k_max) {
  std::vector<Real> h(k_max + 1, Real(0));
  if (k_max < 1) return h;
  Real c = Real(1) / 32;
  h[1] = c;
  for (std::size_t m = 1; m + 2 <= k_max; m += 2) {
    c *= a_step<Real>(m) * b_step<Real>(m);
    h[m + 2] = c;
  }
  return h;
}

}  // namespace

std::vector<double> a_coeffs(std::size_t n_max) {
  std::vector<double> a(n_max + 1, 0.0);
  if (n_max >= 1) a[1] = 1.0;
  for (std::size_t n = 3; n <= n_max; n += 2) {
    a[n] = a[n - 2] * static_cast<double>(n - 2) / static_cast<double>(n - 1);
  }
  return a;
}

std::vector<double> b_coeffs(std::size_t n_max) {
  std::vector<double> b(n_max + 1, 0.0);
  if (n_max >= 1) b[1] = 1.0 / 32.0;
  for (std::size_t n = 3; n <= n_max; n += 2) b[n] = b[n - 2] * b_step<double>(n - 2);
  return b;
}

double ratio_diagnostic(std::size_t n) {
  if (n < 1) throw DomainError("ratio_diagnostic needs n >= 1");
  const std::size_t m = 2 * n - 1;
  return a_step<double>(m) * b_step<double>(m);
}

std::vector<double> meniscus_scaled_coefficients(std::size_t k_max) {
  std::vector<double> s(k_max + 1, 0.0);
  if (k_max < 1) return s;
  const double lc2 = 432.0;
  double c = kMeniscusLambdaC / 32.0;
  s[1] = c;
  for (std::size_t m = 1; m + 2 <= k_max; m += 2) {
    c *= a_step<double>(m) * b_step<double>(m) * lc2;
    s[m + 2] = c;
  }
  return s;
}

std::vector<boost::multiprecision::cpp_rational> meniscus_coefficients_exact(std::size_t k_max) {
  using boost::multiprecision::cpp_rational;
  std::vector<cpp_rational> h(k_max + 1, cpp_rational(0));
  if (k_max < 1) return h;
  cpp_rational c(1, 32);
  h[1] = c;
  for (std::size_t m = 1; m + 2 <= k_max; m += 2) {
    const long long mm = static_cast<long long>(m);
    c *= cpp_rational(mm, mm + 1);
    c *= cpp_rational((mm + 2) * (mm + 1) * (mm + 1), 16 * (3 * mm + 7) * (3 * mm + 5) * (3 * mm + 3));
    h[m + 2] = c;
  }
  return h;
}

std::vector<ExtendedReal> meniscus_coefficients_extended(std::size_t k_max) {
  return coefficients<ExtendedReal>(k_max);
}

PowerSeries meniscus_power_series(std::size_t k_max) {
  return {Geometry::meniscus, kMeniscusLambdaC, coefficients<double>(k_max)};
}

namespace {

SeriesSum sum_terms(double lambda, std::size_t max_terms, double tolerance, bool use_tolerance) {
  if (!(lambda >= 0.0)) throw DomainError("rotational Bond number must be non-negative");
  SeriesSum out;
  out.divergent = lambda >= kMeniscusLambdaC;
  const double lambda2 = lambda * lambda;
  const double q = lambda2 / 432.0;
  const double tail_factor =
      out.divergent ? std::numeric_limits<double>::infinity() : 1.0 / (1.0 - q);
  double term = lambda / 32.0;
  double sum = 0.0;
  std::size_t n = 0;
  while (n < max_terms) {
    sum += term;
    ++n;
    term *= ratio_diagnostic(n) * lambda2;
    if (use_tolerance && !out.divergent && term * tail_factor < tolerance) break;
  }
  out.value = sum;
  out.terms = n;
  out.tail_estimate = out.divergent ? std::numeric_limits<double>::infinity() : term * tail_factor;
  out.converged = !out.divergent && out.tail_estimate < tolerance;
  return out;
}

}  // namespace

SeriesSum meniscus_H_series(double lambda, std::size_t n_terms) {
  return sum_terms(lambda, n_terms, SeriesControl{}.tolerance, false);
}

SeriesSum meniscus_H_series(double lambda, const SeriesControl& control) {
  return sum_terms(lambda, control.max_terms, control.tolerance, true);
}

}  // namespace rotameniscus
