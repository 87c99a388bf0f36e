#include <cmath>
#include <numbers>

#include "doctest.h"
#include "rotameniscus/errors.hpp"
#include "rotameniscus/meniscus_series.hpp"
#include "rotameniscus/shape.hpp"

using namespace rotameniscus;
using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

namespace {

// Oracle: Taylor coefficient of s (1 - s^2)^(-1/2) at s^(2n+1) is C(2n, n) / 4^n.
double a_oracle(unsigned n) {
  double c = 1.0;
  for (unsigned j = 1; j <= n; ++j) c *= static_cast<double>(n + j) / (4.0 * j);
  return c;
}

// Oracle: 8^-n integral_0^1 r^n (1 - r^2)^n dr by binomial expansion, exactly.
cpp_rational b_oracle(unsigned n) {
  cpp_rational sum(0);
  cpp_int binom(1);
  for (unsigned j = 0; j <= n; ++j) {
    const cpp_rational term(binom, cpp_int(n + 2 * j + 1));
    sum += (j % 2 == 0) ? term : -term;
    binom = binom * (n - j) / (j + 1);
  }
  return sum / cpp_rational(pow(cpp_int(8), n));
}

const Interface kMeniscus = Interface::meniscus(ContactAngle::radians(std::numbers::pi / 2));

}  // namespace

TEST_CASE("a coefficients") {
  auto a = a_coeffs(41);
  CHECK(a[1] == 1.0);
  CHECK(a[3] == 0.5);
  CHECK(a[5] == 0.375);
  for (unsigned k = 0; k <= 41; k += 2) CHECK(a[k] == 0.0);
  for (unsigned n = 0; 2 * n + 1 <= 41; ++n) CHECK(a[2 * n + 1] == doctest::Approx(a_oracle(n)).epsilon(1e-14));
}

TEST_CASE("b coefficients match the exact integrals") {
  auto b = b_coeffs(61);
  CHECK(b[1] == 1.0 / 32.0);
  CHECK(b[3] == doctest::Approx(1.0 / 20480.0).epsilon(1e-15));
  for (unsigned k = 0; k <= 61; k += 2) CHECK(b[k] == 0.0);
  for (unsigned n = 1; n <= 61; n += 2) {
    CHECK(b[n] == doctest::Approx(static_cast<double>(b_oracle(n))).epsilon(1e-13));
  }
  // b5 against direct quadrature of (r - r^3)^5 / 8^5.
  quadrature::Options tight;
  tight.rel_tol = 1e-14;
  auto direct = quadrature::integrate([](double r) { return std::pow((r - r * r * r) / 8.0, 5); }, 0.0, 1.0, tight);
  CHECK(b[5] == doctest::Approx(direct.value).epsilon(1e-13));
}

TEST_CASE("exact rational path certifies the floating-point coefficients") {
  auto exact = meniscus_coefficients_exact(61);
  auto series = meniscus_power_series(61);
  auto extended = meniscus_coefficients_extended(61);
  CHECK(exact[1] == cpp_rational(1, 32));
  CHECK(exact[3] == cpp_rational(1, 40960));
  for (unsigned k = 0; k <= 61; ++k) {
    if (k % 2 == 0) {
      CHECK(exact[k] == 0);
      continue;
    }
    const double e = static_cast<double>(exact[k]);
    CHECK(series.coefficients[k] == doctest::Approx(e).epsilon(1e-14));
    const ExtendedReal diff = abs(extended[k] - ExtendedReal(exact[k])) / ExtendedReal(exact[k]);
    CHECK(diff < ExtendedReal(1e-45));
    CHECK(static_cast<double>(b_oracle(k)) * a_oracle((k - 1) / 2) == doctest::Approx(e).epsilon(1e-13));
  }
}

TEST_CASE("ratio diagnostic") {
  CHECK(ratio_diagnostic(1) == doctest::Approx(1.0 / 1280.0).epsilon(1e-15));
  CHECK(std::abs(ratio_diagnostic(500) * 432.0 - 1.0) < 0.01);
  CHECK(std::abs(ratio_diagnostic(200) * 432.0 - 1.0) < 0.01);
  CHECK_THROWS_AS(ratio_diagnostic(0), DomainError);
  double prev_gap = std::abs(ratio_diagnostic(50) - 1.0 / 432.0);
  for (std::size_t n = 51; n <= 5000; ++n) {
    const double gap = std::abs(ratio_diagnostic(n) - 1.0 / 432.0);
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
  // Ratios increase towards the limit, which makes the geometric tail a bound.
  for (std::size_t n = 1; n < 5000; ++n) {
    CHECK(ratio_diagnostic(n) < ratio_diagnostic(n + 1));
    CHECK(ratio_diagnostic(n) < 1.0 / 432.0);
  }
}

TEST_CASE("coefficient products are positive up to n = 1000") {
  auto s = meniscus_scaled_coefficients(2001);
  for (std::size_t n = 0; n <= 1000; ++n) {
    CHECK(s[2 * n + 1] > 0.0);
    CHECK(s[2 * n] == 0.0);
  }
}

TEST_CASE("series sums") {
  CHECK(meniscus_H_series(0.0).value == 0.0);
  auto one = meniscus_H_series(1.0);
  CHECK(one.converged);
  CHECK(one.value == doctest::Approx(1.0 / 32 + 1.0 / 40960 + 3.0 / (8 * 11010048.0)).epsilon(1e-10));
  CHECK(one.value == doctest::Approx(0.0312744).epsilon(1e-6));
  for (double lambda : {2.0, 5.0, 8.0, 12.0, 15.0, 18.0, 20.0}) {
    auto s = meniscus_H_series(lambda);
    CHECK(s.converged);
    CHECK(std::abs(s.value - axial_length_quadrature(kMeniscus, lambda)) < 1e-8);
  }
}

TEST_CASE("tail estimate bounds the truncation error") {
  const double lambda = 15.0;
  const double full = meniscus_H_series(lambda, SeriesControl{1e-16, 5000}).value;
  for (std::size_t n : {1u, 3u, 10u, 30u}) {
    auto partial = meniscus_H_series(lambda, n);
    CHECK(partial.terms == n);
    CHECK(full - partial.value <= partial.tail_estimate * (1 + 1e-12));
    CHECK(full - partial.value > 0.3 * partial.tail_estimate);
  }
}

TEST_CASE("divergence and non-convergence are flagged") {
  auto at = meniscus_H_series(kMeniscusLambdaC, 50);
  CHECK(at.divergent);
  CHECK_FALSE(at.converged);
  auto near = meniscus_H_series(kMeniscusLambdaC - 1e-6, SeriesControl{1e-13, 5000});
  CHECK_FALSE(near.divergent);
  CHECK_FALSE(near.converged);
  CHECK(near.terms == 5000);
  CHECK_THROWS_AS(meniscus_H_series(-1.0), DomainError);
}
