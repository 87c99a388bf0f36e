#include <cmath>
#include <numbers>

#include "doctest.h"
#include "rotameniscus/approximant.hpp"
#include "rotameniscus/bubble_series.hpp"
#include "rotameniscus/errors.hpp"
#include "rotameniscus/meniscus_series.hpp"

using namespace rotameniscus;

namespace {

const Interface kMeniscus = Interface::meniscus(ContactAngle::radians(std::numbers::pi / 2));

double H_men(double lambda) { return axial_length_quadrature(kMeniscus, lambda); }
double H_bub(double lambda) { return axial_length_quadrature(Interface::bubble(), lambda); }

// Uniform points plus a geometric approach to lambda_c.
std::vector<double> scan_grid(double lambda_c, double closest) {
  std::vector<double> g;
  for (int i = 0; i < 400; ++i) g.push_back(lambda_c * i / 400.0);
  for (double e = 0.1; e >= closest * 0.999; e /= std::pow(10.0, 0.125)) g.push_back(lambda_c - e);
  return g;
}

double max_error_men(std::size_t N) {
  return error_scan(meniscus_approximant(N), H_men, scan_grid(kMeniscusLambdaC, 1e-3)).max_error;
}
double max_error_bub(std::size_t N) {
  return error_scan(bubble_approximant(N), H_bub, scan_grid(4.0, 1e-6)).max_error;
}

}  // namespace

TEST_CASE("Taylor coefficients of H_A reproduce the source series") {
  const auto men_exact = meniscus_coefficients_extended(25);
  const auto bub = bubble_power_series(25);
  for (auto mode : {ApproximantMode::pinned_constant, ApproximantMode::free_constant}) {
    for (std::size_t N : {5u, 10u, 20u}) {
      const auto m = meniscus_approximant(N, {mode});
      const auto b = bubble_approximant(N, {mode});
      CHECK(m.matched_order() == (mode == ApproximantMode::pinned_constant ? N - 1 : N));
      const auto tm = taylor_coefficients(m, N);
      const auto tb = taylor_coefficients(b, N);
      // Compared on the scale H_k lambda_c^k, where every term is O(1).
      for (std::size_t k = 0; k <= m.matched_order(); ++k) {
        const double dm = static_cast<double>(abs(tm[k] - men_exact[k]) * pow(ExtendedReal(kMeniscusLambdaC), k));
        const double db = static_cast<double>(abs(tb[k] - ExtendedReal(bub.coefficients[k])) * pow(ExtendedReal(4), k));
        CHECK(dm < 1e-9);
        CHECK(db < 1e-9);
      }
    }
  }
}

TEST_CASE("taylor_coefficients agrees with direct evaluation near zero") {
  const auto b = bubble_approximant(8);
  const auto t = taylor_coefficients(b, 40);
  for (double lambda : {0.01, 0.1, 0.5}) {
    double sum = 0.0;
    for (std::size_t k = t.size(); k-- > 0;) sum = sum * lambda + static_cast<double>(t[k]);
    CHECK(sum == doctest::Approx(eval_approximant(b, lambda)).epsilon(1e-12));
  }
}

TEST_CASE("rebuilding from the approximant's own Taylor series returns its coefficients") {
  for (auto mode : {ApproximantMode::pinned_constant, ApproximantMode::free_constant}) {
    const auto a = meniscus_approximant(12, {mode, SolvePrecision::extended});
    const auto t = taylor_coefficients(a, 12);
    const auto again = build_approximant(t, a.lambda_c, a.A_L, a.B_L, 12, {mode, SolvePrecision::extended});
    for (std::size_t n = 0; n <= 12; ++n) {
      const double scale = std::pow(a.lambda_c, static_cast<double>(n));
      CHECK(std::abs(again.A[n] - a.A[n]) * scale < 1e-12 * (1.0 + std::abs(a.A[n]) * scale));
    }
  }
}

TEST_CASE("values at the ends of the interval") {
  CHECK(std::abs(eval_approximant(meniscus_approximant(20), 0.0)) < 1e-11);
  CHECK(eval_approximant(bubble_approximant(15), 0.0) == doctest::Approx(2.0).epsilon(1e-12));
  for (const auto& a : {meniscus_approximant(20), bubble_approximant(15),
                        bubble_approximant(10, {ApproximantMode::free_constant})}) {
    for (int k = 4; k <= 8; ++k) {
      const double eps = std::pow(10.0, -k);
      const double lambda = a.lambda_c - eps;
      const double rest = eval_approximant(a, lambda) - (a.A_L + a.B_L * std::log(a.lambda_c - lambda));
      // rest - A_0 = A_1 eps + O(eps^2)
      CHECK(std::abs(rest - a.A[0]) <= 2.0 * std::abs(a.A[1]) * eps + 1e-11);
    }
    CHECK(eval_approximant(a, a.lambda_c - 1e-12) > 8.0);
  }
  CHECK(meniscus_approximant(20).A[0] == 0.0);
}

TEST_CASE("pointwise error against quadrature") {
  const double m20 = max_error_men(20);
  CHECK(m20 <= 1e-3);
  CHECK(m20 == doctest::Approx(4e-4).epsilon(0.1));
  const double b15 = max_error_bub(15);
  CHECK(b15 <= 1e-2);
  CHECK(b15 == doctest::Approx(7.2e-3).epsilon(0.05));
  const double m5 = max_error_men(5), m10 = max_error_men(10);
  CHECK(m10 <= m5);
  CHECK(m20 <= m10);
  CHECK(max_error_bub(10) <= max_error_bub(5));

  // The error peaks close to lambda_c, not near zero.
  const auto scan = error_scan(meniscus_approximant(20), H_men, scan_grid(kMeniscusLambdaC, 1e-3));
  CHECK(scan.argmax > 0.9 * kMeniscusLambdaC);
  CHECK(scan.points.size() == scan_grid(kMeniscusLambdaC, 1e-3).size());
}

TEST_CASE("bubble at lambda = 2") {
  CHECK(std::abs(eval_approximant(bubble_approximant(5), 2.0) - H_bub(2.0)) <= 1e-2);
  CHECK(std::abs(eval_approximant(bubble_approximant(10), 2.0) - H_bub(2.0)) <= 1e-4);
  CHECK(std::abs(eval_approximant(bubble_approximant(10), 2.0) - eval_approximant(bubble_approximant(5), 2.0)) < 2e-3);
}

TEST_CASE("double and extended solves agree") {
  for (std::size_t N : {5u, 15u, 20u}) {
    const auto d = meniscus_approximant(N, {ApproximantMode::pinned_constant, SolvePrecision::double_precision});
    const auto e = meniscus_approximant(N, {ApproximantMode::pinned_constant, SolvePrecision::extended});
    for (double lambda : {0.0, 10.0, 20.0, 20.7}) {
      CHECK(eval_approximant(d, lambda) == doctest::Approx(eval_approximant(e, lambda)).epsilon(1e-10));
    }
  }
}

TEST_CASE("serialization round trip") {
  const auto a = bubble_approximant(15);
  const auto text = serialize(a);
  CHECK(text.rfind("rotameniscus-approximant 1\n", 0) == 0);
  const auto b = deserialize(text);
  CHECK(b.lambda_c == a.lambda_c);
  CHECK(b.A_L == a.A_L);
  CHECK(b.B_L == a.B_L);
  CHECK(b.mode == a.mode);
  REQUIRE(b.A.size() == a.A.size());
  for (std::size_t n = 0; n < a.A.size(); ++n) CHECK(b.A[n] == a.A[n]);
  CHECK(serialize(b) == text);

  CHECK_THROWS_AS(deserialize("garbage"), DomainError);
  CHECK_THROWS_AS(deserialize("rotameniscus-approximant 1\nlambda_c 4\nA_L 1\nB_L -1\nN 2\nA 0 0\nA 1 1\n"),
                  DomainError);
  CHECK_THROWS_AS(deserialize("rotameniscus-approximant 1\nlambda_c x\n"), DomainError);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(meniscus_approximant(0), DomainError);
  CHECK_THROWS_AS(build_approximant(bubble_power_series(3), 4.0, 3.2332, -1.0, 5), DomainError);
  const auto a = bubble_approximant(5);
  CHECK_THROWS_AS(eval_approximant(a, 4.0), SupercriticalError);
  CHECK_THROWS_AS(eval_approximant(a, -1.0), DomainError);
}
