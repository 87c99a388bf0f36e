#include <cmath>
#include <numbers>

#include "doctest.h"
#include "rotameniscus/asymptotics.hpp"
#include "rotameniscus/bubble_series.hpp"
#include "rotameniscus/errors.hpp"
#include "rotameniscus/meniscus_series.hpp"

using namespace rotameniscus;

namespace {

const Interface kMeniscus = Interface::meniscus(ContactAngle::radians(std::numbers::pi / 2));

double H_men(double eps) { return axial_length_quadrature(kMeniscus, kMeniscusLambdaC - eps); }
double H_bub(double eps) { return axial_length_quadrature(Interface::bubble(), kBubbleLambdaC - eps); }

}  // namespace

TEST_CASE("laws with the published constants") {
  CHECK(meniscus_H_asymptotic(kMeniscusLambdaC - 0.1).H == doctest::Approx(1.9855).epsilon(1e-4));
  CHECK(meniscus_H_asymptotic(kMeniscusLambdaC - 0.1).valid);
  CHECK_FALSE(meniscus_H_asymptotic(5.0).valid);
  CHECK(bubble_H_asymptotic(3.9).H == doctest::Approx(5.892).epsilon(1e-4));
  CHECK(bubble_H_asymptotic(3.9).valid);
  CHECK_FALSE(bubble_H_asymptotic(3.0).valid);
  CHECK(bubble_H_asymptotic(4.0 - 2.8e-3).H == doctest::Approx(10.0).epsilon(2e-3));
  CHECK(meniscus_law().log_coefficient < 0.0);
  CHECK(bubble_law().log_coefficient == doctest::Approx(-2.0 / std::sqrt(3.0)));
  CHECK_THROWS_AS(meniscus_H_asymptotic(kMeniscusLambdaC), SupercriticalError);
  CHECK_THROWS_AS(bubble_H_asymptotic(4.5), SupercriticalError);
}

TEST_CASE("validity flag marks agreement with quadrature within one percent") {
  for (double eps : {1.0, 0.3, 0.1, 1e-2, 1e-4}) {
    const auto a = meniscus_H_asymptotic(kMeniscusLambdaC - eps);
    CHECK(a.valid);
    CHECK(std::abs(a.H - H_men(eps)) < 0.01 * H_men(eps));
  }
  for (double eps : {0.1, 1e-2, 1e-4}) {
    const auto a = bubble_H_asymptotic(4.0 - eps);
    CHECK(a.valid);
    CHECK(std::abs(a.H - H_bub(eps)) < 0.01 * H_bub(eps));
  }
}

TEST_CASE("closed-form pieces") {
  CHECK(meniscus_closed_form_constant() == doctest::Approx(1.5047).epsilon(1e-4));
  CHECK(bubble_closed_form_constant() == doctest::Approx(3.6697).epsilon(1e-4));
  // Finite-eps peak integrals against direct quadrature of h'_asy.
  quadrature::Options opt;
  opt.rel_tol = 1e-12;
  for (double eps : {1e-1, 1e-3, 1e-5}) {
    const double rc = 1.0 / std::sqrt(3.0);
    auto men = [&](double r) { return 1.0 / std::sqrt(eps * std::sqrt(3.0) / 18.0 + 9.0 * (r - rc) * (r - rc)); };
    const double breaks[] = {0.0, rc, 1.0};
    CHECK(meniscus_peak_integral(eps) == doctest::Approx(quadrature::integrate(men, breaks, opt).value).epsilon(1e-10));
    // u = t^2 removes the u^(-1/2) endpoint behaviour.
    auto bub = [&](double t) { return 2.0 * 2.0 * t / std::sqrt(3.0 * t * t * t * t + eps * t * t / 2.0); };
    CHECK(bubble_peak_integral(eps) == doctest::Approx(quadrature::integrate(bub, 0.0, 1.0, opt).value).epsilon(1e-9));
    // With the divergence removed both tend to the closed-form constants.
  }
  CHECK(meniscus_peak_integral(1e-10) + std::log(1e-10) / 3.0 ==
        doctest::Approx(meniscus_closed_form_constant()).epsilon(1e-8));
  CHECK(bubble_peak_integral(1e-10) + 2.0 / std::sqrt(3.0) * std::log(1e-10) ==
        doctest::Approx(bubble_closed_form_constant()).epsilon(1e-8));
}

TEST_CASE("peak integral plus correction recovers the axial length") {
  for (double eps : {1.0, 1e-2, 1e-4, 1e-6}) {
    CHECK(meniscus_peak_integral(eps) + meniscus_correction_integral(eps) ==
          doctest::Approx(H_men(eps)).epsilon(1e-9));
    CHECK(bubble_peak_integral(eps) + 2.0 * bubble_correction_integral(eps) ==
          doctest::Approx(H_bub(eps)).epsilon(1e-9));
  }
}

TEST_CASE("recomputed constants") {
  const auto& m = compute_meniscus_H0();
  CHECK(m.correction == doctest::Approx(-0.2864).epsilon(2e-4 / 0.2864));
  CHECK(std::abs(m.value - kMeniscusH0) < 0.002);
  CHECK(m.spread < 1e-6);
  const auto& b = compute_bubble_constant();
  CHECK(std::abs(b.value - kBubbleConstant) < 0.002);
  CHECK(b.spread < 1e-4);
  const double c4 = bubble_closed_form_constant() + 2.0 * bubble_correction_integral(1e-4);
  const double c5 = bubble_closed_form_constant() + 2.0 * bubble_correction_integral(1e-5);
  CHECK(std::abs(c4 - c5) < 0.01);
  // Same constants from the quadrature oracle directly: H + B ln eps at small eps.
  CHECK(H_men(1e-7) + std::log(1e-7) / 3.0 == doctest::Approx(m.value).epsilon(1e-5));
  CHECK(H_bub(1e-7) + 2.0 / std::sqrt(3.0) * std::log(1e-7) == doctest::Approx(b.value).epsilon(1e-4));
}

TEST_CASE("divergence rates") {
  for (double eps : {1e-3, 1e-4}) {
    const double men = (H_men(eps) - H_men(10.0 * eps)) / std::log(10.0);
    CHECK(men == doctest::Approx(1.0 / 3.0).epsilon(0.01));
    const double bub = (H_bub(eps) - H_bub(10.0 * eps)) / std::log(10.0);
    CHECK(bub == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(0.01));
  }
}

TEST_CASE("quadrature approaches the asymptote monotonically") {
  const double H0 = compute_meniscus_H0().value;
  const double Hb = compute_bubble_constant().value;
  double prev_m = INFINITY, prev_b = INFINITY, prev_published = INFINITY;
  for (double eps = 1e-1; eps >= 1e-6; eps /= 10.0) {
    const double dm = std::abs(H_men(eps) - (-std::log(eps) / 3.0 + H0));
    const double db = std::abs(H_bub(eps) - (-2.0 / std::sqrt(3.0) * std::log(eps) + Hb));
    CHECK(dm < prev_m);
    CHECK(db < prev_b);
    prev_m = dm;
    prev_b = db;
    if (eps >= 1e-4) {
      const double dp = std::abs(H_bub(eps) - bubble_H_asymptotic(4.0 - eps).H);
      CHECK(dp < prev_published);
      prev_published = dp;
    }
  }
  CHECK(prev_m < 1e-6);
  CHECK(prev_b < 1e-4);
}
