#include "rotameniscus/tensiometer.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "rotameniscus/approximant.hpp"
#include "rotameniscus/asymptotics.hpp"
#include "rotameniscus/errors.hpp"
#include "rotameniscus/shape.hpp"

namespace rotameniscus {

namespace {

const double kHalfSqrt3 = std::sqrt(3.0) / 2.0;
const ContactAngle kZero = ContactAngle::radians(0.0);

const Approximant& cached_approximant() {
  static const Approximant appr = bubble_approximant(15);
  return appr;
}

double H_quad(double lambda) { return axial_length_quadrature(Interface::bubble(), lambda); }

// Root of H(4 - eps) = target by bisection in ln(eps) on [ln lo, ln hi];
// H decreases with eps. Expands the bracket if needed.
double solve_eps(const std::function<double(double)>& H, double target, double lo, double hi) {
  constexpr double kSmallest = 1e-300;
  while (H(4.0 - lo) < target) {
    lo /= 10.0;
    if (4.0 - lo == 4.0 || lo < kSmallest) {
      throw DomainError("H is too large: lambda cannot be resolved below 4 in double precision");
    }
  }
  while (hi < 4.0 && H(4.0 - hi) > target) hi = std::min(4.0, hi * 10.0);
  double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < 200 && b - a > 1e-15 * std::max(1.0, std::abs(a)); ++i) {
    const double m = 0.5 * (a + b);
    if (H(4.0 - std::exp(m)) > target) {
      a = m;
    } else {
      b = m;
    }
  }
  return std::exp(0.5 * (a + b));
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive");
}

}  // namespace

double bubble_volume(double lambda, const quadrature::Options& opt) {
  return 2.0 * std::numbers::pi * integrate_slope(kZero, lambda, Weight::r_squared, opt);
}

double volume_offset(double lambda, const quadrature::Options& opt) {
  if (lambda == 4.0) return -4.0 * std::numbers::pi / 3.0;
  return -2.0 * std::numbers::pi * integrate_slope(kZero, lambda, Weight::one_minus_r_squared, opt);
}

double lambda_from_H(double H, InversionMethod method) {
  if (!(H >= 2.0)) throw DomainError("H must be ≥ 2");
  const double guess = std::exp(-kHalfSqrt3 * (H - kBubbleConstant));
  if (method == InversionMethod::asymptotic) return 4.0 - guess;
  if (H == 2.0) return 0.0;
  const double lo = std::min(guess, 1.0) / 4.0;
  const double hi = std::min(4.0, 4.0 * guess);
  if (method == InversionMethod::quadrature) return 4.0 - solve_eps(H_quad, H, lo, hi);

  const auto& appr = cached_approximant();
  const double eps = solve_eps([&](double l) { return eval_approximant(appr, l); }, H, lo, hi);
  if (eps >= 1e-4) return 4.0 - eps;
  return 4.0 - solve_eps(H_quad, H, eps / 2.0, eps * 2.0);
}

double sigma_assuming_critical(const TensiometerReading& reading) {
  require_positive(reading.omega, "omega");
  require_positive(reading.R_b, "R_b");
  require_positive(reading.rho, "rho");
  return reading.omega * reading.omega * reading.R_b * reading.R_b * reading.R_b * reading.rho / 4.0;
}

double sigma_corrected(const TensiometerReading& reading, InversionMethod method) {
  const double sigma4 = sigma_assuming_critical(reading);
  const double lambda = lambda_from_H(reading.H, method);
  if (lambda == 0.0) {
    throw DomainError("inferred lambda is 0 (spherical bubble): surface tension is undetermined");
  }
  return 4.0 * sigma4 / lambda;
}

double delta_percent(double H, InversionMethod method) {
  return 100.0 * (1.0 - lambda_from_H(H, method) / 4.0);
}

double delta_percent_asymptotic(double H) { return kDeltaPrefactor * std::exp(-kHalfSqrt3 * H); }

double delta_prefactor_from_asymptote() { return 25.0 * std::exp(kHalfSqrt3 * kBubbleConstant); }

TensiometerResult analyze(const TensiometerReading& reading, InversionMethod method) {
  TensiometerResult out{};
  out.lambda_inferred = lambda_from_H(reading.H, method);
  out.sigma_assumed_critical = sigma_assuming_critical(reading);
  out.sigma_corrected = sigma_corrected(reading, method);
  out.delta_percent = 100.0 * (1.0 - out.lambda_inferred / 4.0);
  out.delta_percent_asymptotic = delta_percent_asymptotic(reading.H);
  return out;
}

}  // namespace rotameniscus
