#include "rotameniscus/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rotameniscus/bubble_series.hpp"
#include "rotameniscus/errors.hpp"
#include "rotameniscus/meniscus_series.hpp"

namespace rotameniscus {

namespace {

const double kSqrt3 = std::sqrt(3.0);
const double kRc = 1.0 / kSqrt3;
// Meniscus peak: 1 - sin^2 theta ~ eps sqrt(3)/18 + 9 (r - r_c)^2.
const double kPeakA2 = 1.0 / (54.0 * kSqrt3);

quadrature::Options correction_options() {
  quadrature::Options opt;
  opt.rel_tol = 1e-11;
  opt.abs_tol = 1e-13;
  opt.max_intervals = 20000;
  return opt;
}

void require_eps(double eps) {
  if (!(eps > 0.0)) throw DomainError("eps = lambda_c - lambda must be positive");
}

}  // namespace

double AsymptoticLaw::operator()(double lambda) const {
  if (!(lambda < lambda_c)) throw SupercriticalError(lambda, lambda_c);
  return log_coefficient * std::log(lambda_c - lambda) + constant;
}

AsymptoticLaw meniscus_law() {
  return {Geometry::meniscus, kMeniscusLambdaC, -1.0 / 3.0, kMeniscusH0, 1.0};
}

AsymptoticLaw bubble_law() {
  return {Geometry::bubble, kBubbleLambdaC, -2.0 / kSqrt3, kBubbleConstant, 0.1};
}

namespace {

AsymptoticValue evaluate(const AsymptoticLaw& law, double lambda) {
  const double H = law(lambda);
  // Slack so that e.g. lambda = 3.9 counts as eps = 0.1.
  return {H, law.lambda_c - lambda <= law.valid_below * (1.0 + 1e-12)};
}

}  // namespace

AsymptoticValue meniscus_H_asymptotic(double lambda) { return evaluate(meniscus_law(), lambda); }
AsymptoticValue bubble_H_asymptotic(double lambda) { return evaluate(bubble_law(), lambda); }

double meniscus_closed_form_constant() { return std::log(72.0 * (3.0 - kSqrt3)) / 3.0; }
double bubble_closed_form_constant() { return 2.0 / kSqrt3 * std::log(24.0); }

double meniscus_peak_integral(double eps) {
  require_eps(eps);
  // integral of d eta / (3 sqrt(a^2 + eta^2)) over eta in [-1/sqrt(3 eps), (1 - 1/sqrt 3)/sqrt(eps)]
  const double a = std::sqrt(kPeakA2);
  const double hi = (1.0 - kRc) / std::sqrt(eps);
  const double lo = kRc / std::sqrt(eps);
  return (std::asinh(hi / a) + std::asinh(lo / a)) / 3.0;
}

double bubble_peak_integral(double eps) {
  require_eps(eps);
  // 2 integral_0^1 du / sqrt(3 u^2 + b u), b = eps / 2
  const double b = eps / 2.0;
  return 2.0 / kSqrt3 * std::log((6.0 + b + 2.0 * kSqrt3 * std::sqrt(3.0 + b)) / b);
}

double meniscus_correction_integral(double eps) {
  require_eps(eps);
  const double lambda = kMeniscusLambdaC - eps;
  const SlopeField field(ContactAngle::radians(std::numbers::pi / 2), lambda);
  const double c = eps * kPeakA2 * 9.0;
  auto f = [&](double r) {
    const double x = r - kRc;
    return field.h_prime(r, 1.0 - r) - 1.0 / std::sqrt(c + 9.0 * x * x);
  };
  const double w = std::sqrt(eps);
  std::vector<double> breaks{0.0, 1.0, kRc, *field.peak_radius()};
  for (double k : {1.0, 10.0}) {
    breaks.push_back(kRc - k * w);
    breaks.push_back(kRc + k * w);
  }
  std::erase_if(breaks, [](double b) { return b < 0.0 || b > 1.0; });
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  return quadrature::integrate(f, std::span<const double>(breaks), correction_options()).value;
}

double bubble_correction_integral(double eps) {
  require_eps(eps);
  const double lambda = kBubbleLambdaC - eps;
  const SlopeField field(ContactAngle::radians(0.0), lambda);
  // r = 1 - t^2; the peak has width eps in u, sqrt(eps) in t.
  auto f = [&](double t) {
    const double u = t * t;
    return 2.0 * t * field.h_prime(1.0 - u, u) - 2.0 / std::sqrt(3.0 * u + eps / 2.0);
  };
  const double w = std::sqrt(eps);
  std::vector<double> breaks{0.0};
  for (double k : {1.0, 10.0}) {
    if (k * w < 1.0) breaks.push_back(k * w);
  }
  breaks.push_back(1.0);
  return quadrature::integrate(f, std::span<const double>(breaks), correction_options()).value;
}

namespace {

ExtrapolatedConstant extrapolate(double closed_form, double factor, double (*correction)(double)) {
  ExtrapolatedConstant out{};
  out.closed_form = closed_form;
  for (int k = 2; k <= 6; ++k) {
    const double eps = std::pow(10.0, -k);
    out.eps.push_back(eps);
    out.corrections.push_back(correction(eps));
  }
  const std::size_t n = out.corrections.size();
  auto richardson = [&](std::size_t i) { return (10.0 * out.corrections[i] - out.corrections[i - 1]) / 9.0; };
  const double last = richardson(n - 1);
  const double prev = richardson(n - 2);
  out.spread = std::abs(last - prev);
  if (!std::isfinite(last) || !(out.spread < 1e-3)) {
    throw ExtrapolationError("correction integral does not settle as eps -> 0");
  }
  out.correction = last;
  out.value = closed_form + factor * last;
  return out;
}

}  // namespace

const ExtrapolatedConstant& compute_meniscus_H0() {
  static const ExtrapolatedConstant value =
      extrapolate(meniscus_closed_form_constant(), 1.0, &meniscus_correction_integral);
  return value;
}

const ExtrapolatedConstant& compute_bubble_constant() {
  static const ExtrapolatedConstant value =
      extrapolate(bubble_closed_form_constant(), 2.0, &bubble_correction_integral);
  return value;
}

}  // namespace rotameniscus
