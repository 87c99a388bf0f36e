#pragma once

// Logarithmic divergence of the axial length as lambda -> lambda_c:
//
//   meniscus (alpha = pi/2):  H ~ -(1/3) ln(lambda_c - lambda) + H_0,       H_0 ~ 1.218
//   bubble:                   H ~ -(2/sqrt 3) ln(4 - lambda) + 3.2332
//
// The constants are the sum of a closed-form integral of the local peak
// profile h'_asy and the limit of the integral of h' - h'_asy.

#include <cstddef>
#include <vector>

#include "rotameniscus/shape.hpp"

namespace rotameniscus {

inline constexpr double kMeniscusH0 = 1.218;
inline constexpr double kBubbleConstant = 3.2332;

struct AsymptoticLaw {
  Geometry geometry;
  double lambda_c;
  double log_coefficient;  // B_L, negative
  double constant;         // A_L
  /// Largest lambda_c - lambda at which the law is flagged as valid.
  double valid_below;

  double operator()(double lambda) const;
};

AsymptoticLaw meniscus_law();
AsymptoticLaw bubble_law();

struct AsymptoticValue {
  double H;
  bool valid;  // lambda_c - lambda <= law.valid_below
};

/// Throws SupercriticalError at lambda >= lambda_c.
AsymptoticValue meniscus_H_asymptotic(double lambda);
AsymptoticValue bubble_H_asymptotic(double lambda);

/// (1/3) ln[72 (3 - sqrt 3)], the eps -> 0 limit of the closed-form peak integral
/// after the -(1/3) ln eps divergence is removed.
double meniscus_closed_form_constant();
/// (2/sqrt 3) ln 24, the same for the bubble (both halves).
double bubble_closed_form_constant();

/// Peak integral at finite eps, without removing the divergence.
double meniscus_peak_integral(double eps);
double bubble_peak_integral(double eps);

/// integral_0^1 (h' - h'_asy) dr at lambda = lambda_c - eps. Meniscus:
/// h'_asy = 1 / sqrt(eps/(6 sqrt 3) + 9 (r - 1/sqrt 3)^2). Bubble (one half):
/// h'_asy = 1 / sqrt(3 u^2 + eps u / 2), u = 1 - r.
double meniscus_correction_integral(double eps);
double bubble_correction_integral(double eps);

struct ExtrapolatedConstant {
  double value;        // closed_form + factor * correction
  double closed_form;
  double correction;   // extrapolated eps -> 0 limit of the correction integral
  double spread;       // |last two Richardson estimates|
  std::vector<double> eps;
  std::vector<double> corrections;
};

/// Correction integrals at eps = 10^-k, k = 2..6, Richardson-extrapolated to
/// eps = 0 assuming an O(eps) remainder. Throws ExtrapolationError when the
/// last two estimates differ by more than 1e-3. Cached.
const ExtrapolatedConstant& compute_meniscus_H0();
const ExtrapolatedConstant& compute_bubble_constant();

}  // namespace rotameniscus
