#pragma once

// Spinning-bubble tensiometry. SI units at this boundary, everything else
// dimensionless.

#include "rotameniscus/quadrature.hpp"

namespace rotameniscus {

/// Dimensionless bubble volume V = 2 [pi h(1) - 2 pi integral h r dr]
/// = 2 pi integral r^2 h' dr (h measured from the tip).
double bubble_volume(double lambda, const quadrature::Options& opt = {});

/// V - pi H = -2 pi integral (1 - r^2) h' dr, finite up to lambda = 4, where it
/// equals -4 pi / 3.
double volume_offset(double lambda, const quadrature::Options& opt = {});

inline constexpr double kVolumeIntercept = 4.18;  // V ~ pi H - 4.18

enum class InversionMethod {
  approximant,  // cached 15-term approximant, quadrature refinement for 4 - lambda < 1e-4
  quadrature,
  asymptotic,   // 4 - exp(-(sqrt 3 / 2)(H - 3.2332))
};

/// lambda with H(lambda) = H. Throws DomainError("H must be >= 2") for H < 2.
double lambda_from_H(double H, InversionMethod method = InversionMethod::approximant);

struct TensiometerReading {
  double omega;  // rad/s
  double R_b;    // m, maximum bubble radius
  double rho;    // kg/m^3, density difference
  double H;      // bubble length / R_b
};

struct TensiometerResult {
  double lambda_inferred;
  double sigma_assumed_critical;  // N/m
  double sigma_corrected;         // N/m
  double delta_percent;
  double delta_percent_asymptotic;
};

/// omega^2 R_b^3 rho / 4.
double sigma_assuming_critical(const TensiometerReading& reading);
/// omega^2 R_b^3 rho / lambda(H); DomainError when lambda(H) = 0 (H = 2).
double sigma_corrected(const TensiometerReading& reading,
                       InversionMethod method = InversionMethod::approximant);

/// 100 (1 - lambda(H) / 4).
double delta_percent(double H, InversionMethod method = InversionMethod::approximant);

inline constexpr double kDeltaPrefactor = 411.13;
/// 411.13 exp(-(sqrt 3 / 2) H).
double delta_percent_asymptotic(double H);
/// 25 exp((sqrt 3 / 2) 3.2332), the prefactor implied by the bubble asymptote.
double delta_prefactor_from_asymptote();

/// Requires omega, R_b, rho > 0 and H > 2.
TensiometerResult analyze(const TensiometerReading& reading,
                          InversionMethod method = InversionMethod::approximant);

}  // namespace rotameniscus
