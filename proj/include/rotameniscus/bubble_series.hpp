#pragma once

// Exact series for the spinning-bubble axial length,
//
//   H(lambda) = sum_n C_n lambda^n,   C_n = 2 integral_0^1 c_n(r) dr,
//
// where c_n(r) are the Taylor coefficients in lambda of h' = s / sqrt(1 - s^2)
// with s = A + B lambda, A = r, B = (r - r^3) / 8. Radius of convergence 4.

#include <cstddef>
#include <vector>

#include "rotameniscus/quadrature.hpp"
#include "rotameniscus/series.hpp"

namespace rotameniscus {

inline constexpr double kBubbleLambdaC = 4.0;

/// Taylor coefficients b_n(r) of (1 - s^2)^(-1/2) in lambda (Miller recursion):
///   b_0 = 1 / sqrt(1 - A^2),
///   b_n = [(2n - 1) A B b_{n-1} + (n - 1) B^2 b_{n-2}] / (n (1 - A^2)).
/// Throws SingularPointError at r = 1.
std::vector<double> miller_b_coeffs(double r, std::size_t n_max);

/// c_0 = A b_0, c_n = A b_n + B b_{n-1}.
std::vector<double> c_coeffs(double r, std::size_t n_max);

/// 4^n C_n for n = 0..n_max, all from one vector quadrature over t with
/// r = 1 - t^2. The scaling keeps every entry O(1/n) instead of underflowing.
std::vector<double> bubble_scaled_coefficients(std::size_t n_max, const quadrature::Options& opt);

/// Cached 4^n C_n with rel. tolerance 1e-12; grows on demand, thread safe.
std::vector<double> bubble_scaled_coefficients(std::size_t n_max);

/// C_0 .. C_{k_max} (entries underflow to zero beyond k ~ 530).
PowerSeries bubble_power_series(std::size_t k_max);

/// Sum of C_0 .. C_{n_terms - 1}. The tail estimate is
/// |C_n lambda^n| / (1 - lambda / 4); the scaled coefficients decrease, so
/// the term ratio stays below lambda / 4.
SeriesSum bubble_H_series(double lambda, std::size_t n_terms);

SeriesSum bubble_H_series(double lambda, const SeriesControl& control = {});

struct ExplicitCoefficient {
  double value = 0.0;
  double tail_bound = 0.0;   // magnitude of the first omitted tail correction
  std::size_t terms = 0;     // terms summed directly
};

/// C_p from the Gamma-ratio sum over m >= m_0 (2 m_0 + 1 >= p). The terms fall
/// off like m^(-3/2), so the sum is split: terms below M are added directly,
/// the rest is replaced by its Euler-Maclaurin estimate. M grows until the
/// remainder bound drops below tail_tolerance * |C_p|.
/// Throws ConvergenceError past 10^6 direct terms.
ExplicitCoefficient explicit_Cp_detail(std::size_t p, double tail_tolerance = 1e-13);

double explicit_Cp(std::size_t p, double tail_tolerance = 1e-13);

}  // namespace rotameniscus
