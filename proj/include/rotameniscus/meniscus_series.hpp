#pragma once

// Exact series for the axial length of a meniscus with normal contact
// (alpha = pi/2):
//
//   H(lambda) = sum_n a_{2n+1} b_{2n+1} lambda^{2n+1},
//
// where a_n are the Taylor coefficients of s / sqrt(1 - s^2) in s and
// b_n = 8^{-n} integral_0^1 (r - r^3)^n dr. Radius of convergence 12 sqrt 3.

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rotameniscus/series.hpp"

namespace rotameniscus {

inline constexpr double kMeniscusLambdaC = 20.784609690826527;  // 12 sqrt 3

/// a_0 .. a_{n_max}; a_1 = 1, a_n = a_{n-2} (n-2)/(n-1) for odd n, zero for even n.
std::vector<double> a_coeffs(std::size_t n_max);

/// b_0 .. b_{n_max}; b_1 = 1/32 and the three-factor recursion for odd n.
/// Entries underflow to zero beyond n ~ 230; use the scaled coefficients there.
std::vector<double> b_coeffs(std::size_t n_max);

/// (a_{2n+1} b_{2n+1}) / (a_{2n-1} b_{2n-1}) for n >= 1; tends to 1/432.
double ratio_diagnostic(std::size_t n);

/// H_k lambda_c^k for k = 0..k_max (odd entries positive, even entries zero).
std::vector<double> meniscus_scaled_coefficients(std::size_t k_max);

/// H_0 .. H_{k_max} in exact rational arithmetic.
std::vector<boost::multiprecision::cpp_rational> meniscus_coefficients_exact(std::size_t k_max);

/// H_0 .. H_{k_max} in extended precision.
std::vector<ExtendedReal> meniscus_coefficients_extended(std::size_t k_max);

PowerSeries meniscus_power_series(std::size_t k_max);

/// Sum of the first n_terms nonzero terms. The tail estimate is
/// next_term / (1 - lambda^2 / 432), an upper bound because the term ratios
/// increase towards lambda^2 / 432.
SeriesSum meniscus_H_series(double lambda, std::size_t n_terms);

/// Sum until the tail bound drops below control.tolerance or max_terms is hit.
SeriesSum meniscus_H_series(double lambda, const SeriesControl& control = {});

}  // namespace rotameniscus
