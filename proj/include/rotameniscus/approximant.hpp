#pragma once

// Asymptotic approximant, exact at both ends of [0, lambda_c):
//
//   H_A(lambda) = sum_{n=0}^{N} A_n (lambda_c - lambda)^n + A_L + B_L ln(lambda_c - lambda)
//
// A_L and B_L come from the asymptotic law; the A_n make the Taylor series of
// H_A about lambda = 0 agree with the power series of H.

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "rotameniscus/series.hpp"

namespace rotameniscus {

enum class ApproximantMode {
  /// A_0 = 0 and A_1..A_N match Taylor orders 0..N-1. The constant near
  /// lambda_c is exactly A_L.
  pinned_constant,
  /// A_0..A_N match orders 0..N (triangular system).
  free_constant,
};

enum class SolvePrecision {
  automatic,  // extended for N > 12
  double_precision,
  extended,
};

struct Approximant {
  double lambda_c = 0.0;
  double A_L = 0.0;
  double B_L = 0.0;
  std::vector<double> A;  // A_0 .. A_N
  ApproximantMode mode = ApproximantMode::pinned_constant;

  std::size_t order() const { return A.empty() ? 0 : A.size() - 1; }
  /// Highest Taylor order matched by construction.
  std::size_t matched_order() const;
};

struct BuildOptions {
  ApproximantMode mode = ApproximantMode::pinned_constant;
  SolvePrecision precision = SolvePrecision::automatic;
};

/// Requires coefficients H_0 .. H_N (N >= 1). Throws DomainError otherwise
/// and NumericalError if the matching system is singular.
Approximant build_approximant(const std::vector<ExtendedReal>& coefficients, double lambda_c,
                              double A_L, double B_L, std::size_t N, const BuildOptions& opt = {});
Approximant build_approximant(const PowerSeries& series, double lambda_c, double A_L, double B_L,
                              std::size_t N, const BuildOptions& opt = {});

/// Normal-contact meniscus (exact series, A_L = 1.218, B_L = -1/3) and
/// bubble (A_L = 3.2332, B_L = -2/sqrt 3).
Approximant meniscus_approximant(std::size_t N, const BuildOptions& opt = {});
Approximant bubble_approximant(std::size_t N, const BuildOptions& opt = {});

/// Throws SupercriticalError at lambda >= lambda_c, DomainError below 0.
double eval_approximant(const Approximant& appr, double lambda);

/// Taylor coefficients of H_A about lambda = 0, orders 0..k_max, computed in
/// extended precision from the stored A_n.
std::vector<ExtendedReal> taylor_coefficients(const Approximant& appr, std::size_t k_max);

struct ErrorPoint {
  double lambda;
  double approximant;
  double reference;
  double error;  // |approximant - reference|
};

struct ErrorScan {
  std::vector<ErrorPoint> points;
  double max_error = 0.0;
  double argmax = 0.0;
};

ErrorScan error_scan(const Approximant& appr, const std::function<double(double)>& oracle,
                     const std::vector<double>& lambda_grid);

/// Plain-text record: one "key value" pair per line, A_n as %.17g decimals.
std::string serialize(const Approximant& appr);
/// Throws DomainError on malformed input.
Approximant deserialize(const std::string& text);

}  // namespace rotameniscus
