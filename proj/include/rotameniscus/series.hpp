#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "rotameniscus/shape.hpp"

namespace rotameniscus {

/// Working type for coefficient solves that outgrow double precision.
using ExtendedReal = boost::multiprecision::cpp_bin_float_50;

/// Taylor coefficients of H(lambda) about lambda = 0 and the radius of
/// convergence lambda_c.
struct PowerSeries {
  Geometry geometry;
  double radius;
  std::vector<double> coefficients;  // H_0, H_1, ...

  std::size_t order() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
};

/// Partial sum of a power series with a geometric tail estimate.
struct SeriesSum {
  double value = 0.0;
  double tail_estimate = 0.0;
  std::size_t terms = 0;
  bool converged = false;
  /// lambda is at or beyond the radius of convergence.
  bool divergent = false;
};

struct SeriesControl {
  double tolerance = 1e-13;   // absolute bound on the tail
  std::size_t max_terms = 5000;
};

}  // namespace rotameniscus
