#pragma once

// Zero-gravity interface shapes under rigid-body rotation.
//
// The slope angle theta of the interface z = h(r) satisfies
//
//   sin(theta) = r cos(alpha) + (lambda / 8) r (1 - r^2),   0 <= r <= 1,
//
// with r scaled by the container radius (meniscus) or by the maximum bubble
// radius (bubble, which is the alpha = 0 case). lambda is the rotational
// Bond number rho omega^2 d^3 / sigma.

#include <cstddef>
#include <optional>
#include <vector>

#include "rotameniscus/quadrature.hpp"

namespace rotameniscus {

enum class Geometry { meniscus, bubble };

/// Wall contact angle in radians, 0 <= alpha <= pi.
class ContactAngle {
 public:
  constexpr ContactAngle() = default;

  static ContactAngle radians(double alpha);
  static ContactAngle degrees(double alpha_deg);

  double value() const noexcept { return alpha_; }
  double cos() const noexcept { return cos_; }
  /// 1 - cos(alpha), free of cancellation near alpha = 0.
  double one_minus_cos() const noexcept { return one_minus_cos_; }
  /// 1 + cos(alpha), free of cancellation near alpha = pi.
  double one_plus_cos() const noexcept { return one_plus_cos_; }

 private:
  explicit ContactAngle(double alpha);

  double alpha_ = 0.0;
  double cos_ = 1.0;
  double one_minus_cos_ = 0.0;
  double one_plus_cos_ = 2.0;
};

/// Geometry plus its contact angle. A bubble always carries alpha = 0.
struct Interface {
  Geometry geometry = Geometry::meniscus;
  ContactAngle alpha;

  static Interface meniscus(ContactAngle alpha) { return {Geometry::meniscus, alpha}; }
  static Interface bubble() { return {Geometry::bubble, ContactAngle::radians(0.0)}; }

  /// H = factor * integral of h' over [0, 1].
  double length_factor() const { return geometry == Geometry::bubble ? 2.0 : 1.0; }
};

struct CriticalPoint {
  double lambda_c;
  double r_c;
};

double sin_theta(double r, ContactAngle alpha, double lambda);
/// As sin_theta, but throws SupercriticalError when |sin(theta)| > 1.
double sin_theta_strict(double r, ContactAngle alpha, double lambda);

/// r_c = 1 / (2 cos((pi - alpha) / 3)),  lambda_c = 4 / r_c^3.
CriticalPoint critical_params(ContactAngle alpha);

/// Smallest lambda for which sin(theta) has its maximum at r = 1: 4 cos(alpha).
double lambda_min(ContactAngle alpha);

/// Radius of the interior slope maximum (inflection point of h).
/// Throws DomainError when lambda <= lambda_min(alpha).
double inflection_radius(ContactAngle alpha, double lambda);

/// sin(theta) at inflection_radius; reaches 1 exactly at lambda_c.
double max_sin_theta(ContactAngle alpha, double lambda);

/// h'(r) = s / sqrt(1 - s^2). Returns +inf at an endpoint where s = 1 and
/// throws SingularPointError at interior points with |s| >= 1.
double h_prime(double r, ContactAngle alpha, double lambda);

/// Slope field for fixed (alpha, lambda) with cancellation-free 1 - s and
/// 1 + s. Both use exact re-expansions of the cubic sin(theta): about the
/// interior maximum r0 when it exists, and about the wall r = 1.
class SlopeField {
 public:
  SlopeField(ContactAngle alpha, double lambda);

  ContactAngle alpha() const { return alpha_; }
  double lambda() const { return lambda_; }
  bool has_interior_peak() const { return peak_.has_value(); }
  /// Location of the interior maximum of sin(theta), if any.
  std::optional<double> peak_radius() const;
  /// 1 - max sin(theta) at the interior peak.
  std::optional<double> peak_gap() const;

  double sin_theta(double r) const;
  /// 1 - sin(theta) at r = 1 - u; the caller passes u to keep it exact.
  double one_minus_sin(double r, double u) const;
  double one_plus_sin(double u) const;
  /// h'(r) with r = 1 - u.
  double h_prime(double r, double u) const;
  double h_prime(double r) const { return h_prime(r, 1.0 - r); }

 private:
  struct Peak {
    double r0;
    double gap;  // 1 - s(r0)
  };
  ContactAngle alpha_;
  double lambda_;
  std::optional<Peak> peak_;
};

/// Weight applied to h' when integrating over r.
enum class Weight { one, r_squared, one_minus_r_squared };

/// Singularity-aware quadrature of w(r) h'(r) over [0, 1]:
///  - r = 1 - t^2 on the outer piece removes the (1 - r)^(-1/2) wall singularity;
///  - near criticality the analytic peak profile 1/sqrt(c + d (r - r0)^2)
///    (or 1/sqrt(p u + q u^2) at the wall) is subtracted and integrated in
///    closed form.
/// Throws SupercriticalError for lambda >= lambda_c.
double integrate_slope(ContactAngle alpha, double lambda, Weight weight,
                       const quadrature::Options& opt = {});

/// Axial length: integral of h' (meniscus) or twice it (bubble).
double axial_length_quadrature(const Interface& iface, double lambda,
                               const quadrature::Options& opt = {});

enum class Clustering { uniform, cosine_both_ends, cosine_outer };

struct GridSpec {
  std::size_t nodes = 1001;
  /// Unset picks cosine_outer for singular walls (bubble, alpha = 0) and
  /// cosine_both_ends otherwise.
  std::optional<Clustering> clustering;
};

struct ProfileSample {
  double r;
  double h;
  double sin_theta;
};

struct ShapeProfile {
  Geometry geometry;
  ContactAngle alpha;
  double lambda;
  GridSpec grid;
  Clustering clustering;
  std::vector<ProfileSample> samples;

  /// Axial length implied by the samples.
  double axial_length() const;
  /// Bubble only: the closed outline, upper half followed by its mirror
  /// image about the equatorial plane z = H/2 (r decreasing back to 0).
  std::vector<ProfileSample> full_outline() const;
};

/// Sampled interface h(r). Meniscus: shifted so that integral h r dr = 0.
/// Bubble: anchored at h(0) = 0 (tip), equator at h(1) = H/2.
ShapeProfile profile(const Interface& iface, double lambda, const GridSpec& grid = {},
                     const quadrature::Options& opt = {});

/// Radial nodes in [0, 1], strictly increasing, endpoints included.
std::vector<double> make_grid(std::size_t nodes, Clustering clustering);

/// Critical master shape: the alpha = pi/2 critical curve rescaled by r_w
/// reproduces the critical curve of any other contact angle.
struct MasterShape {
  ContactAngle alpha;
  double r_w;
  double lambda_c;  // lambda_c(alpha)

  /// Master curve (alpha = pi/2, lambda = 12 sqrt 3) at r = r_w * r_star.
  double master_sin_theta(double r_star) const;
  /// Critical curve of alpha in the rescaled variable.
  double rescaled_sin_theta(double r_star) const;
};

MasterShape master_rescale(ContactAngle alpha);

}  // namespace rotameniscus
