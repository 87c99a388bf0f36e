#include "rotameniscus/shape.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "rotameniscus/errors.hpp"

namespace rotameniscus {

namespace {

constexpr double kPi = std::numbers::pi;

// Below this gap (1 - max sin theta) the analytic peak is subtracted.
constexpr double kPeakSubtractionGap = 0.02;

double weight_at(Weight w, double r, double u) {
  switch (w) {
    case Weight::one:
      return 1.0;
    case Weight::r_squared:
      return r * r;
    case Weight::one_minus_r_squared:
      return u * (2.0 - u);
  }
  return 1.0;
}

void require_subcritical(ContactAngle alpha, double lambda) {
  if (!(lambda >= 0.0)) {
    throw DomainError("rotational Bond number must be non-negative");
  }
  const double lc = critical_params(alpha).lambda_c;
  if (lambda >= lc) throw SupercriticalError(lambda, lc);
}

}  // namespace

SupercriticalError::SupercriticalError(double lambda, double lambda_c)
    : DomainError([&] {
        std::ostringstream os;
        os.precision(12);
        os << "lambda = " << lambda << " is not below the critical value lambda_c = " << lambda_c;
        return os.str();
      }()),
      lambda_(lambda),
      lambda_c_(lambda_c) {}

ContactAngle::ContactAngle(double alpha)
    : alpha_(alpha),
      cos_(std::cos(alpha)),
      one_minus_cos_(2.0 * std::sin(0.5 * alpha) * std::sin(0.5 * alpha)),
      one_plus_cos_(2.0 * std::cos(0.5 * alpha) * std::cos(0.5 * alpha)) {
  // Normal contact: keep cos(alpha) exactly zero.
  if (alpha == kPi / 2) {
    cos_ = 0.0;
    one_minus_cos_ = 1.0;
    one_plus_cos_ = 1.0;
  }
}

ContactAngle ContactAngle::radians(double alpha) {
  if (!(alpha >= 0.0 && alpha <= kPi)) {
    throw DomainError("contact angle must lie in [0, pi] radians");
  }
  return ContactAngle(alpha);
}

ContactAngle ContactAngle::degrees(double alpha_deg) {
  if (!(alpha_deg >= 0.0 && alpha_deg <= 180.0)) {
    throw DomainError("contact angle must lie in [0, 180] degrees");
  }
  if (alpha_deg == 90.0) return ContactAngle(kPi / 2);
  return ContactAngle(alpha_deg * kPi / 180.0);
}

double sin_theta(double r, ContactAngle alpha, double lambda) {
  return r * alpha.cos() + lambda / 8.0 * r * (1.0 - r * r);
}

double sin_theta_strict(double r, ContactAngle alpha, double lambda) {
  const double s = sin_theta(r, alpha, lambda);
  if (std::abs(s) > 1.0) throw SupercriticalError(lambda, critical_params(alpha).lambda_c);
  return s;
}

CriticalPoint critical_params(ContactAngle alpha) {
  // Exact values for the bubble and for normal contact; the trigonometric
  // form is off by an ulp and would shift the supercritical boundary.
  if (alpha.value() == 0.0) return {4.0, 1.0};
  if (alpha.value() == kPi / 2) return {12.0 * std::numbers::sqrt3, 1.0 / std::numbers::sqrt3};
  const double r_c = 1.0 / (2.0 * std::cos((kPi - alpha.value()) / 3.0));
  return {4.0 / (r_c * r_c * r_c), r_c};
}

double lambda_min(ContactAngle alpha) { return 4.0 * alpha.cos(); }

double inflection_radius(ContactAngle alpha, double lambda) {
  if (!(lambda > lambda_min(alpha))) {
    throw DomainError("no interior slope maximum for lambda <= lambda_min = 4 cos(alpha)");
  }
  const double r0_sq = (1.0 + 8.0 / lambda * alpha.cos()) / 3.0;
  if (!(r0_sq > 0.0)) throw DomainError("no interior slope maximum at this lambda");
  return std::sqrt(r0_sq);
}

double max_sin_theta(ContactAngle alpha, double lambda) {
  return sin_theta(inflection_radius(alpha, lambda), alpha, lambda);
}

double h_prime(double r, ContactAngle alpha, double lambda) {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("radius must lie in [0, 1]");
  return SlopeField(alpha, lambda).h_prime(r, 1.0 - r);
}

// ---------------------------------------------------------------------------

SlopeField::SlopeField(ContactAngle alpha, double lambda) : alpha_(alpha), lambda_(lambda) {
  if (!(lambda >= 0.0)) throw DomainError("rotational Bond number must be non-negative");
  if (lambda > 0.0 && lambda > lambda_min(alpha)) {
    const double r0_sq = (1.0 + 8.0 / lambda * alpha.cos()) / 3.0;
    if (r0_sq > 0.0) {
      const double r0 = std::sqrt(r0_sq);
      // s(r0) = lambda r0^3 / 4 follows from s'(r0) = 0.
      peak_ = Peak{r0, 1.0 - lambda * r0 * r0_sq / 4.0};
    }
  }
}

std::optional<double> SlopeField::peak_radius() const {
  if (!peak_) return std::nullopt;
  return peak_->r0;
}

std::optional<double> SlopeField::peak_gap() const {
  if (!peak_) return std::nullopt;
  return peak_->gap;
}

double SlopeField::sin_theta(double r) const { return rotameniscus::sin_theta(r, alpha_, lambda_); }

double SlopeField::one_minus_sin(double r, double u) const {
  if (peak_) {
    const double x = r - peak_->r0;
    return peak_->gap + (3.0 * lambda_ * peak_->r0 / 8.0 + lambda_ / 8.0 * x) * x * x;
  }
  const double c = alpha_.cos();
  return alpha_.one_minus_cos() + u * ((c - lambda_ / 4.0) + u * (3.0 * lambda_ / 8.0 - lambda_ / 8.0 * u));
}

double SlopeField::one_plus_sin(double u) const {
  const double c = alpha_.cos();
  return alpha_.one_plus_cos() - u * c + lambda_ / 8.0 * u * (2.0 + u * (u - 3.0));
}

double SlopeField::h_prime(double r, double u) const {
  const double s = sin_theta(r);
  const double oms = one_minus_sin(r, u);
  const double ops = one_plus_sin(u);
  if (oms <= 0.0 || ops <= 0.0) {
    if (u == 0.0) {
      return s > 0.0 ? std::numeric_limits<double>::infinity()
                     : -std::numeric_limits<double>::infinity();
    }
    throw SingularPointError("slope is vertical at an interior radius (lambda at or above lambda_c)");
  }
  return s / std::sqrt(oms * ops);
}

// ---------------------------------------------------------------------------

double integrate_slope(ContactAngle alpha, double lambda, Weight weight,
                       const quadrature::Options& opt) {
  require_subcritical(alpha, lambda);
  const SlopeField field(alpha, lambda);

  if (field.has_interior_peak()) {
    const double r0 = *field.peak_radius();
    const double gap = *field.peak_gap();
    const bool subtract = gap < kPeakSubtractionGap;
    const double c = 2.0 * gap;
    const double d = 0.75 * lambda * r0;
    const double wp = subtract ? weight_at(weight, r0, 1.0 - r0) : 0.0;
    auto peak = [&](double r) {
      if (!subtract) return 0.0;
      const double x = r - r0;
      return wp / std::sqrt(c + d * x * x);
    };
    auto inner = [&](double r) {
      const double u = 1.0 - r;
      return weight_at(weight, r, u) * field.h_prime(r, u) - peak(r);
    };
    auto outer = [&](double t) {
      const double u = t * t;
      const double r = 1.0 - u;
      return 2.0 * t * (weight_at(weight, r, u) * field.h_prime(r, u) - peak(r));
    };
    double total = quadrature::integrate(inner, 0.0, r0, opt).value;
    total += quadrature::integrate(outer, 0.0, std::sqrt(1.0 - r0), opt).value;
    if (subtract) {
      const double k = std::sqrt(d / c);
      total += wp / std::sqrt(d) * (std::asinh((1.0 - r0) * k) + std::asinh(r0 * k));
    }
    return total;
  }

  // Monotone sin(theta); only the wall r = 1 can be singular.
  const double wall_slope_gap = 1.0 - lambda / 4.0;
  const bool subtract = alpha.one_minus_cos() == 0.0 && wall_slope_gap < kPeakSubtractionGap &&
                        weight != Weight::one_minus_r_squared;
  const double p = 2.0 * wall_slope_gap;
  const double q = 0.75 * lambda;
  const double wp = subtract ? weight_at(weight, 1.0, 0.0) : 0.0;
  auto integrand = [&](double t) {
    const double u = t * t;
    const double r = 1.0 - u;
    double v = 2.0 * t * weight_at(weight, r, u) * field.h_prime(r, u);
    if (subtract) v -= 2.0 * wp / std::sqrt(p + q * u);
    return v;
  };
  double total = quadrature::integrate(integrand, 0.0, 1.0, opt).value;
  if (subtract) {
    const double sq = std::sqrt(q);
    total += wp / sq * std::log((2.0 * q + p + 2.0 * sq * std::sqrt(q + p)) / p);
  }
  return total;
}

double axial_length_quadrature(const Interface& iface, double lambda, const quadrature::Options& opt) {
  const ContactAngle alpha =
      iface.geometry == Geometry::bubble ? ContactAngle::radians(0.0) : iface.alpha;
  return iface.length_factor() * integrate_slope(alpha, lambda, Weight::one, opt);
}

// ---------------------------------------------------------------------------

std::vector<double> make_grid(std::size_t nodes, Clustering clustering) {
  if (nodes < 2) throw DomainError("profile grid needs at least two nodes");
  std::vector<double> r(nodes);
  const double last = static_cast<double>(nodes - 1);
  for (std::size_t i = 0; i < nodes; ++i) {
    const double xi = static_cast<double>(i) / last;
    switch (clustering) {
      case Clustering::uniform:
        r[i] = xi;
        break;
      case Clustering::cosine_both_ends:
        r[i] = 0.5 * (1.0 - std::cos(kPi * xi));
        break;
      case Clustering::cosine_outer:
        r[i] = std::sin(0.5 * kPi * xi);
        break;
    }
  }
  r.front() = 0.0;
  r.back() = 1.0;
  return r;
}

double ShapeProfile::axial_length() const {
  if (samples.empty()) return 0.0;
  const double span = samples.back().h - samples.front().h;
  return geometry == Geometry::bubble ? 2.0 * span : span;
}

std::vector<ProfileSample> ShapeProfile::full_outline() const {
  std::vector<ProfileSample> out(samples);
  if (geometry != Geometry::bubble || samples.empty()) return out;
  const double length = axial_length();
  for (std::size_t i = samples.size() - 1; i-- > 0;) {
    const auto& s = samples[i];
    out.push_back({s.r, length - s.h, -s.sin_theta});
  }
  return out;
}

ShapeProfile profile(const Interface& iface, double lambda, const GridSpec& grid,
                     const quadrature::Options& opt) {
  const bool is_bubble = iface.geometry == Geometry::bubble;
  const ContactAngle alpha = is_bubble ? ContactAngle::radians(0.0) : iface.alpha;
  require_subcritical(alpha, lambda);

  const bool singular_wall = alpha.one_minus_cos() == 0.0;
  const Clustering clustering = grid.clustering.value_or(
      singular_wall ? Clustering::cosine_outer : Clustering::cosine_both_ends);
  const auto nodes = make_grid(grid.nodes, clustering);
  const SlopeField field(alpha, lambda);

  // Each segment is integrated in t = sqrt(1 - r), which is bounded at the wall.
  auto integrand = [&](double t) {
    const double u = t * t;
    return 2.0 * t * field.h_prime(1.0 - u, u);
  };

  ShapeProfile out{iface.geometry, alpha, lambda, grid, clustering, {}};
  out.samples.reserve(nodes.size());
  double h = 0.0;
  out.samples.push_back({0.0, 0.0, 0.0});
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const double t_hi = std::sqrt(1.0 - nodes[i - 1]);
    const double t_lo = std::sqrt(1.0 - nodes[i]);
    auto piece = opt;
    piece.abs_tol = opt.abs_tol / static_cast<double>(nodes.size());
    h += quadrature::integrate(integrand, t_lo, t_hi, piece).value;
    out.samples.push_back({nodes[i], h, field.sin_theta(nodes[i])});
  }

  if (!is_bubble) {
    // integral h r dr = h(1)/2 - (1/2) integral r^2 h' dr for h(0) = 0.
    const double moment = integrate_slope(alpha, lambda, Weight::r_squared, opt);
    const double shift = h - moment;
    for (auto& s : out.samples) s.h -= shift;
  }
  return out;
}

// ---------------------------------------------------------------------------

double MasterShape::master_sin_theta(double r_star) const {
  const double r = r_w * r_star;
  return 12.0 * std::numbers::sqrt3 / 8.0 * (r - r * r * r);
}

double MasterShape::rescaled_sin_theta(double r_star) const {
  return sin_theta(r_star, alpha, lambda_c);
}

MasterShape master_rescale(ContactAngle alpha) {
  const double r_w = 2.0 / std::numbers::sqrt3 * std::cos((kPi - alpha.value()) / 3.0);
  return {alpha, r_w, critical_params(alpha).lambda_c};
}

}  // namespace rotameniscus
