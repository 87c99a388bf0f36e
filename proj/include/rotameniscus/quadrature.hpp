#pragma once

// Globally adaptive 21-point Gauss-Kronrod quadrature, scalar and
// vector-valued. The interval with the largest error estimate is bisected
// until the summed estimate satisfies max(abs_tol, rel_tol * |I|).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <span>
#include <vector>

#include "rotameniscus/errors.hpp"

namespace rotameniscus::quadrature {

struct Options {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  std::size_t max_intervals = 4000;
  bool throw_on_failure = true;
};

struct Result {
  double value = 0.0;
  double error = 0.0;
  std::size_t intervals = 0;
  bool converged = false;
};

namespace detail {

// Kronrod abscissae (descending); odd indices are the Gauss nodes.
inline constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gk21(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kron = kWgk[10] * fc;
  double gauss = 0.0;
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = h * kXgk[j];
    const double sum = f(c - dx) + f(c + dx);
    kron += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  kron *= h;
  gauss *= h;
  return {a, b, kron, std::abs(kron - gauss)};
}

}  // namespace detail

/// Integrate f over [a, b].
template <class F>
Result integrate(const F& f, double a, double b, const Options& opt = {}) {
  if (a == b) return {0.0, 0.0, 0, true};
  std::priority_queue<detail::Panel> heap;
  auto first = detail::gk21(f, a, b);
  double total = first.value;
  double total_err = first.error;
  heap.push(first);
  while (true) {
    const double target = std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
    if (total_err <= target) break;
    if (heap.size() >= opt.max_intervals) {
      if (opt.throw_on_failure) {
        throw QuadratureError("adaptive quadrature: tolerance not met (estimate " +
                              std::to_string(total_err) + ")");
      }
      return {total, total_err, heap.size(), false};
    }
    const auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Interval cannot be split further in double precision.
      if (opt.throw_on_failure) throw QuadratureError("adaptive quadrature: interval underflow");
      return {total, total_err, heap.size(), false};
    }
    auto left = detail::gk21(f, worst.a, mid);
    auto right = detail::gk21(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed the drift of the running updates.
  double sum = 0.0, err = 0.0;
  const std::size_t n = heap.size();
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return {sum, err, n, true};
}

/// Sum of integrals over consecutive breakpoints; tolerances apply to each piece.
template <class F>
Result integrate(const F& f, std::span<const double> breaks, const Options& opt = {}) {
  Result out{0.0, 0.0, 0, true};
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    auto r = integrate(f, breaks[i], breaks[i + 1], opt);
    out.value += r.value;
    out.error += r.error;
    out.intervals += r.intervals;
    out.converged = out.converged && r.converged;
  }
  return out;
}

struct VectorResult {
  std::vector<double> values;
  std::vector<double> errors;
  std::size_t intervals = 0;
  bool converged = false;
};

/// Vector-valued integrand: f(x, out) fills out[0..dim). Every component must
/// meet max(abs_tol, rel_tol * |I_k|).
template <class F>
VectorResult integrate_vector(const F& f, std::size_t dim, double a, double b,
                              const Options& opt = {}) {
  struct VPanel {
    double a, b;
    std::vector<double> value, error;
    double score;
  };
  std::vector<double> fx(dim), fy(dim);
  auto rule = [&](double lo, double hi) {
    VPanel p{lo, hi, std::vector<double>(dim, 0.0), std::vector<double>(dim, 0.0), 0.0};
    std::vector<double> gauss(dim, 0.0);
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    f(c, fx);
    for (std::size_t k = 0; k < dim; ++k) p.value[k] = detail::kWgk[10] * fx[k];
    for (std::size_t j = 0; j < 10; ++j) {
      const double dx = h * detail::kXgk[j];
      f(c - dx, fx);
      f(c + dx, fy);
      for (std::size_t k = 0; k < dim; ++k) {
        const double s = fx[k] + fy[k];
        p.value[k] += detail::kWgk[j] * s;
        if (j % 2 == 1) gauss[k] += detail::kWg[j / 2] * s;
      }
    }
    for (std::size_t k = 0; k < dim; ++k) {
      p.value[k] *= h;
      p.error[k] = std::abs(p.value[k] - h * gauss[k]);
    }
    return p;
  };

  std::vector<VPanel> panels;
  panels.push_back(rule(a, b));
  std::vector<double> total(panels[0].value), total_err(panels[0].error);
  auto rescore = [&](VPanel& p) {
    p.score = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      const double target = std::max(opt.abs_tol, opt.rel_tol * std::abs(total[k]));
      p.score = std::max(p.score, p.error[k] / target);
    }
  };
  while (true) {
    double worst_ratio = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      const double target = std::max(opt.abs_tol, opt.rel_tol * std::abs(total[k]));
      worst_ratio = std::max(worst_ratio, total_err[k] / target);
    }
    if (worst_ratio <= 1.0) break;
    if (panels.size() >= opt.max_intervals) {
      if (opt.throw_on_failure) throw QuadratureError("vector quadrature: tolerance not met");
      return {total, total_err, panels.size(), false};
    }
    // Bisect every panel within a factor 4 of the worst one; rescoring all
    // panels after each single split is O(panels * dim).
    double max_score = 0.0;
    for (auto& p : panels) {
      rescore(p);
      max_score = std::max(max_score, p.score);
    }
    std::vector<VPanel> next;
    next.reserve(panels.size() * 2);
    for (auto& p : panels) {
      if (p.score < 0.25 * max_score) {
        next.push_back(std::move(p));
        continue;
      }
      const double mid = 0.5 * (p.a + p.b);
      auto left = rule(p.a, mid);
      auto right = rule(mid, p.b);
      for (std::size_t k = 0; k < dim; ++k) {
        total[k] += left.value[k] + right.value[k] - p.value[k];
        total_err[k] += left.error[k] + right.error[k] - p.error[k];
      }
      next.push_back(std::move(left));
      next.push_back(std::move(right));
    }
    panels = std::move(next);
  }
  std::vector<double> sum(dim, 0.0), err(dim, 0.0);
  for (const auto& p : panels) {
    for (std::size_t k = 0; k < dim; ++k) {
      sum[k] += p.value[k];
      err[k] += p.error[k];
    }
  }
  return {sum, err, panels.size(), true};
}

}  // namespace rotameniscus::quadrature
