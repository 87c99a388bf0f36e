#include "rotameniscus/approximant.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "rotameniscus/asymptotics.hpp"
#include "rotameniscus/bubble_series.hpp"
#include "rotameniscus/errors.hpp"
#include "rotameniscus/format.hpp"
#include "rotameniscus/meniscus_series.hpp"

namespace rotameniscus {

namespace {

// Dense solve with partial pivoting; the systems are at most (N+1) x (N+1).
template <class Real>
std::vector<Real> solve(std::vector<std::vector<Real>> M, std::vector<Real> b) {
  using std::abs;
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t row = col + 1; row < n; ++row) {
      if (abs(M[row][col]) > abs(M[piv][col])) piv = row;
    }
    if (M[piv][col] == 0) throw NumericalError("approximant matching system is singular");
    std::swap(M[piv], M[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      const Real f = M[row][col] / M[col][col];
      if (f == 0) continue;
      for (std::size_t k = col; k < n; ++k) M[row][k] -= f * M[col][k];
      b[row] -= f * b[col];
    }
  }
  std::vector<Real> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Real s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= M[i][k] * x[k];
    x[i] = s / M[i][i];
  }
  return x;
}

// Unknowns are the scaled A~_n = A_n lambda_c^n, so the matrix entries are
// (-1)^k C(n, k) and the lambda_c^n growth moves into the right-hand side
// H_k lambda_c^k - [k = 0](A_L + B_L ln lambda_c) + [k >= 1] B_L / k.
template <class Real>
std::vector<double> scaled_solution(const std::vector<ExtendedReal>& H, double lambda_c, double A_L,
                                    double B_L, std::size_t N, ApproximantMode mode) {
  const std::size_t first = mode == ApproximantMode::pinned_constant ? 1 : 0;
  const std::size_t rows = N + 1 - first;
  const Real lc(lambda_c);
  std::vector<std::vector<Real>> M(rows, std::vector<Real>(rows, Real(0)));
  std::vector<Real> rhs(rows);
  Real lc_pow(1);
  for (std::size_t k = 0; k < rows; ++k) {
    for (std::size_t n = std::max(k, first); n <= N; ++n) {
      // C(n, k) exactly representable for the orders used here.
      Real c(1);
      for (std::size_t j = 1; j <= k; ++j) c = c * Real(n - k + j) / Real(j);
      M[k][n - first] = (k % 2 == 0) ? c : Real(-c);
    }
    Real r = Real(H[k]) * lc_pow;
    if (k == 0) {
      using std::log;
      r -= Real(A_L) + Real(B_L) * log(lc);
    } else {
      r += Real(B_L) / Real(k);
    }
    rhs[k] = r;
    lc_pow *= lc;
  }
  auto x = solve(std::move(M), std::move(rhs));
  std::vector<double> A(N + 1, 0.0);
  Real scale(1);
  for (std::size_t i = 0; i < first; ++i) scale /= lc;
  for (std::size_t n = first; n <= N; ++n) {
    A[n] = static_cast<double>(x[n - first] * scale);
    scale /= lc;
  }
  return A;
}

}  // namespace

std::size_t Approximant::matched_order() const {
  const std::size_t n = order();
  return mode == ApproximantMode::pinned_constant ? n - 1 : n;
}

Approximant build_approximant(const std::vector<ExtendedReal>& coefficients, double lambda_c,
                              double A_L, double B_L, std::size_t N, const BuildOptions& opt) {
  if (N < 1) throw DomainError("approximant order N must be at least 1");
  if (coefficients.size() < N + 1) throw DomainError("series supplies fewer than N + 1 coefficients");
  if (!(lambda_c > 0.0)) throw DomainError("lambda_c must be positive");
  const bool extended = opt.precision == SolvePrecision::extended ||
                        (opt.precision == SolvePrecision::automatic && N > 12);
  Approximant out;
  out.lambda_c = lambda_c;
  out.A_L = A_L;
  out.B_L = B_L;
  out.mode = opt.mode;
  out.A = extended ? scaled_solution<ExtendedReal>(coefficients, lambda_c, A_L, B_L, N, opt.mode)
                   : scaled_solution<double>(coefficients, lambda_c, A_L, B_L, N, opt.mode);
  return out;
}

Approximant build_approximant(const PowerSeries& series, double lambda_c, double A_L, double B_L,
                              std::size_t N, const BuildOptions& opt) {
  std::vector<ExtendedReal> H(series.coefficients.begin(), series.coefficients.end());
  return build_approximant(H, lambda_c, A_L, B_L, N, opt);
}

Approximant meniscus_approximant(std::size_t N, const BuildOptions& opt) {
  const auto law = meniscus_law();
  return build_approximant(meniscus_coefficients_extended(N), law.lambda_c, law.constant,
                           law.log_coefficient, N, opt);
}

Approximant bubble_approximant(std::size_t N, const BuildOptions& opt) {
  const auto law = bubble_law();
  return build_approximant(bubble_power_series(N), law.lambda_c, law.constant, law.log_coefficient,
                           N, opt);
}

double eval_approximant(const Approximant& appr, double lambda) {
  if (!(lambda >= 0.0)) throw DomainError("rotational Bond number must be non-negative");
  if (!(lambda < appr.lambda_c)) throw SupercriticalError(lambda, appr.lambda_c);
  const double y = appr.lambda_c - lambda;
  double poly = 0.0;
  for (std::size_t n = appr.A.size(); n-- > 0;) poly = poly * y + appr.A[n];
  return poly + appr.A_L + appr.B_L * std::log(y);
}

std::vector<ExtendedReal> taylor_coefficients(const Approximant& appr, std::size_t k_max) {
  const ExtendedReal lc(appr.lambda_c);
  std::vector<ExtendedReal> out(k_max + 1, ExtendedReal(0));
  for (std::size_t k = 0; k <= k_max; ++k) {
    ExtendedReal sum(0);
    for (std::size_t n = k; n < appr.A.size(); ++n) {
      ExtendedReal c(1);
      for (std::size_t j = 1; j <= k; ++j) c = c * ExtendedReal(n - k + j) / ExtendedReal(j);
      sum += ExtendedReal(appr.A[n]) * c * pow(lc, static_cast<int>(n - k));
    }
    if (k % 2 == 1) sum = -sum;
    if (k == 0) {
      sum += ExtendedReal(appr.A_L) + ExtendedReal(appr.B_L) * log(lc);
    } else {
      sum -= ExtendedReal(appr.B_L) / (ExtendedReal(k) * pow(lc, static_cast<int>(k)));
    }
    out[k] = sum;
  }
  return out;
}

ErrorScan error_scan(const Approximant& appr, const std::function<double(double)>& oracle,
                     const std::vector<double>& lambda_grid) {
  ErrorScan scan;
  scan.points.reserve(lambda_grid.size());
  for (double lambda : lambda_grid) {
    const double a = eval_approximant(appr, lambda);
    const double ref = oracle(lambda);
    const double err = std::abs(a - ref);
    scan.points.push_back({lambda, a, ref, err});
    if (err > scan.max_error || scan.points.size() == 1) {
      scan.max_error = err;
      scan.argmax = lambda;
    }
  }
  return scan;
}

namespace {

constexpr const char* kHeader = "rotameniscus-approximant 1";

std::string exact(double x) { return format_number(x, 17); }

}  // namespace

std::string serialize(const Approximant& appr) {
  std::ostringstream os;
  os << kHeader << '\n';
  os << "mode " << (appr.mode == ApproximantMode::pinned_constant ? "pinned_constant" : "free_constant")
     << '\n';
  os << "lambda_c " << exact(appr.lambda_c) << '\n';
  os << "A_L " << exact(appr.A_L) << '\n';
  os << "B_L " << exact(appr.B_L) << '\n';
  os << "N " << appr.order() << '\n';
  for (std::size_t n = 0; n < appr.A.size(); ++n) os << "A " << n << ' ' << exact(appr.A[n]) << '\n';
  return os.str();
}

Approximant deserialize(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != kHeader) throw DomainError("not an approximant record");
  auto number = [](const std::string& s) {
    auto v = parse_number(s);
    if (!v) throw DomainError("approximant record: bad number '" + s + "'");
    return *v;
  };
  Approximant appr;
  std::map<std::size_t, double> coeffs;
  long long order = -1;
  bool have_lc = false, have_al = false, have_bl = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key, a, b, extra;
    ls >> key >> a;
    if (key == "A") {
      ls >> b;
      const double idx = number(a);
      if (idx < 0 || idx != std::floor(idx)) throw DomainError("approximant record: bad index");
      coeffs[static_cast<std::size_t>(idx)] = number(b);
    } else if (key == "mode") {
      if (a == "pinned_constant") {
        appr.mode = ApproximantMode::pinned_constant;
      } else if (a == "free_constant") {
        appr.mode = ApproximantMode::free_constant;
      } else {
        throw DomainError("approximant record: unknown mode '" + a + "'");
      }
    } else if (key == "lambda_c") {
      appr.lambda_c = number(a);
      have_lc = true;
    } else if (key == "A_L") {
      appr.A_L = number(a);
      have_al = true;
    } else if (key == "B_L") {
      appr.B_L = number(a);
      have_bl = true;
    } else if (key == "N") {
      order = static_cast<long long>(number(a));
    } else {
      throw DomainError("approximant record: unknown key '" + key + "'");
    }
    if (ls >> extra) throw DomainError("approximant record: trailing text on line '" + line + "'");
  }
  if (!have_lc || !have_al || !have_bl || order < 1) {
    throw DomainError("approximant record: missing fields");
  }
  if (coeffs.size() != static_cast<std::size_t>(order) + 1 || coeffs.rbegin()->first != static_cast<std::size_t>(order)) {
    throw DomainError("approximant record: expected A_0..A_N");
  }
  for (const auto& [n, v] : coeffs) appr.A.push_back(v);
  return appr;
}

}  // namespace rotameniscus
