#include "pertbern/basis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

#include "pertbern/error.hpp"

namespace pertbern {

CoefficientScheme::CoefficientScheme(std::function<double(int)> a1,
                                     std::optional<double> limit,
                                     std::string description)
    : a1_(std::move(a1)), limit_(limit), description_(std::move(description)) {}

CoefficientScheme CoefficientScheme::constant(double c) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "a1=%.17g", c);
  return CoefficientScheme([c](int) { return c; }, c, buf);
}

CoefficientScheme CoefficientScheme::reciprocal() {
  return CoefficientScheme([](int n) { return 1.0 / n; }, 0.0, "a1=1/n");
}

double CoefficientScheme::limit_gap(int n) const {
  if (!limit_) throw ConfigError("scheme '" + description_ + "' has no limit L1");
  return std::abs(*limit_ - a1(n));
}

namespace {

// Small n: the binomial coefficient is an exact integer in double.
constexpr int kDirectLimit = 30;

double binomial(int n, int k) {
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

double eval_basis(int n, int k, double x) {
  if (n < 0 || k < 0 || k > n) return 0.0;
  if (x == 0.0) return k == 0 ? 1.0 : 0.0;
  if (x == 1.0) return k == n ? 1.0 : 0.0;
  if (n <= kDirectLimit) {
    return binomial(n, k) * std::pow(x, k) * std::pow(1.0 - x, n - k);
  }
  const double log_c = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
  return std::exp(log_c + k * std::log(x) + (n - k) * std::log1p(-x));
}

std::vector<double> basis_row(int n, double x) {
  if (n < 0) return {};
  std::vector<double> row(static_cast<std::size_t>(n) + 1, 0.0);
  row[0] = 1.0;
  const double y = 1.0 - x;
  for (int m = 1; m <= n; ++m) {
    for (int k = m; k >= 1; --k) row[k] = y * row[k] + x * row[k - 1];
    row[0] *= y;
  }
  return row;
}

std::vector<double> basis_row_log(int n, double x) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("basis_row_log requires 0 < x < 1");
  std::vector<double> row(static_cast<std::size_t>(n) + 1);
  const double lx = std::log(x);
  const double ly = std::log1p(-x);
  const double lg_n = std::lgamma(n + 1.0);
  for (int k = 0; k <= n; ++k) {
    const double log_c = lg_n - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
    row[k] = std::exp(log_c + k * lx + (n - k) * ly);
  }
  return row;
}

double eval_basis_m1(int n, int k, double x, const CoefficientScheme& s) {
  if (n < 1) throw DomainError("eval_basis_m1 requires n >= 1");
  if (k < 0 || k > n) return 0.0;
  const double left = s.a(x, n);
  const double right = s.a(1.0 - x, n);
  return left * eval_basis(n - 1, k, x) + right * eval_basis(n - 1, k - 1, x);
}

std::vector<double> basis_row_m1(int n, double x, const CoefficientScheme& s) {
  if (n < 1) throw DomainError("basis_row_m1 requires n >= 1");
  const std::vector<double> prev = basis_row(n - 1, x);
  const double left = s.a(x, n);
  const double right = s.a(1.0 - x, n);
  std::vector<double> row(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    if (k <= n - 1) row[k] += left * prev[k];
    if (k >= 1) row[k] += right * prev[k - 1];
  }
  return row;
}

double eval_basis_m2(int n, int k, double x, const M2Coefficients& c) {
  if (n < 2) throw DomainError("eval_basis_m2 requires n >= 2");
  if (k < 0 || k > n) return 0.0;
  return c.b(x, n) * eval_basis(n - 2, k, x) +
         c.d0(n) * x * (1.0 - x) * eval_basis(n - 2, k - 1, x) +
         c.b(1.0 - x, n) * eval_basis(n - 2, k - 2, x);
}

std::vector<double> basis_row_m2(int n, double x, const M2Coefficients& c) {
  if (n < 2) throw DomainError("basis_row_m2 requires n >= 2");
  const std::vector<double> prev = basis_row(n - 2, x);
  const double w0 = c.b(x, n);
  const double w1 = c.d0(n) * x * (1.0 - x);
  const double w2 = c.b(1.0 - x, n);
  std::vector<double> row(static_cast<std::size_t>(n) + 1, 0.0);
  for (int j = 0; j <= n - 2; ++j) {
    row[j] += w0 * prev[j];
    row[j + 1] += w1 * prev[j];
    row[j + 2] += w2 * prev[j];
  }
  return row;
}

bool is_positive(const CoefficientScheme& s, int n) {
  if (n < 1) throw DomainError("is_positive requires n >= 1");
  const double a0 = s.a0(n);
  return a0 >= 0.0 && a0 + s.a1(n) >= 0.0;
}

}  // namespace pertbern
