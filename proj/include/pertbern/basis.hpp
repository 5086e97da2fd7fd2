#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pertbern {

/// The sequence a1(n) driving the first ("M,1") perturbation of the Bernstein
/// recursion. a0(n) is always derived as (1 - a1(n)) / 2 so that the perturbed
/// basis keeps summing to one.
class CoefficientScheme {
 public:
  CoefficientScheme(std::function<double(int)> a1, std::optional<double> limit,
                    std::string description);

  /// a1(n) = c for every n; the limit is c.
  static CoefficientScheme constant(double c);
  /// a1(n) = 1/n, with limit 0.
  static CoefficientScheme reciprocal();
  /// a1 = -1: the perturbed basis coincides with the classical one.
  static CoefficientScheme classical() { return constant(-1.0); }

  double a1(int n) const { return a1_(n); }
  double a0(int n) const { return 0.5 * (1.0 - a1_(n)); }
  /// a(x, n) = a1(n) x + a0(n); replaces (1 - x) in the one-step recursion.
  double a(double x, int n) const { return a1(n) * x + a0(n); }

  const std::optional<double>& limit() const { return limit_; }
  /// |a1(n) - L1|; throws if the scheme has no limit.
  double limit_gap(int n) const;

  const std::string& description() const { return description_; }

 private:
  std::function<double(int)> a1_;
  std::optional<double> limit_;
  std::string description_;
};

/// Coefficients of the second ("M,2") perturbation, which replaces the
/// two-step recursion weights (1-x)^2, 2x(1-x), x^2 by b(x,n), d0(n)x(1-x),
/// b(1-x,n) with b(x,n) = b2(n)x^2 + b1(n)x + b0(n).
///
/// The defaults are the concrete instance b(x,n) = (n/2)x^2 + (-1-n/2)x + 1,
/// d0(n) = n. Only that instance is known to be a partition of unity; other
/// choices are accepted without any normalization check.
struct M2Coefficients {
  std::function<double(int)> b2 = [](int n) { return 0.5 * n; };
  std::function<double(int)> b1 = [](int n) { return -1.0 - 0.5 * n; };
  std::function<double(int)> b0 = [](int) { return 1.0; };
  std::function<double(int)> d0 = [](int n) { return static_cast<double>(n); };

  double b(double x, int n) const { return (b2(n) * x + b1(n)) * x + b0(n); }
};

/// p_{n,k}(x) = C(n,k) x^k (1-x)^(n-k); zero for k outside [0, n].
double eval_basis(int n, int k, double x);

/// Whole row p_{n,0..n}(x) via the one-step recursion.
std::vector<double> basis_row(int n, double x);

/// Whole row evaluated independently per entry in the logarithmic domain.
/// O(n) per call; requires 0 < x < 1.
std::vector<double> basis_row_log(int n, double x);

/// p^{M,1}_{n,k}(x). May be negative when the scheme is not positive.
double eval_basis_m1(int n, int k, double x, const CoefficientScheme& s);
std::vector<double> basis_row_m1(int n, double x, const CoefficientScheme& s);

/// p^{M,2}_{n,k}(x); n >= 2.
double eval_basis_m2(int n, int k, double x, const M2Coefficients& c = {});
std::vector<double> basis_row_m2(int n, double x, const M2Coefficients& c = {});

/// True iff a(., n) >= 0 on [0, 1], i.e. a0(n) >= 0 and a0(n) + a1(n) >= 0.
bool is_positive(const CoefficientScheme& s, int n);

}  // namespace pertbern
