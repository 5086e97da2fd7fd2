#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "pertbern/basis.hpp"
#include "pertbern/corpus.hpp"
#include "pertbern/moduli.hpp"
#include "pertbern/operators.hpp"
#include "pertbern/quadrature.hpp"

namespace pertbern {

enum class TheoremId {
  B_CLASSIC_DIRECT,
  B_M1_DIRECT,
  B_M1_UNIFORM,
  B_M2_MOMENTS,
  B_M2_DIRECT,
  K_CLASSIC_DIRECT,
  K_M1_DIRECT,
  D_CLASSIC_VORON,
  D_M1_DIRECT,
  U_M1_DIRECT,
  VORON_B_M1,
  VORON_K_M1,
  VORON_D_M1,
  VORON_U_M1,
  DERIV_BOUND_B,
};

std::string_view to_string(TheoremId t);
TheoremId parse_theorem(std::string_view text);
const std::vector<TheoremId>& all_theorems();

/// Derivatives f must carry for the theorem to apply.
int required_smoothness(TheoremId t);
int theorem_min_n(TheoremId t);
bool theorem_uses_scheme(TheoremId t);

enum class CheckStatus { Pass, Fail, Inconclusive, Skipped };
std::string_view to_string(CheckStatus s);
CheckStatus parse_status(std::string_view text);

/// b = F(e1) and mu2 = F((e1 - b)^2) / 2 of a positive linear functional.
struct FunctionalStats {
  double b = 0.0;
  double mu2 = 0.0;
};

/// Stats from the functional's values on e0, e1, e2.
FunctionalStats functional_stats(double f_e0, double f_e1, double f_e2);

/// Pointwise comparison of the two sides of one inequality.
///
/// status is Pass when worst_margin >= -tolerance. A negative margin is a
/// Fail only when every modulus involved was exact; otherwise it is
/// Inconclusive, because grid moduli underestimate the right-hand side.
struct BoundReport {
  TheoremId theorem = TheoremId::B_CLASSIC_DIRECT;
  std::string function;
  int n = 0;
  std::string scheme = "none";
  std::vector<double> x_grid;
  std::vector<double> lhs;
  std::vector<double> rhs;
  double worst_margin = 0.0;
  bool moduli_exact = true;
  double tolerance = 1e-10;
  CheckStatus status = CheckStatus::Skipped;
  std::string note;

  bool pass() const { return status == CheckStatus::Pass; }
  /// Fills worst_margin and status from lhs/rhs.
  void finalize();
};

/// n [L_n f - f](x) minus its limit, over increasing n.
struct ConvergenceReport {
  OperatorId op;
  std::string function;
  std::string scheme = "none";
  double x = 0.0;
  std::vector<int> n_list;
  std::vector<double> scaled_error;
  /// Least-squares slope of log|scaled_error| against log n over the largest
  /// half of n_list; empty when the errors sit at roundoff level.
  std::optional<double> fitted_rate;
  std::string limit_formula;
};

/// Limit of n [L_n f - f](x) for a classic or M1 operator. For M1 the scheme
/// must carry its limit L1; classic variants use L1 = -1.
double voronovskaya_limit(const OperatorId& op, const TestFunction& f, double x,
                          const std::optional<CoefficientScheme>& scheme);
std::string voronovskaya_limit_formula(const OperatorId& op);

/// sigma_n(x) for the Durrmeyer and genuine direct estimates (closed forms).
double sigma_durrmeyer(int n, double x);
double sigma_genuine(int n, double x);

/// Durrmeyer central moments of order 1..4 (closed forms).
double durrmeyer_central_moment(int n, int order, double x);

std::vector<double> uniform_grid(int points);

struct VerifyConfig {
  std::vector<double> x_grid = uniform_grid(101);
  ModulusOptions moduli;
  QuadratureOptions quad;
  double tolerance = 1e-10;
  /// Tolerance of the sigma_n cross-checks.
  double sigma_tolerance = 1e-12;
};

/// Runs theorem checks. Holds a cache of moduli and sup norms, so one
/// instance should not be shared between threads.
class Verifier {
 public:
  explicit Verifier(VerifyConfig config = {});

  const VerifyConfig& config() const { return config_; }

  /// Direct estimates: B_CLASSIC_DIRECT, B_M1_DIRECT, B_M1_UNIFORM, B_M2_DIRECT,
  /// K_CLASSIC_DIRECT, K_M1_DIRECT, D_CLASSIC_VORON, D_M1_DIRECT, U_M1_DIRECT.
  BoundReport check_direct(TheoremId t, const TestFunction& f, int n,
                           const std::optional<CoefficientScheme>& scheme = std::nullopt);

  /// Quantitative Voronovskaya bounds VORON_{B,K,D,U}_M1.
  BoundReport check_voronovskaya_quantitative(TheoremId t, const TestFunction& f, int n,
                                              const CoefficientScheme& scheme);

  ConvergenceReport check_voronovskaya_limit(
      const OperatorId& op, const TestFunction& f, double x, const std::vector<int>& n_list,
      const std::optional<CoefficientScheme>& scheme = std::nullopt);

  /// M2 moments, Durrmeyer central moments and the sigma_n cross-checks.
  std::vector<BoundReport> check_moment_identities(const std::vector<int>& n_list);
  std::vector<BoundReport> check_m2_moments(int n);
  std::vector<BoundReport> check_durrmeyer_moments(int n);
  std::vector<BoundReport> check_sigma(int n);

  /// |(B_n f)'(x)| <= n omega1(f; 1/n) <= ||f'||.
  BoundReport check_derivative_bound(const TestFunction& f, int n);

  /// Dispatches on the theorem kind.
  BoundReport check(TheoremId t, const TestFunction& f, int n,
                    const std::optional<CoefficientScheme>& scheme = std::nullopt);

 private:
  // omega of f^(derivative) with the step clamped to the modulus' natural
  // range; clears `exact` when the value is a grid estimate.
  double w1(const TestFunction& f, int derivative, double delta, bool& exact);
  double w2(const TestFunction& f, int derivative, double delta, bool& exact);
  double sup(const TestFunction& f, int derivative);

  BoundReport skeleton(TheoremId t, const TestFunction& f, int n,
                       const std::optional<CoefficientScheme>& scheme) const;
  std::optional<std::string> precondition_failure(TheoremId t, const TestFunction& f, int n,
                                                  const std::optional<CoefficientScheme>& scheme) const;

  VerifyConfig config_;
  std::map<std::tuple<std::string, int, int, double>, ModulusEstimate> moduli_cache_;
  std::map<std::pair<std::string, int>, double> sup_cache_;
};

/// Which checks a suite runs.
struct SuiteConfig {
  std::vector<TheoremId> theorems = all_theorems();
  std::vector<std::string> functions;  // empty: whole corpus
  std::vector<int> n_list = {4, 8, 16, 32, 64};
  std::vector<CoefficientScheme> schemes = {
      CoefficientScheme::constant(-1.0), CoefficientScheme::constant(0.0),
      CoefficientScheme::constant(1.0), CoefficientScheme::reciprocal()};
};

/// Every (theorem, function, n, scheme) combination, in canonical order.
/// B_M2_MOMENTS expands to the M2 moment reports for each n.
std::vector<BoundReport> run_suite(Verifier& verifier, const SuiteConfig& suite);

}  // namespace pertbern
