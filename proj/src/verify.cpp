#include "pertbern/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include "pertbern/error.hpp"

namespace pertbern {

namespace {

struct TheoremInfo {
  TheoremId id;
  std::string_view name;
  int smoothness;  // derivatives f must carry
  int min_n;
  bool scheme;  // needs a CoefficientScheme
};

constexpr std::array<TheoremInfo, 15> kTheorems{{
    {TheoremId::B_CLASSIC_DIRECT, "B_CLASSIC_DIRECT", 0, 1, false},
    {TheoremId::B_M1_DIRECT, "B_M1_DIRECT", 0, 1, true},
    {TheoremId::B_M1_UNIFORM, "B_M1_UNIFORM", 0, 3, true},
    {TheoremId::B_M2_MOMENTS, "B_M2_MOMENTS", 0, 2, false},
    {TheoremId::B_M2_DIRECT, "B_M2_DIRECT", 0, 3, false},
    {TheoremId::K_CLASSIC_DIRECT, "K_CLASSIC_DIRECT", 0, 1, false},
    {TheoremId::K_M1_DIRECT, "K_M1_DIRECT", 0, 1, true},
    {TheoremId::D_CLASSIC_VORON, "D_CLASSIC_VORON", 2, 1, false},
    {TheoremId::D_M1_DIRECT, "D_M1_DIRECT", 0, 1, true},
    {TheoremId::U_M1_DIRECT, "U_M1_DIRECT", 0, 2, true},
    {TheoremId::VORON_B_M1, "VORON_B_M1", 2, 3, true},
    {TheoremId::VORON_K_M1, "VORON_K_M1", 2, 3, true},
    {TheoremId::VORON_D_M1, "VORON_D_M1", 2, 3, true},
    {TheoremId::VORON_U_M1, "VORON_U_M1", 2, 3, true},
    {TheoremId::DERIV_BOUND_B, "DERIV_BOUND_B", 1, 1, false},
}};

const TheoremInfo& info(TheoremId t) {
  return kTheorems[static_cast<std::size_t>(t)];
}

bool is_voronovskaya(TheoremId t) {
  return t == TheoremId::VORON_B_M1 || t == TheoremId::VORON_K_M1 ||
         t == TheoremId::VORON_D_M1 || t == TheoremId::VORON_U_M1;
}

OperatorId m1(Family f) { return {f, Variant::M1}; }
OperatorId classic(Family f) { return {f, Variant::Classic}; }

}  // namespace

std::string_view to_string(TheoremId t) { return info(t).name; }

TheoremId parse_theorem(std::string_view text) {
  for (const auto& t : kTheorems) {
    if (t.name == text) return t.id;
  }
  throw ConfigError("unknown theorem '" + std::string(text) + "'");
}

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> v;
    for (const auto& t : kTheorems) v.push_back(t.id);
    return v;
  }();
  return ids;
}

int required_smoothness(TheoremId t) { return info(t).smoothness; }
int theorem_min_n(TheoremId t) { return info(t).min_n; }
bool theorem_uses_scheme(TheoremId t) { return info(t).scheme; }

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inconclusive: return "inconclusive";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

CheckStatus parse_status(std::string_view text) {
  for (CheckStatus s : {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::Inconclusive,
                        CheckStatus::Skipped}) {
    if (to_string(s) == text) return s;
  }
  throw ConfigError("unknown status '" + std::string(text) + "'");
}

FunctionalStats functional_stats(double f_e0, double f_e1, double f_e2) {
  FunctionalStats s;
  s.b = f_e1 / f_e0;
  // F((e1 - b e0)^2) = F(e2) - 2 b F(e1) + b^2 F(e0)
  s.mu2 = std::max(0.0, 0.5 * (f_e2 - 2.0 * s.b * f_e1 + s.b * s.b * f_e0));
  return s;
}

void BoundReport::finalize() {
  if (status == CheckStatus::Skipped && lhs.empty()) return;
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < lhs.size(); ++i) worst = std::min(worst, rhs[i] - lhs[i]);
  worst_margin = lhs.empty() ? 0.0 : worst;
  if (worst_margin >= -tolerance) {
    status = CheckStatus::Pass;
  } else {
    status = moduli_exact ? CheckStatus::Fail : CheckStatus::Inconclusive;
  }
}

// ---------------------------------------------------------------------------
// Closed forms

double voronovskaya_limit(const OperatorId& op, const TestFunction& f, double x,
                          const std::optional<CoefficientScheme>& scheme) {
  double limit_a1 = -1.0;
  if (op.variant == Variant::M1) {
    if (!scheme || !scheme->limit()) {
      throw ConfigError("the Voronovskaya limit of an M1 operator needs L1 = lim a1(n)");
    }
    limit_a1 = *scheme->limit();
  } else if (op.variant == Variant::M2) {
    throw ConfigError("no Voronovskaya limit is available for the M2 variant");
  }
  const double X = x * (1.0 - x);
  const double Xp = 1.0 - 2.0 * x;
  const double d1 = f.derivative(1, x);
  const double d2 = f.derivative(2, x);
  switch (op.family) {
    case Family::Bernstein: return 0.5 * X * d2 + 0.5 * Xp * (1.0 + limit_a1) * d1;
    case Family::Kantorovich: return 0.5 * X * d2 + 0.5 * Xp * (2.0 + limit_a1) * d1;
    case Family::Durrmeyer: return X * d2 + 0.5 * Xp * (3.0 + limit_a1) * d1;
    case Family::Genuine: return X * d2 + 0.5 * Xp * (1.0 + limit_a1) * d1;
  }
  return 0.0;
}

std::string voronovskaya_limit_formula(const OperatorId& op) {
  const bool perturbed = op.variant == Variant::M1;
  switch (op.family) {
    case Family::Bernstein:
      return perturbed ? "X f''/2 + X'(1+L1) f'/2" : "X f''/2";
    case Family::Kantorovich:
      return perturbed ? "X f''/2 + X'(2+L1) f'/2" : "X f''/2 + X' f'/2";
    case Family::Durrmeyer:
      return perturbed ? "X f'' + X'(3+L1) f'/2" : "X f'' + X' f'";
    case Family::Genuine:
      return perturbed ? "X f'' + X'(1+L1) f'/2" : "X f''";
  }
  return {};
}

double sigma_durrmeyer(int n, double x) {
  const double X = x * (1.0 - x);
  const double nn = n;
  return (2.0 * X * (nn - 1.0) * (nn - 2.0) + 3.0 * nn + 1.0) /
         (2.0 * (nn + 2.0) * (nn + 2.0) * (nn + 3.0));
}

// The denominator carries the factor 2 that the functional sums produce.
double sigma_genuine(int n, double x) {
  const double X = x * (1.0 - x);
  const double Xp = 1.0 - 2.0 * x;
  const double nn = n;
  return (2.0 * nn * X + Xp * Xp) * (nn - 1.0) / (2.0 * nn * nn * (nn + 1.0));
}

double durrmeyer_central_moment(int n, int order, double x) {
  const double X = x * (1.0 - x);
  const double nn = n;
  const double d2 = (nn + 2.0) * (nn + 3.0);
  switch (order) {
    case 0: return 1.0;
    case 1: return (1.0 - 2.0 * x) / (nn + 2.0);
    case 2: return 2.0 * (X * (nn - 3.0) + 1.0) / d2;
    case 3:
      return 6.0 * (1.0 - 2.0 * x) * (2.0 * X * nn + 2.0 * x * x - 2.0 * x + 1.0) /
             (d2 * (nn + 4.0));
    case 4:
      return 12.0 *
             (X * X * nn * nn + 3.0 * X * (7.0 * x * x - 7.0 * x + 2.0) * nn -
              10.0 * X * (x * x - x + 1.0) + 2.0) /
             (d2 * (nn + 4.0) * (nn + 5.0));
    default: throw DomainError("Durrmeyer central moments are tabulated for orders 0..4");
  }
}

std::vector<double> uniform_grid(int points) {
  if (points < 2) throw DomainError("a grid needs at least two points");
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i) g[i] = static_cast<double>(i) / (points - 1);
  return g;
}

// ---------------------------------------------------------------------------
// Verifier

Verifier::Verifier(VerifyConfig config) : config_(std::move(config)) {}

double Verifier::w1(const TestFunction& f, int derivative, double delta, bool& exact) {
  // omega_1(f; delta) = omega_1(f; 1) for delta >= 1.
  delta = std::min(delta, 1.0);
  const auto key = std::make_tuple(f.name, derivative, 1, delta);
  auto it = moduli_cache_.find(key);
  if (it == moduli_cache_.end()) {
    it = moduli_cache_.emplace(key, omega1(f, delta, config_.moduli, derivative)).first;
  }
  if (it->second.lower_bound) exact = false;
  return it->second.value;
}

double Verifier::w2(const TestFunction& f, int derivative, double delta, bool& exact) {
  // Steps beyond 1/2 admit no new second differences on [0, 1].
  delta = std::min(delta, 0.5);
  const auto key = std::make_tuple(f.name, derivative, 2, delta);
  auto it = moduli_cache_.find(key);
  if (it == moduli_cache_.end()) {
    it = moduli_cache_.emplace(key, omega2(f, delta, config_.moduli, derivative)).first;
  }
  if (it->second.lower_bound) exact = false;
  return it->second.value;
}

double Verifier::sup(const TestFunction& f, int derivative) {
  const auto key = std::make_pair(f.name, derivative);
  auto it = sup_cache_.find(key);
  if (it == sup_cache_.end()) it = sup_cache_.emplace(key, sup_norm(f, derivative)).first;
  return it->second;
}

BoundReport Verifier::skeleton(TheoremId t, const TestFunction& f, int n,
                               const std::optional<CoefficientScheme>& scheme) const {
  BoundReport r;
  r.theorem = t;
  r.function = f.name;
  r.n = n;
  if (theorem_uses_scheme(t) && scheme) r.scheme = scheme->description();
  r.tolerance = config_.tolerance;
  return r;
}

std::optional<std::string> Verifier::precondition_failure(
    TheoremId t, const TestFunction& f, int n,
    const std::optional<CoefficientScheme>& scheme) const {
  if (n < theorem_min_n(t)) {
    return "requires n >= " + std::to_string(theorem_min_n(t));
  }
  const int k = required_smoothness(t);
  if (k > 0 && !f.is_smooth(k)) {
    return "requires f in C^" + std::to_string(k) + ", " + f.name + " is " +
           std::string(to_string(f.smoothness));
  }
  if (theorem_uses_scheme(t) && !scheme) return "requires a coefficient scheme";
  if (is_voronovskaya(t) && !scheme->limit()) return "requires L1 = lim a1(n)";
  return std::nullopt;
}

BoundReport Verifier::check_direct(TheoremId t, const TestFunction& f, int n,
                                   const std::optional<CoefficientScheme>& scheme) {
  BoundReport r = skeleton(t, f, n, scheme);
  if (auto why = precondition_failure(t, f, n, scheme)) {
    r.status = CheckStatus::Skipped;
    r.note = *why;
    return r;
  }
  const auto& xs = config_.x_grid;
  const auto& quad = config_.quad;
  const double nn = n;
  bool exact = true;
  r.x_grid = xs;

  // |(1 + a1(n)) (1/2 - x)|
  const auto perturbation = [&](double x) {
    return std::abs((1.0 + scheme->a1(n)) * (0.5 - x));
  };

  switch (t) {
    case TheoremId::B_CLASSIC_DIRECT: {
      const OperatorImage bn(classic(Family::Bernstein), f, n, std::nullopt, quad);
      const double rhs = w2(f, 0, 1.0 / std::sqrt(nn), exact);
      for (double x : xs) {
        r.lhs.push_back(std::abs(bn(x) - f(x)));
        r.rhs.push_back(rhs);
      }
      break;
    }
    case TheoremId::B_M1_DIRECT: {
      const OperatorImage bn(classic(Family::Bernstein), f, n, std::nullopt, quad);
      const OperatorImage bm(m1(Family::Bernstein), f, n, scheme, quad);
      const double w = w1(f, 0, 1.0 / nn, exact);
      for (double x : xs) {
        r.lhs.push_back(std::abs(bm(x) - f(x)));
        r.rhs.push_back(std::abs(bn(x) - f(x)) + perturbation(x) * w);
      }
      break;
    }
    case TheoremId::B_M1_UNIFORM: {
      const OperatorImage bm(m1(Family::Bernstein), f, n, scheme, quad);
      const double rhs =
          2.0 * (3.0 * std::abs(scheme->a1(n)) + 1.0) * w1(f, 0, 1.0 / std::sqrt(nn), exact);
      for (double x : xs) {
        r.lhs.push_back(std::abs(bm(x) - f(x)));
        r.rhs.push_back(rhs);
      }
      break;
    }
    case TheoremId::B_M2_DIRECT: {
      // omega2/omega1 form of the M2 direct estimate, valid for every continuous f.
      const OperatorImage bm(OperatorId{Family::Bernstein, Variant::M2}, f, n, std::nullopt, quad);
      const double rhs = nn / 8.0 * w2(f, 0, 1.0 / nn, exact) +
                         w2(f, 0, 1.0 / std::sqrt(nn - 2.0), exact) + w1(f, 0, 2.0 / nn, exact);
      for (double x : xs) {
        r.lhs.push_back(std::abs(bm(x) - f(x)));
        r.rhs.push_back(rhs);
      }
      break;
    }
    case TheoremId::K_CLASSIC_DIRECT: {
      const OperatorImage kn(classic(Family::Kantorovich), f, n, std::nullopt, quad);
      const double h = 1.0 / std::sqrt(nn + 1.0);
      const double rhs = 0.5 * h * w1(f, 0, h, exact) + 9.0 / 8.0 * w2(f, 0, h, exact);
      for (double x : xs) {
        r.lhs.push_back(std::abs(kn(x) - f(x)));
        r.rhs.push_back(rhs);
      }
      break;
    }
    case TheoremId::K_M1_DIRECT: {
      const OperatorImage kn(classic(Family::Kantorovich), f, n, std::nullopt, quad);
      const OperatorImage km(m1(Family::Kantorovich), f, n, scheme, quad);
      const double w = w1(f, 0, 1.0 / (nn + 1.0), exact);
      for (double x : xs) {
        r.lhs.push_back(std::abs(km(x) - f(x)));
        r.rhs.push_back(std::abs(kn(x) - f(x)) + perturbation(x) * w);
      }
      break;
    }
    case TheoremId::D_CLASSIC_VORON: {
      const OperatorImage dn(classic(Family::Durrmeyer), f, n, std::nullopt, quad);
      const double h = 1.0 / std::sqrt(nn + 4.0);
      const double rhs = (2.0 * sup(f, 1) + 3.0 * sup(f, 2)) / (nn + 2.0) +
                         5.0 * h * w1(f, 2, h, exact) + 9.0 / 8.0 * w2(f, 2, h, exact);
      for (double x : xs) {
        const double X = x * (1.0 - x);
        const double limit = (1.0 - 2.0 * x) * f.derivative(1, x) + X * f.derivative(2, x);
        r.lhs.push_back(std::abs(nn * (dn(x) - f(x)) - limit));
        r.rhs.push_back(rhs);
      }
      break;
    }
    case TheoremId::D_M1_DIRECT:
    case TheoremId::U_M1_DIRECT: {
      const bool durrmeyer = t == TheoremId::D_M1_DIRECT;
      const Family fam = durrmeyer ? Family::Durrmeyer : Family::Genuine;
      const OperatorImage ln(classic(fam), f, n, std::nullopt, quad);
      const OperatorImage lm(m1(fam), f, n, scheme, quad);
      // delta = sup_k |b^{F_k} - b^{G_k}|: 1/(n+2) resp. 1/n.
      const double gap = durrmeyer ? 1.0 / (nn + 2.0) : 1.0 / nn;
      for (double x : xs) {
        const double sigma = durrmeyer ? sigma_durrmeyer(n, x) : sigma_genuine(n, x);
        const double h = std::sqrt(sigma);
        const double bracket = 3.0 * w2(f, 0, h, exact) + 5.0 * gap / h * w1(f, 0, h, exact);
        r.lhs.push_back(std::abs(lm(x) - f(x)));
        r.rhs.push_back(std::abs(ln(x) - f(x)) + perturbation(x) * bracket);
      }
      break;
    }
    default:
      throw ConfigError(std::string(to_string(t)) + " is not a direct estimate");
  }
  r.moduli_exact = exact;
  r.finalize();
  return r;
}

BoundReport Verifier::check_voronovskaya_quantitative(TheoremId t, const TestFunction& f, int n,
                                                      const CoefficientScheme& scheme) {
  BoundReport r = skeleton(t, f, n, scheme);
  if (!is_voronovskaya(t)) {
    throw ConfigError(std::string(to_string(t)) + " is not a quantitative Voronovskaya theorem");
  }
  if (auto why = precondition_failure(t, f, n, scheme)) {
    r.status = CheckStatus::Skipped;
    r.note = *why;
    return r;
  }
  const auto& xs = config_.x_grid;
  const double nn = n;
  const double L1 = *scheme.limit();
  const double gap = scheme.limit_gap(n);
  bool exact = true;
  r.x_grid = xs;

  Family fam = Family::Bernstein;
  switch (t) {
    case TheoremId::VORON_K_M1: fam = Family::Kantorovich; break;
    case TheoremId::VORON_D_M1: fam = Family::Durrmeyer; break;
    case TheoremId::VORON_U_M1: fam = Family::Genuine; break;
    default: break;
  }
  const OperatorId op = m1(fam);
  const OperatorImage image(op, f, n, scheme, config_.quad);
  const double d1_sup = sup(f, 1);
  const double d2_sup = sup(f, 2);

  for (double x : xs) {
    const double X = x * (1.0 - x);
    const double Xp = 1.0 - 2.0 * x;
    const double lhs = std::abs(nn * (image(x) - f(x)) - voronovskaya_limit(op, f, x, scheme));
    double rhs = 0.0;
    switch (fam) {
      case Family::Bernstein: {
        const double s = 3.0 * (nn - 2.0) * X + 1.0;
        const double h = std::sqrt(s) / nn;
        const double q = 1.0 / std::sqrt(nn);
        rhs = X * (5.0 / 6.0 * std::abs(Xp) / std::sqrt(s) * w1(f, 2, h, exact) +
                   13.0 / 16.0 * w2(f, 2, h, exact)) +
              0.5 * std::abs(Xp) *
                  (gap * d1_sup +
                   std::abs(1.0 + L1) * (13.0 / 4.0 * w2(f, 1, q, exact) + q * w1(f, 1, q, exact)));
        break;
      }
      case Family::Kantorovich: {
        const double q = 1.0 / std::sqrt(nn + 1.0);
        rhs = 2.0 / (3.0 * (nn + 1.0)) * (0.75 * d1_sup + d2_sup) +
              9.0 / 32.0 * (2.0 * q * w1(f, 2, q, exact) + w2(f, 2, q, exact)) +
              0.5 * gap * d1_sup +
              0.5 * std::abs(L1 + 1.0) *
                  (d1_sup / (nn + 1.0) + q * w1(f, 1, q, exact) + 9.0 / 8.0 * w2(f, 1, q, exact));
        break;
      }
      case Family::Durrmeyer: {
        const double q = 1.0 / std::sqrt(nn + 4.0);
        const double s = std::sqrt(2.0 / (nn + 2.0));
        rhs = (2.0 * d1_sup + 3.0 * d2_sup) / (nn + 2.0) + 5.0 * q * w1(f, 2, q, exact) +
              9.0 / 8.0 * w2(f, 2, q, exact) +
              0.5 * (gap * d1_sup +
                     std::abs(1.0 + L1) * (2.0 / (nn + 2.0) * std::abs(f.derivative(1, x)) +
                                           s * w1(f, 1, s, exact) + 9.0 / 8.0 * w2(f, 1, s, exact)));
        break;
      }
      case Family::Genuine: {
        const double p = std::sqrt(3.0 / (nn + 2.0));
        const double u = std::sqrt(2.0 / (nn + 1.0));
        const double q = 1.0 / std::sqrt(nn + 1.0);
        rhs = 5.0 * std::sqrt(6.0) / 12.0 * w1(f, 2, p, exact) + 13.0 / 32.0 * w2(f, 2, p, exact) +
              9.0 / 8.0 * w2(f, 0, u, exact) +
              0.5 * (gap * d1_sup +
                     std::abs(1.0 + L1) * (q * w1(f, 1, q, exact) + 5.0 / 4.0 * w2(f, 1, q, exact)));
        break;
      }
    }
    r.lhs.push_back(lhs);
    r.rhs.push_back(rhs);
  }
  r.moduli_exact = exact;
  r.finalize();
  return r;
}

ConvergenceReport Verifier::check_voronovskaya_limit(
    const OperatorId& op, const TestFunction& f, double x, const std::vector<int>& n_list,
    const std::optional<CoefficientScheme>& scheme) {
  op.validate();
  if (n_list.size() < 4) throw ConfigError("Voronovskaya sweeps need at least four values of n");
  if (!std::is_sorted(n_list.begin(), n_list.end()) ||
      std::adjacent_find(n_list.begin(), n_list.end()) != n_list.end()) {
    throw ConfigError("n list must be strictly increasing");
  }
  if (!f.is_smooth(2)) throw DomainError(f.name + " is not C^2");
  ConvergenceReport report;
  report.op = op;
  report.function = f.name;
  if (op.variant == Variant::M1 && scheme) report.scheme = scheme->description();
  report.x = x;
  report.n_list = n_list;
  report.limit_formula = voronovskaya_limit_formula(op);
  const double limit = voronovskaya_limit(op, f, x, scheme);
  const std::optional<CoefficientScheme> used =
      op.variant == Variant::M1 ? scheme : std::optional<CoefficientScheme>{};
  for (int n : n_list) {
    const double value = apply(op, f, n, x, used, config_.quad);
    const double scaled = n * (value - f(x)) - limit;
    if (!std::isfinite(scaled)) {
      throw DomainError("non-finite scaled error for " + to_string(op) + " at n = " +
                        std::to_string(n) + " (quadrature failure?)");
    }
    report.scaled_error.push_back(scaled);
  }
  // Least squares on the largest half of n_list.
  const std::size_t m = (n_list.size() + 1) / 2;
  const std::size_t first = n_list.size() - m;
  double peak = 0.0;
  for (std::size_t i = first; i < n_list.size(); ++i) {
    peak = std::max(peak, std::abs(report.scaled_error[i]));
  }
  bool degenerate = peak < 1e-11;
  for (std::size_t i = first; i < n_list.size(); ++i) {
    if (report.scaled_error[i] == 0.0) degenerate = true;
  }
  if (!degenerate) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = first; i < n_list.size(); ++i) {
      const double lx = std::log(static_cast<double>(n_list[i]));
      const double ly = std::log(std::abs(report.scaled_error[i]));
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    const double k = static_cast<double>(m);
    report.fitted_rate = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  }
  return report;
}

std::vector<BoundReport> Verifier::check_m2_moments(int n) {
  std::vector<BoundReport> out;
  const OperatorId op{Family::Bernstein, Variant::M2};
  for (int j = 0; j <= 2; ++j) {
    const TestFunction e = monomial(j);
    BoundReport r = skeleton(TheoremId::B_M2_MOMENTS, e, n, std::nullopt);
    if (n < 2) {
      r.status = CheckStatus::Skipped;
      r.note = "requires n >= 2";
      out.push_back(r);
      continue;
    }
    const OperatorImage image(op, e, n, std::nullopt, config_.quad);
    r.x_grid = config_.x_grid;
    for (double x : config_.x_grid) {
      r.lhs.push_back(std::abs(image(x) - closed_moment_m2(n, j, x)));
      r.rhs.push_back(0.0);
    }
    r.note = "lhs = |B_n^{M,2}(e_j) - closed form|";
    r.finalize();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<BoundReport> Verifier::check_durrmeyer_moments(int n) {
  std::vector<BoundReport> out;
  const OperatorId op = classic(Family::Durrmeyer);
  // Raw moments once per n; central moments by binomial expansion.
  std::vector<OperatorImage> raw;
  for (int j = 0; j <= 4; ++j) raw.emplace_back(op, monomial(j), n, std::nullopt, config_.quad);
  for (int order = 1; order <= 4; ++order) {
    BoundReport r;
    r.theorem = TheoremId::D_CLASSIC_VORON;
    r.function = "central_moment_" + std::to_string(order);
    r.n = n;
    r.tolerance = config_.tolerance;
    r.x_grid = config_.x_grid;
    for (double x : config_.x_grid) {
      double value = 0.0;
      double binom = 1.0;
      for (int j = 0; j <= order; ++j) {
        value += binom * std::pow(-x, order - j) * raw[j](x);
        binom = binom * (order - j) / (j + 1);
      }
      r.lhs.push_back(std::abs(value - durrmeyer_central_moment(n, order, x)));
      r.rhs.push_back(0.0);
    }
    r.note = "lhs = |D_n((e1-x)^k) - closed form|";
    r.finalize();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<BoundReport> Verifier::check_sigma(int n) {
  std::vector<BoundReport> out;
  const std::array<TestFunction, 3> e{monomial(0), monomial(1), monomial(2)};
  const double nn = n;

  const auto make = [&](TheoremId t, std::string name) {
    BoundReport r;
    r.theorem = t;
    r.function = std::move(name);
    r.n = n;
    r.tolerance = config_.sigma_tolerance;
    r.x_grid = config_.x_grid;
    return r;
  };

  // Durrmeyer: F_k = (n+1) int p_{n,k} f, G_k = (n+1) int p_{n,k+1} f.
  {
    std::array<std::vector<double>, 3> ip;
    for (int j = 0; j < 3; ++j) {
      ip[j] = operator_functionals(Family::Durrmeyer, e[j], n, config_.quad);
    }
    std::vector<double> mu(n, 0.0);
    double gap = 0.0;
    for (int k = 0; k < n; ++k) {
      const FunctionalStats F = functional_stats(ip[0][k], ip[1][k], ip[2][k]);
      const FunctionalStats G = functional_stats(ip[0][k + 1], ip[1][k + 1], ip[2][k + 1]);
      mu[k] = F.mu2 + G.mu2;
      gap = std::max(gap, std::abs(F.b - G.b));
    }
    BoundReport r = make(TheoremId::D_M1_DIRECT, "sigma_n");
    for (double x : config_.x_grid) {
      const std::vector<double> p = basis_row(n - 1, x);
      const double brute = std::inner_product(p.begin(), p.end(), mu.begin(), 0.0);
      r.lhs.push_back(std::abs(brute - sigma_durrmeyer(n, x)));
      r.rhs.push_back(0.0);
    }
    r.note = "lhs = |sum_k (mu2(F_k) + mu2(G_k)) p_{n-1,k} - closed form|";
    r.finalize();
    out.push_back(std::move(r));

    BoundReport d = make(TheoremId::D_M1_DIRECT, "delta_n");
    d.x_grid = {0.0};
    d.lhs = {std::abs(gap - 1.0 / (nn + 2.0))};
    d.rhs = {0.0};
    d.note = "lhs = |sup_k |b(F_k) - b(G_k)| - 1/(n+2)|";
    d.finalize();
    out.push_back(std::move(d));
  }

  // Genuine: F_0 = f(0), F_k = (n-1) int p_{n-2,k-1} f; G_k = (n-1) int p_{n-2,k} f,
  // G_{n-1} = f(1). Both families coincide with the operator functionals.
  if (n >= 2) {
    std::array<std::vector<double>, 3> c;
    for (int j = 0; j < 3; ++j) c[j] = operator_functionals(Family::Genuine, e[j], n, config_.quad);
    std::vector<double> mu(n, 0.0);
    double gap = 0.0;
    for (int k = 0; k < n; ++k) {
      const FunctionalStats F = functional_stats(c[0][k], c[1][k], c[2][k]);
      const FunctionalStats G = functional_stats(c[0][k + 1], c[1][k + 1], c[2][k + 1]);
      mu[k] = F.mu2 + G.mu2;
      gap = std::max(gap, std::abs(F.b - G.b));
    }
    BoundReport r = make(TheoremId::U_M1_DIRECT, "sigma_n");
    BoundReport bound = make(TheoremId::U_M1_DIRECT, "sigma_n_bound");
    bound.tolerance = 0.0;
    for (double x : config_.x_grid) {
      const std::vector<double> p = basis_row(n - 1, x);
      const double brute = std::inner_product(p.begin(), p.end(), mu.begin(), 0.0);
      const double closed = sigma_genuine(n, x);
      r.lhs.push_back(std::abs(brute - closed));
      r.rhs.push_back(0.0);
      bound.lhs.push_back(closed);
      bound.rhs.push_back(1.0 / (4.0 * nn));
    }
    r.note = "lhs = |sum_k (mu2(F_k) + mu2(G_k)) p_{n-1,k} - closed form|";
    bound.note = "lhs = sigma_n(x), rhs = 1/(4n)";
    r.finalize();
    bound.finalize();
    out.push_back(std::move(r));
    out.push_back(std::move(bound));

    BoundReport d = make(TheoremId::U_M1_DIRECT, "delta_n");
    d.x_grid = {0.0};
    d.lhs = {std::abs(gap - 1.0 / nn)};
    d.rhs = {0.0};
    d.note = "lhs = |sup_k |b(F_k) - b(G_k)| - 1/n|";
    d.finalize();
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<BoundReport> Verifier::check_moment_identities(const std::vector<int>& n_list) {
  std::vector<BoundReport> out;
  for (int n : n_list) {
    for (auto& r : check_m2_moments(n)) out.push_back(std::move(r));
    for (auto& r : check_durrmeyer_moments(n)) out.push_back(std::move(r));
    for (auto& r : check_sigma(n)) out.push_back(std::move(r));
  }
  return out;
}

BoundReport Verifier::check_derivative_bound(const TestFunction& f, int n) {
  BoundReport r = skeleton(TheoremId::DERIV_BOUND_B, f, n, std::nullopt);
  if (auto why = precondition_failure(TheoremId::DERIV_BOUND_B, f, n, std::nullopt)) {
    r.status = CheckStatus::Skipped;
    r.note = *why;
    return r;
  }
  bool exact = true;
  const OperatorImage bn(classic(Family::Bernstein), f, n, std::nullopt, config_.quad);
  const double middle = n * w1(f, 0, 1.0 / n, exact);
  const double outer = sup(f, 1);
  r.x_grid = config_.x_grid;
  for (double x : config_.x_grid) {
    r.lhs.push_back(std::abs(bn.derivative(x)));
    r.rhs.push_back(middle);
  }
  r.moduli_exact = exact;
  r.finalize();
  // Second link of the chain: n omega1(f; 1/n) <= ||f'||.
  const double chain = outer - middle;
  if (chain < r.worst_margin) {
    r.worst_margin = chain;
    if (chain < -r.tolerance) r.status = exact ? CheckStatus::Fail : CheckStatus::Inconclusive;
  }
  r.note = "rhs = n omega1(f;1/n); also checks n omega1(f;1/n) <= ||f'|| = " +
           std::to_string(outer);
  return r;
}

BoundReport Verifier::check(TheoremId t, const TestFunction& f, int n,
                            const std::optional<CoefficientScheme>& scheme) {
  if (is_voronovskaya(t)) {
    if (!scheme) {
      BoundReport r = skeleton(t, f, n, scheme);
      r.note = "requires a coefficient scheme";
      return r;
    }
    return check_voronovskaya_quantitative(t, f, n, *scheme);
  }
  if (t == TheoremId::DERIV_BOUND_B) return check_derivative_bound(f, n);
  if (t == TheoremId::B_M2_MOMENTS) {
    throw ConfigError("B_M2_MOMENTS is checked per monomial; use check_m2_moments");
  }
  return check_direct(t, f, n, scheme);
}

std::vector<BoundReport> run_suite(Verifier& verifier, const SuiteConfig& suite) {
  std::vector<const TestFunction*> functions;
  if (suite.functions.empty()) {
    for (const auto& f : standard_corpus()) functions.push_back(&f);
  } else {
    for (const auto& name : suite.functions) functions.push_back(&corpus_function(name));
  }
  std::vector<BoundReport> out;
  for (TheoremId t : suite.theorems) {
    if (t == TheoremId::B_M2_MOMENTS) {
      for (int n : suite.n_list) {
        for (auto& r : verifier.check_m2_moments(n)) out.push_back(std::move(r));
      }
      continue;
    }
    for (const TestFunction* f : functions) {
      for (int n : suite.n_list) {
        if (theorem_uses_scheme(t)) {
          for (const auto& s : suite.schemes) out.push_back(verifier.check(t, *f, n, s));
        } else {
          out.push_back(verifier.check(t, *f, n));
        }
      }
    }
  }
  return out;
}

}  // namespace pertbern
