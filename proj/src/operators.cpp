#include "pertbern/operators.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "pertbern/error.hpp"

namespace pertbern {

// ---------------------------------------------------------------------------
// Identifiers

void OperatorId::validate() const {
  if (variant == Variant::M2 && family != Family::Bernstein) {
    throw ConfigError("the M2 variant exists only for the Bernstein family");
  }
}

int OperatorId::min_n() const {
  if (variant == Variant::M2 || family == Family::Genuine) return 2;
  return 1;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Bernstein: return "bernstein";
    case Family::Kantorovich: return "kantorovich";
    case Family::Durrmeyer: return "durrmeyer";
    case Family::Genuine: return "genuine";
  }
  return "?";
}

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Classic: return "classic";
    case Variant::M1: return "m1";
    case Variant::M2: return "m2";
  }
  return "?";
}

std::string to_string(const OperatorId& op) {
  std::string s(to_string(op.family));
  if (op.variant != Variant::Classic) {
    s += '-';
    s += to_string(op.variant);
  }
  return s;
}

namespace {

std::string lower(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

Family parse_family(std::string_view text) {
  const std::string s = lower(text);
  if (s == "bernstein") return Family::Bernstein;
  if (s == "kantorovich") return Family::Kantorovich;
  if (s == "durrmeyer") return Family::Durrmeyer;
  if (s == "genuine") return Family::Genuine;
  throw ConfigError("unknown operator family '" + std::string(text) + "'");
}

Variant parse_variant(std::string_view text) {
  const std::string s = lower(text);
  if (s == "classic") return Variant::Classic;
  if (s == "m1") return Variant::M1;
  if (s == "m2") return Variant::M2;
  throw ConfigError("unknown operator variant '" + std::string(text) + "'");
}

OperatorId parse_operator(std::string_view text) {
  OperatorId op;
  const auto dash = text.find('-');
  op.family = parse_family(text.substr(0, dash));
  if (dash != std::string_view::npos) op.variant = parse_variant(text.substr(dash + 1));
  op.validate();
  return op;
}

// ---------------------------------------------------------------------------
// Quadrature of basis inner products

namespace {

constexpr int kKantorovichCellPoints = 12;

std::vector<double> log_binomials(int m) {
  std::vector<double> out(static_cast<std::size_t>(m) + 1);
  const double lg = std::lgamma(m + 1.0);
  for (int j = 0; j <= m; ++j) out[j] = lg - std::lgamma(j + 1.0) - std::lgamma(m - j + 1.0);
  return out;
}

// All integrals of p_{m,j} f for j = 0..m in one sweep over the nodes.
std::vector<double> inner_products(int m, const TestFunction& f, const QuadratureOptions& quad) {
  const QuadratureRule rule = inner_product_rule(m, f, quad);
  const std::vector<double> log_c = log_binomials(m);
  std::vector<double> out(static_cast<std::size_t>(m) + 1, 0.0);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double t = rule.nodes[i];
    const double wf = rule.weights[i] * f(t);
    if (wf == 0.0) continue;
    const double lt = std::log(t);
    const double lu = std::log1p(-t);
    for (int j = 0; j <= m; ++j) out[j] += wf * std::exp(log_c[j] + j * lt + (m - j) * lu);
  }
  return out;
}

void require_n(const OperatorId& op, int n) {
  op.validate();
  if (n < op.min_n()) {
    throw DomainError(to_string(op) + " requires n >= " + std::to_string(op.min_n()) +
                      ", got n = " + std::to_string(n));
  }
}

}  // namespace

QuadratureRule inner_product_rule(int m, const TestFunction& f, const QuadratureOptions& quad) {
  const int poly = f.poly_degree.value_or(0);
  int points = quad.points;
  if (points == 0) {
    points = std::max(m + 5, (m + poly + 2) / 2);
  } else if (2 * points - 1 < m) {
    throw ConfigError("quadrature with " + std::to_string(points) +
                      " points is exact only to degree " + std::to_string(2 * points - 1) +
                      ", below the basis degree " + std::to_string(m));
  }
  return composite_gauss_legendre(points, std::max(quad.cells, 1));
}

double basis_inner_product(int m, int j, const TestFunction& f, const QuadratureOptions& quad) {
  if (m < 0 || j < 0 || j > m) throw DomainError("basis_inner_product requires 0 <= j <= m");
  return inner_products(m, f, quad)[j];
}

std::vector<double> operator_functionals(Family family, const TestFunction& f, int n,
                                         const QuadratureOptions& quad) {
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  switch (family) {
    case Family::Bernstein:
      for (int k = 0; k <= n; ++k) c[k] = f(static_cast<double>(k) / n);
      break;
    case Family::Kantorovich: {
      const int points = quad.points == 0 ? kKantorovichCellPoints : quad.points;
      const QuadratureRule rule = composite_gauss_legendre(points, std::max(quad.cells, 1));
      for (int k = 0; k <= n; ++k) {
        const double a = static_cast<double>(k) / (n + 1);
        const double b = static_cast<double>(k + 1) / (n + 1);
        c[k] = (n + 1) * rule.integrate(f, a, b);
      }
      break;
    }
    case Family::Durrmeyer: {
      const std::vector<double> ip = inner_products(n, f, quad);
      for (int k = 0; k <= n; ++k) c[k] = (n + 1) * ip[k];
      break;
    }
    case Family::Genuine: {
      if (n < 2) throw DomainError("the genuine operator requires n >= 2");
      const std::vector<double> ip = inner_products(n - 2, f, quad);
      c[0] = f(0.0);
      c[n] = f(1.0);
      for (int k = 1; k <= n - 1; ++k) c[k] = (n - 1) * ip[k - 1];
      break;
    }
  }
  return c;
}

std::vector<double> operator_weights(const OperatorId& op, int n, double x,
                                     const CoefficientScheme* scheme) {
  require_n(op, n);
  switch (op.variant) {
    case Variant::Classic: return basis_row(n, x);
    case Variant::M1:
      if (scheme == nullptr) throw ConfigError(to_string(op) + " needs a coefficient scheme");
      return basis_row_m1(n, x, *scheme);
    case Variant::M2: return basis_row_m2(n, x);
  }
  return {};
}

// ---------------------------------------------------------------------------
// OperatorImage

OperatorImage::OperatorImage(const OperatorId& op, const TestFunction& f, int n,
                             std::optional<CoefficientScheme> scheme,
                             const QuadratureOptions& quad)
    : op_(op), n_(n), scheme_(std::move(scheme)) {
  require_n(op_, n_);
  if (op_.variant == Variant::M1 && !scheme_) {
    throw ConfigError(to_string(op_) + " needs a coefficient scheme");
  }
  coeffs_ = operator_functionals(op_.family, f, n_, quad);
}

double OperatorImage::operator()(double x) const {
  const std::vector<double> w = operator_weights(op_, n_, x, scheme_ ? &*scheme_ : nullptr);
  double sum = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) sum += w[k] * coeffs_[k];
  return sum;
}

std::vector<double> OperatorImage::evaluate(std::span<const double> xs) const {
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back((*this)(x));
  return out;
}

double OperatorImage::derivative(double x) const {
  if (op_.variant != Variant::Classic) {
    throw ConfigError("operator derivative is only available for classic variants");
  }
  const std::vector<double> p = basis_row(n_ - 1, x);
  double sum = 0.0;
  for (int k = 0; k < n_; ++k) sum += p[k] * (coeffs_[k + 1] - coeffs_[k]);
  return n_ * sum;
}

// ---------------------------------------------------------------------------
// Free functions

double apply(const OperatorId& op, const TestFunction& f, int n, double x,
             const std::optional<CoefficientScheme>& scheme, const QuadratureOptions& quad) {
  return OperatorImage(op, f, n, scheme, quad)(x);
}

double central_moment(const OperatorId& op, int n, int order, double x,
                      const std::optional<CoefficientScheme>& scheme,
                      const QuadratureOptions& quad) {
  if (order < 0 || order > 4) throw DomainError("central moment order must lie in [0, 4]");
  // (t - x)^order = sum_j C(order, j) t^j (-x)^(order - j)
  double sum = 0.0;
  double binom = 1.0;
  for (int j = 0; j <= order; ++j) {
    const double raw = apply(op, monomial(j), n, x, scheme, quad);
    sum += binom * std::pow(-x, order - j) * raw;
    binom = binom * (order - j) / (j + 1);
  }
  return sum;
}

double closed_moment_m2(int n, int j, double x) {
  if (n < 2) throw DomainError("closed_moment_m2 requires n >= 2");
  switch (j) {
    case 0: return 1.0;
    case 1: return x;
    case 2: return x * x + 2.0 * x * (1.0 - x) / (static_cast<double>(n) * n);
    default: throw DomainError("closed M2 moments are known only for j <= 2");
  }
}

double operator_derivative(const OperatorId& op, const TestFunction& f, int n, double x,
                           const QuadratureOptions& quad) {
  if (op.variant != Variant::Classic) {
    throw ConfigError("operator derivative is only available for classic variants");
  }
  return OperatorImage(op, f, n, std::nullopt, quad).derivative(x);
}

}  // namespace pertbern
