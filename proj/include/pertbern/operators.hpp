#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pertbern/basis.hpp"
#include "pertbern/corpus.hpp"
#include "pertbern/quadrature.hpp"

namespace pertbern {

enum class Family { Bernstein, Kantorovich, Durrmeyer, Genuine };
enum class Variant { Classic, M1, M2 };

/// Operator family x variant. M2 exists only for Bernstein.
struct OperatorId {
  Family family = Family::Bernstein;
  Variant variant = Variant::Classic;

  /// Throws ConfigError for (non-Bernstein, M2).
  void validate() const;
  /// Smallest admissible n (2 for M2 and for the genuine family).
  int min_n() const;
  OperatorId classic() const { return {family, Variant::Classic}; }

  friend bool operator==(const OperatorId&, const OperatorId&) = default;
};

std::string_view to_string(Family f);
std::string_view to_string(Variant v);
/// "bernstein", "kantorovich-m1", "bernstein-m2", ...
std::string to_string(const OperatorId& op);
/// Inverse of to_string; also accepts a bare family together with a variant.
OperatorId parse_operator(std::string_view text);
Family parse_family(std::string_view text);
Variant parse_variant(std::string_view text);

/// Every family takes the form  L_n(f; x) = sum_k w_{n,k}(x) c_k(f)  where the
/// weights are the (classical or perturbed) fundamental functions and the
/// coefficients c_k are functionals of f:
///
///   Bernstein    c_k = f(k/n)
///   Kantorovich  c_k = (n+1) * integral of f over [k/(n+1), (k+1)/(n+1)]
///   Durrmeyer    c_k = (n+1) * integral of p_{n,k} f over [0, 1]
///   genuine      c_0 = f(0), c_n = f(1),
///                c_k = (n-1) * integral of p_{n-2,k-1} f over [0, 1]
///
/// For the genuine family the M1 end weights a(x,n)(1-x)^(n-1) and
/// a(1-x,n)x^(n-1) are exactly p^{M,1}_{n,0} and p^{M,1}_{n,n}.
std::vector<double> operator_functionals(Family family, const TestFunction& f, int n,
                                         const QuadratureOptions& quad = {});

/// The weights w_{n,0..n}(x) of the selected variant.
std::vector<double> operator_weights(const OperatorId& op, int n, double x,
                                     const CoefficientScheme* scheme);

/// L_n f for one (operator, f, n, scheme). The functionals are computed once,
/// so evaluating the image at many points is cheap.
class OperatorImage {
 public:
  OperatorImage(const OperatorId& op, const TestFunction& f, int n,
                std::optional<CoefficientScheme> scheme = std::nullopt,
                const QuadratureOptions& quad = {});

  double operator()(double x) const;
  std::vector<double> evaluate(std::span<const double> xs) const;

  /// (L_n f)'(x) = n * sum_k p_{n-1,k}(x) (c_{k+1} - c_k); classic variants only.
  /// For Bernstein this is the forward-difference form, for Kantorovich and
  /// Durrmeyer the paired-integral form, for the genuine family the
  /// boundary-plus-integral form. None of them use f'.
  double derivative(double x) const;

  const OperatorId& id() const { return op_; }
  int n() const { return n_; }
  std::span<const double> functionals() const { return coeffs_; }

 private:
  OperatorId op_;
  int n_;
  std::optional<CoefficientScheme> scheme_;
  std::vector<double> coeffs_;
};

/// L_n(f; x).
double apply(const OperatorId& op, const TestFunction& f, int n, double x,
             const std::optional<CoefficientScheme>& scheme = std::nullopt,
             const QuadratureOptions& quad = {});

/// L_n((e1 - x)^order; x), obtained by applying the operator to monomials and
/// expanding the binomial; order in [0, 4].
double central_moment(const OperatorId& op, int n, int order, double x,
                      const std::optional<CoefficientScheme>& scheme = std::nullopt,
                      const QuadratureOptions& quad = {});

/// Closed-form B^{M,2}_n(e_j; x) for j in {0, 1, 2}.
double closed_moment_m2(int n, int j, double x);

/// (L_n f)'(x) for a classic variant.
double operator_derivative(const OperatorId& op, const TestFunction& f, int n, double x,
                           const QuadratureOptions& quad = {});

/// Integral of p_{m,j} f over [0, 1].
double basis_inner_product(int m, int j, const TestFunction& f, const QuadratureOptions& quad = {});

/// The quadrature rule used for integrals against p_{m,.} for f. Throws
/// ConfigError if an explicitly requested size cannot integrate the basis
/// polynomial exactly.
QuadratureRule inner_product_rule(int m, const TestFunction& f, const QuadratureOptions& quad);

}  // namespace pertbern
