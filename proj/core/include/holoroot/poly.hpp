#pragma once

// Sparse multivariate polynomials with exact rational coefficients.

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "holoroot/multiindex.hpp"
#include "holoroot/rational.hpp"

namespace holoroot {

/// Display names for the variables of a polynomial ring.
using VarNames = std::vector<std::string>;

/// s1 ... sk
VarNames sigma_names(std::size_t k);
/// s1 ... sk e1 ... ek, the ring of operator symbols.
VarNames symbol_names(std::size_t k);

/// A polynomial in `nvars` commuting variables. Variables are 1-based in the
/// public API. No zero coefficient is ever stored.
class Poly {
 public:
  using Terms = std::map<MultiIndex, Rational, GradedOrder>;

  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t i);
  static Poly monomial(const MultiIndex& alpha, const Rational& c = 1);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Highest total degree; 0 for the zero polynomial.
  std::uint32_t total_degree() const;
  Rational coefficient(const MultiIndex& alpha) const;
  /// Value of the constant term.
  Rational constant_term() const;

  /// Adds c x^alpha in place.
  void add_term(const MultiIndex& alpha, const Rational& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_ring(const Poly& other) const;

  std::size_t nvars_;
  Terms terms_;
};

Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rational& c);

/// Formal derivative with respect to variable i (1-based).
Poly partial_derivative(const Poly& a, std::size_t i);

/// Terms of total degree exactly `degree`.
Poly homogeneous_part(const Poly& a, std::uint32_t degree);
/// Terms of total degree at most `degree`.
Poly truncate(const Poly& a, std::uint32_t degree);

/// Embeds into a ring with more variables; the old variables keep their
/// positions.
Poly extend(const Poly& a, std::size_t nvars);

/// Exact quotient a / b. Throws std::domain_error if b does not divide a.
Poly divide_exact(const Poly& a, const Poly& b);

/// Exact evaluation at a rational point.
Rational evaluate(const Poly& a, std::span<const Rational> point);

/// Evaluation at a floating point, with coefficients converted by
/// from_rational.
template <class Scalar>
Scalar evaluate(const Poly& a, std::span<const Scalar> point) {
  if (point.size() != a.nvars())
    throw std::invalid_argument("evaluate: point length differs from variable count");
  Scalar total(0);
  for (const auto& [alpha, c] : a.terms()) {
    Scalar term = from_rational<Scalar>(c);
    for (std::size_t i = 0; i < alpha.size(); ++i)
      for (std::uint32_t n = 0; n < alpha[i]; ++n) term *= point[i];
    total += term;
  }
  return total;
}

/// m_{q,r}(s) = sum over |alpha| = q, w(alpha) = r of s^alpha / alpha!; the
/// zero polynomial when the class is empty.
Poly mqr_polynomial(std::size_t k, QRKey key);

/// Canonical text: `coeff * v1^a1 v2^a2 ...` joined by ` + `, in the graded
/// order, variables with zero exponent omitted, bare coefficient for the
/// constant term, `0` for the zero polynomial.
std::string to_string(const Poly& a, const VarNames& names);
std::string to_string(const Poly& a);

}  // namespace holoroot
