#pragma once

// Determinants over the polynomial ring, Sylvester resultants, the
// discriminant of the universal polynomial, and the two structured
// determinants of the eliminating linear systems.

#include <cstddef>
#include <string>
#include <vector>

#include "holoroot/poly.hpp"

namespace holoroot {

struct PolyMatrix {
  std::vector<std::vector<Poly>> rows;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  /// A rows x cols zero matrix over polynomials in nvars variables.
  static PolyMatrix zero(std::size_t rows, std::size_t cols, std::size_t nvars);
  static PolyMatrix identity(std::size_t n, std::size_t nvars);

  std::size_t row_count() const { return rows.size(); }
  std::size_t col_count() const { return rows.empty() ? 0 : rows.front().size(); }
  bool is_square() const;
};

/// Fraction-free elimination with exact division; cofactor expansion for
/// dimension <= 4. Throws std::invalid_argument for non-square or ragged
/// input.
Poly determinant(const PolyMatrix& m);

/// Laplace expansion along rows with memoization over column subsets.
Poly determinant_cofactor(const PolyMatrix& m);

/// Polynomial in z with polynomial coefficients; coeffs[i] multiplies z^i.
struct UnivariatePoly {
  std::vector<Poly> coeffs;

  /// Index of the highest nonzero coefficient; -1 for the zero polynomial.
  int degree() const;
  UnivariatePoly derivative() const;
};

/// Determinant of the Sylvester matrix: deg(q) shifted rows of p's
/// coefficients (highest power first), then deg(p) rows of q's. With this
/// layout Res(z - a, z - b) = a - b. Throws std::invalid_argument when either
/// input is zero.
Poly resultant(const UnivariatePoly& p, const UnivariatePoly& q);

/// P(z) = sum_h (-1)^h s_h z^(k-h), s_0 = 1.
UnivariatePoly universal_polynomial(std::size_t k);

/// (-1)^(k(k-1)/2) Res(P, P'), so that k = 2 gives s1^2 - 4 s2. Throws
/// std::invalid_argument for k < 2.
Poly discriminant(std::size_t k);

struct ProportionalityCheck {
  Poly det;
  int sign;        ///< det == sign * reference
  Poly reference;
};

/// Rows L_1..L_k (L_q = sum h s_h y_{q+h}) then Lambda_2..Lambda_k
/// (Lambda_r = sum_{h=0}^{k} s_h y_{r+h}); columns y_2..y_2k.
PolyMatrix lemma_determinant_matrix(std::size_t k);
/// det = sign * s_k * discriminant(k). Throws std::logic_error when the
/// determinant is not +-1 times the reference.
ProportionalityCheck lemma_determinant_check(std::size_t k);

/// Rows A_2..A_k (A_j = sum_{p=1}^{k} p s_p y_{j+p}) then B_1..B_k
/// (B_h = sum_{p=0}^{k-1} (k-p) s_p y_{h+p+1}); columns y_2..y_2k.
PolyMatrix lemma_manquant_matrix(std::size_t k);
/// det = sign * (-k)^(k-1) * discriminant(k). Throws std::logic_error on
/// failure.
ProportionalityCheck lemma_manquant_check(std::size_t k);

}  // namespace holoroot
