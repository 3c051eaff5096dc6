#pragma once

// Differential operators with polynomial coefficients in s1..sk, kept in the
// normal form sum_alpha c_alpha(s) d^alpha (coefficients left of derivatives).

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "holoroot/multiindex.hpp"
#include "holoroot/poly.hpp"

namespace holoroot {

class DiffOp {
 public:
  using Terms = std::map<MultiIndex, Poly, GradedOrder>;

  explicit DiffOp(std::size_t k = 0) : k_(k) {}

  static DiffOp identity(std::size_t k);
  /// Multiplication by a polynomial.
  static DiffOp multiplication(const Poly& c);
  /// d_h (1-based).
  static DiffOp derivative(std::size_t k, std::size_t h);
  /// c * d^alpha
  static DiffOp term(const MultiIndex& alpha, const Poly& c);

  std::size_t k() const { return k_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest |alpha| among the terms; 0 for the zero operator.
  std::uint32_t order() const;
  Poly coefficient(const MultiIndex& alpha) const;

  void add_term(const MultiIndex& alpha, const Poly& c);

  DiffOp& operator+=(const DiffOp& other);
  DiffOp& operator-=(const DiffOp& other);
  DiffOp& operator*=(const Rational& c);

  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(DiffOp a, const Rational& c) { return a *= c; }
  friend DiffOp operator*(const Rational& c, DiffOp a) { return a *= c; }
  friend DiffOp operator-(DiffOp a) { return a *= Rational(-1); }
  /// Composition (a then b applied right to left): (a * b)[f] = a[b[f]].
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);

  friend bool operator==(const DiffOp& a, const DiffOp& b) {
    return a.k_ == b.k_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_k(const DiffOp& other) const;

  std::size_t k_;
  Terms terms_;
};

/// Product d1 d2 in normal form, using d_i s_j = s_j d_i + delta_ij.
DiffOp compose(const DiffOp& d1, const DiffOp& d2);

/// d^alpha applied to p.
Poly derivative(const Poly& p, const MultiIndex& alpha);
Poly apply(const DiffOp& d, const Poly& p);

/// s_h as a polynomial, with s_0 = 1 and s_{k+1} = 0. Only the generator
/// constructors use these conventions.
Poly sigma(std::size_t k, std::size_t h);

/// d_p d_q - d_{p+1} d_{q-1}, p in [1, k-1], q in [2, k].
DiffOp gen_A(std::size_t k, std::size_t p, std::size_t q);
/// d_1 d_{m-1} + d_m E, m in [2, k].
DiffOp gen_T(std::size_t k, std::size_t m);
/// E = sum s_h d_h
DiffOp gen_E(std::size_t k);
/// sum h s_h d_h - lambda
DiffOp gen_U0(std::size_t k, const Rational& lambda = 0);
/// sum_{h=0}^{k-1} (k-h) s_h d_{h+1}
DiffOp gen_Um1(std::size_t k);
/// sum_{h=1}^{k} (s_1 s_h - (h+1) s_{h+1}) d_h
DiffOp gen_U1(std::size_t k);
/// The Euler field in coordinates centred at (0,...,0,-1), minus lambda:
/// sum h s_h d_h - k d_k - lambda.
DiffOp gen_U0_shifted(std::size_t k, const Rational& lambda = 1);

/// Power sum N_m of the roots in terms of s; N_0 = k. Memoized.
Poly newton_polynomial(std::size_t k, std::uint32_t m);
/// DN_m: zero for m in [-k+1, -1], DN_0 = 1, and
/// sum_{h=0}^{k} (-1)^h s_h DN_{m-h} = 0. Memoized.
Poly dn_polynomial(std::size_t k, int m);

/// True iff d kills N_0..N_M exactly. Without M, uses 2 order(d) + 2k.
bool annihilates_newton(const DiffOp& d, std::optional<std::uint32_t> M = std::nullopt);

enum class Identity {
  Eh,          ///< d_h (U0 - 1) + d_{h-1} U_{-1} - k T^h - sum (k-q) s_q A_{h-1,q+1}
  E1,          ///< -d_1 (U0 - 1) + E U_{-1} - sum (k-q) s_q T^{q+1}
  Fh,          ///< d_h U1 + d_{h-1} (U0 + 1), expected in the ideal
  F1,          ///< d_1 U1 - E (U0 + 1), expected in the ideal
  commutator,  ///< U_p U_q - U_q U_p - (q-p) U_{p+q}
};

enum class ResidualKind {
  exact,       ///< must be the zero operator
  membership,  ///< must pass annihilates_newton
};

struct IdentityResidual {
  std::string name;
  ResidualKind kind;
  DiffOp op;
};

/// Builds the residual operator of a named identity. `a` is h for Eh/Fh and
/// p for commutator; `b` is q for commutator. Throws std::invalid_argument on
/// parameters out of range (h in [2, k]; p, q, p + q in [-1, 1]).
IdentityResidual identity_residual(Identity id, std::size_t k, int a = 0, int b = 0);

/// Principal symbol as a polynomial in (s1..sk, e1..ek). Throws
/// std::invalid_argument for the zero operator.
Poly symbol(const DiffOp& d);

/// `poly * d1^a1 ...` terms joined by ` + `, the coefficient in parentheses
/// when it has more than one term.
std::string to_string(const DiffOp& d);

}  // namespace holoroot
