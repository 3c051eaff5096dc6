#pragma once

// Exponent vectors and the combinatorics of the cone S(k): length, weight,
// equivalence classes, minimal monomials and the two chart parametrizations.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "holoroot/rational.hpp"

namespace holoroot {

/// Exponent vector alpha in N^k. Positions are 0-based in storage; the
/// mathematical index h of variable x_h is position h - 1.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t k) : exps_(k, 0) {}
  MultiIndex(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}
  explicit MultiIndex(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  /// The unit vector 1_h (h is 1-based).
  static MultiIndex unit(std::size_t k, std::size_t h);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t pos) const { return exps_[pos]; }
  std::uint32_t& operator[](std::size_t pos) { return exps_[pos]; }
  std::span<const std::uint32_t> exponents() const { return exps_; }

  MultiIndex& operator+=(const MultiIndex& other);
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }

  /// Componentwise a <= b.
  bool divides(const MultiIndex& other) const;
  /// a - b; requires b.divides(a).
  MultiIndex minus(const MultiIndex& other) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  /// Plain lexicographic comparison of the exponent vectors.
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<std::uint32_t> exps_;
};

std::uint32_t length(const MultiIndex& alpha);
std::uint32_t weight(const MultiIndex& alpha);
/// alpha! = prod alpha_h!
Rational factorial(const MultiIndex& alpha);

/// alpha # beta: same length and same weight. Throws std::invalid_argument
/// when the ambient dimensions differ.
bool equivalent(const MultiIndex& alpha, const MultiIndex& beta);

/// Total order used for polynomial terms: ascending total degree, and inside
/// one degree the lexicographically larger exponent vector first
/// (s1^2 < s1 s2 < s2^2).
struct GradedOrder {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// Index pair (q, r) = (length, weight) of a bi-homogeneous class.
struct QRKey {
  std::uint32_t q = 0;
  std::uint32_t r = 0;
  friend auto operator<=>(const QRKey&, const QRKey&) = default;
};

/// True iff the (q, r) class in dimension k is nonempty, i.e. r in [q, k q].
bool class_nonempty(std::size_t k, QRKey key);

/// All alpha in N^k of length q and weight r, in descending lexicographic
/// order of the exponent vectors. Empty iff r is outside [q, k q].
std::vector<MultiIndex> enumerate_class(std::size_t k, QRKey key);

/// True for x1^p xk^q and x1^p xj xk^q with j in [2, k-1].
bool is_minimal(const MultiIndex& alpha);

/// The unique minimal multi-index with the given length and weight, solved
/// directly from the two admissible shapes.
std::optional<MultiIndex> minimal_form(std::size_t k, QRKey key);

/// Rewrites alpha to its minimal representative with the inductive rule
/// x_r x_j -> x_1 x_{r+j-1} (r + j - 1 <= k) or x_k x_{r+j-k} (otherwise).
MultiIndex reduce_to_minimal(const MultiIndex& alpha);

enum class Chart {
  first,  ///< x_h = z0 (-z1)^(h-1), inverse of eta -> (eta1, -eta2/eta1)
  last,   ///< x_h = (-z0)^(k-h) z1, inverse of eta -> (etak, -eta_{k-1}/etak)
};

/// A point eta of C^k tested against the 2x2 minors cutting out S(k).
template <class Scalar>
struct SurfacePoint {
  std::vector<Scalar> eta;
};

template <class Scalar>
Scalar integer_power(Scalar base, std::size_t n) {
  Scalar result(1);
  for (std::size_t i = 0; i < n; ++i) result *= base;
  return result;
}

template <class Scalar>
SurfacePoint<Scalar> sk_point(std::size_t k, const Scalar& zeta0, const Scalar& zeta1,
                              Chart chart) {
  SurfacePoint<Scalar> point;
  point.eta.reserve(k);
  for (std::size_t h = 1; h <= k; ++h) {
    if (chart == Chart::first)
      point.eta.push_back(zeta0 * integer_power<Scalar>(-zeta1, h - 1));
    else
      point.eta.push_back(integer_power<Scalar>(-zeta0, k - h) * zeta1);
  }
  return point;
}

/// eta_p eta_q - eta_{p+1} eta_{q-1} for p in [1, k-1], q in [2, k], with p
/// as the outer loop.
template <class Scalar>
std::vector<Scalar> sk_minors(const SurfacePoint<Scalar>& point) {
  const auto& eta = point.eta;
  const std::size_t k = eta.size();
  std::vector<Scalar> minors;
  if (k < 2) return minors;
  minors.reserve((k - 1) * (k - 1));
  for (std::size_t p = 1; p + 1 <= k; ++p)
    for (std::size_t q = 2; q <= k; ++q)
      minors.push_back(eta[p - 1] * eta[q - 1] - eta[p] * eta[q - 2]);
  return minors;
}

/// Exact membership in S(k).
bool on_surface(const SurfacePoint<Rational>& point);

/// Floating membership: every minor divided by max|eta_h|^2 is within the
/// tolerance. The origin lies on the cone.
template <class Scalar>
bool on_surface(const SurfacePoint<Scalar>& point, double tolerance = 1e-10) {
  using std::abs;
  double scale = 0.0;
  for (const auto& e : point.eta) scale = std::max(scale, static_cast<double>(abs(e)));
  if (scale == 0.0) return true;
  const double bound = tolerance * scale * scale;
  for (const auto& m : sk_minors(point))
    if (static_cast<double>(abs(m)) > bound) return false;
  return true;
}

}  // namespace holoroot
