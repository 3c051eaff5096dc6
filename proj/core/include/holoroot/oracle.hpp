#pragma once

// Independent ground truth for the coefficient tables: Newton refinement of
// the root near -1, the closed-form radical expansion for k = 2, and a
// contour-integral estimate of the diagonal coefficients.

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "holoroot/poly.hpp"
#include "holoroot/taylor.hpp"

namespace holoroot {

/// P(z) = z^k + sum_h (-1)^h s_h z^(k-h) - (-1)^k, the universal polynomial
/// at (0,...,0,-1) + s.
template <class Scalar = std::complex<double>>
struct ShiftedPolynomial {
  std::size_t k = 0;
  std::vector<Scalar> sigma;
};

/// Coefficients from z^k down to z^0.
template <class Scalar>
std::vector<Scalar> poly_coeffs(const ShiftedPolynomial<Scalar>& p) {
  if (p.sigma.size() != p.k) throw std::invalid_argument("sigma length differs from k");
  std::vector<Scalar> c(p.k + 1, Scalar(0));
  c[0] = Scalar(1);
  for (std::size_t h = 1; h <= p.k; ++h) c[h] = h % 2 == 0 ? p.sigma[h - 1] : Scalar(-p.sigma[h - 1]);
  c[p.k] += p.k % 2 == 0 ? Scalar(-1) : Scalar(1);
  return c;
}

struct NewtonOptions {
  double tol = 1e-14;
  int max_iter = 100;
  /// Smallest |P'(z)| accepted at an iterate.
  double flat_derivative = 1e-12;
  /// Largest |z - start| accepted; further means the iteration left the
  /// basin of the root near -1.
  double max_drift = 0.5;
};

class NewtonError : public std::runtime_error {
 public:
  enum class Kind { no_convergence, flat_derivative, left_basin };
  NewtonError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Newton iteration z <- z - P(z)/P'(z) until |step| <= tol. Throws
/// NewtonError on failure.
template <class Scalar>
Scalar newton_root(const ShiftedPolynomial<Scalar>& p, Scalar start = Scalar(-1),
                   const NewtonOptions& opt = {}) {
  using std::abs;
  const std::vector<Scalar> c = poly_coeffs(p);
  Scalar z = start;
  for (int iter = 0; iter < opt.max_iter; ++iter) {
    Scalar value = c[0];
    Scalar slope(0);
    for (std::size_t i = 1; i < c.size(); ++i) {
      slope = slope * z + value;
      value = value * z + c[i];
    }
    if (value == Scalar(0)) return z;
    if (abs(slope) < opt.flat_derivative)
      throw NewtonError(NewtonError::Kind::flat_derivative, "newton_root: derivative vanishes");
    const Scalar step = value / slope;
    z -= step;
    if (abs(z - start) > opt.max_drift)
      throw NewtonError(NewtonError::Kind::left_basin, "newton_root: iterate left the basin");
    if (abs(step) <= opt.tol) return z;
  }
  throw NewtonError(NewtonError::Kind::no_convergence, "newton_root: no convergence");
}

/// Table for k = 2 from z = s1/2 - sqrt(1 + u), u = (s1^2 - 4 s2)/4, expanded
/// by the binomial series with exact rationals and read off in the m_{q,r}
/// basis.
CoeffTable radical_table_k2(std::uint32_t order);

/// |series(s) - newton_root(s)| in double precision complex arithmetic;
/// `series` is a root_series polynomial.
double compare_series(const Poly& series, std::span<const std::complex<double>> sigma,
                      const NewtonOptions& opt = {});
double compare_series(const CoeffTable& t, std::span<const std::complex<double>> sigma,
                      const NewtonOptions& opt = {});

/// Same comparison for a rational s: the series is evaluated exactly and the
/// root is refined with 50 significant digits, so truncation errors far below
/// double resolution are measured faithfully.
double compare_series_high_precision(const Poly& series, std::span<const Rational> sigma);

/// h! times the Taylor coefficient of z(t, 0, ..., 0) - t/k at t^h, by the
/// trapezoidal rule on the circle |t| = radius. Approximates C_{h,h}.
double numeric_diagonal_coefficient(std::size_t k, std::uint32_t h, double radius = 0.25,
                                    int samples = 128);

}  // namespace holoroot
