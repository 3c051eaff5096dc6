#include "holoroot/oracle.hpp"

#include <cmath>
#include <numbers>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "holoroot/weyl.hpp"

namespace holoroot {

CoeffTable radical_table_k2(std::uint32_t order) {
  constexpr std::size_t k = 2;
  const Poly one = Poly::constant(k, 1);
  const Poly u = Poly::variable(k, 1) * Poly::variable(k, 1) * make_rational(1, 4) -
                 Poly::variable(k, 2);
  // sqrt(1 + u) = sum_n binom(1/2, n) u^n; u^n has degree >= n.
  Poly root = one;
  Poly power = one;
  Rational binom = 1;
  for (std::uint32_t n = 1; n <= order; ++n) {
    binom *= (make_rational(1, 2) - (n - 1)) / n;
    power = truncate(power * u, order);
    root += power * binom;
  }
  const Poly f = -truncate(root, order);

  CoeffTable t(k, order);
  for (std::uint32_t q = 0; q <= order; ++q) {
    for (std::uint32_t r = q; r <= 2 * q; ++r) {
      const MultiIndex alpha{2 * q - r, r - q};
      t.set({q, r}, f.coefficient(alpha) * factorial(alpha));
    }
  }
  return t;
}

double compare_series(const Poly& series, std::span<const std::complex<double>> sigma,
                      const NewtonOptions& opt) {
  ShiftedPolynomial<std::complex<double>> p{sigma.size(), {sigma.begin(), sigma.end()}};
  const auto root = newton_root(p, std::complex<double>(-1), opt);
  return std::abs(evaluate<std::complex<double>>(series, sigma) - root);
}

double compare_series(const CoeffTable& t, std::span<const std::complex<double>> sigma,
                      const NewtonOptions& opt) {
  return compare_series(root_series(t), sigma, opt);
}

double compare_series_high_precision(const Poly& series, std::span<const Rational> sigma) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  ShiftedPolynomial<Float> p{sigma.size(), {}};
  for (const auto& s : sigma) p.sigma.push_back(from_rational<Float>(s));
  NewtonOptions opt;
  opt.tol = 1e-45;
  opt.flat_derivative = 1e-30;
  const Float root = newton_root(p, Float(-1), opt);
  const Float value = from_rational<Float>(evaluate(series, sigma));
  return static_cast<double>(abs(value - root));
}

double numeric_diagonal_coefficient(std::size_t k, std::uint32_t h, double radius, int samples) {
  using C = std::complex<double>;
  C total = 0;
  for (int j = 0; j < samples; ++j) {
    const double angle = 2 * std::numbers::pi * j / samples;
    const C t = std::polar(radius, angle);
    ShiftedPolynomial<C> p{k, std::vector<C>(k, C(0))};
    p.sigma[0] = t;
    const C f = newton_root(p) - t / static_cast<double>(k);
    total += f * std::polar(std::pow(radius, -static_cast<double>(h)), -angle * h);
  }
  double fact = 1;
  for (std::uint32_t i = 2; i <= h; ++i) fact *= i;
  return (total / static_cast<double>(samples)).real() * fact;
}

}  // namespace holoroot
