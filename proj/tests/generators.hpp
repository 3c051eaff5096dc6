#pragma once

// Seeded random generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "holoroot/multiindex.hpp"
#include "holoroot/poly.hpp"
#include "holoroot/rational.hpp"
#include "holoroot/weyl.hpp"

namespace holoroot::proptest {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long span = 9, long max_den = 6) {
    return make_rational(integer(-span, span), integer(1, max_den));
  }

  Rational nonzero_rational(long span = 9, long max_den = 6) {
    Rational r;
    do r = rational(span, max_den);
    while (r == 0);
    return r;
  }

  std::vector<Rational> point(std::size_t n, long span = 9, long max_den = 6) {
    std::vector<Rational> p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(rational(span, max_den));
    return p;
  }

  /// Distinct rationals, e.g. roots of a squarefree polynomial.
  std::vector<Rational> distinct(std::size_t n, long span = 9, long max_den = 4) {
    std::vector<Rational> out;
    while (out.size() < n) {
      Rational r = rational(span, max_den);
      bool fresh = true;
      for (const auto& x : out) fresh = fresh && x != r;
      if (fresh) out.push_back(r);
    }
    return out;
  }

  MultiIndex multiindex(std::size_t k, std::uint32_t max_len) {
    MultiIndex alpha(k);
    const auto len = static_cast<std::uint32_t>(integer(0, max_len));
    for (std::uint32_t i = 0; i < len; ++i) ++alpha[static_cast<std::size_t>(integer(0, static_cast<long>(k) - 1))];
    return alpha;
  }

  Poly poly(std::size_t nvars, std::size_t max_terms = 4, std::uint32_t max_degree = 3) {
    Poly p(nvars);
    const auto terms = static_cast<std::size_t>(integer(0, static_cast<long>(max_terms)));
    for (std::size_t i = 0; i < terms; ++i) p.add_term(multiindex(nvars, max_degree), rational());
    return p;
  }

  DiffOp diffop(std::size_t k, std::uint32_t max_order = 2, std::size_t max_terms = 3) {
    DiffOp d(k);
    const auto terms = static_cast<std::size_t>(integer(1, static_cast<long>(max_terms)));
    for (std::size_t i = 0; i < terms; ++i) d.add_term(multiindex(k, max_order), poly(k, 2, 2));
    return d;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Elementary symmetric functions e_1..e_k of the given roots, i.e. the s
/// with P_s(z) = prod (z - x_j).
inline std::vector<Rational> elementary_symmetric(const std::vector<Rational>& roots) {
  std::vector<Rational> e(roots.size() + 1, Rational(0));
  e[0] = 1;
  for (const auto& x : roots)
    for (std::size_t j = roots.size(); j >= 1; --j) e[j] += e[j - 1] * x;
  return {e.begin() + 1, e.end()};
}

inline Rational power(const Rational& x, long n) {
  Rational out = 1;
  if (n >= 0) {
    for (long i = 0; i < n; ++i) out *= x;
  } else {
    for (long i = 0; i < -n; ++i) out /= x;
  }
  return out;
}

}  // namespace holoroot::proptest
