#include "holoroot/multiindex.hpp"

#include <numeric>

namespace holoroot {

MultiIndex MultiIndex::unit(std::size_t k, std::size_t h) {
  if (h < 1 || h > k) throw std::out_of_range("unit index outside [1, k]");
  MultiIndex e(k);
  e.exps_[h - 1] = 1;
  return e;
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& other) {
  if (other.size() != size()) throw std::invalid_argument("multi-index dimension mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
  return *this;
}

bool MultiIndex::divides(const MultiIndex& other) const {
  if (other.size() != size()) throw std::invalid_argument("multi-index dimension mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

MultiIndex MultiIndex::minus(const MultiIndex& other) const {
  if (!other.divides(*this)) throw std::invalid_argument("multi-index subtraction underflow");
  MultiIndex out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= other.exps_[i];
  return out;
}

std::uint32_t length(const MultiIndex& alpha) {
  auto e = alpha.exponents();
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

std::uint32_t weight(const MultiIndex& alpha) {
  std::uint32_t w = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    w += static_cast<std::uint32_t>(i + 1) * alpha[i];
  return w;
}

Rational factorial(const MultiIndex& alpha) {
  mpz_class f = 1;
  for (auto a : alpha.exponents()) {
    mpz_class fa;
    mpz_fac_ui(fa.get_mpz_t(), a);
    f *= fa;
  }
  return Rational(f);
}

bool equivalent(const MultiIndex& alpha, const MultiIndex& beta) {
  if (alpha.size() != beta.size())
    throw std::invalid_argument("equivalent: dimension mismatch");
  return length(alpha) == length(beta) && weight(alpha) == weight(beta);
}

bool GradedOrder::operator()(const MultiIndex& a, const MultiIndex& b) const {
  const auto da = length(a);
  const auto db = length(b);
  if (da != db) return da < db;
  return b < a;
}

bool class_nonempty(std::size_t k, QRKey key) {
  return key.r >= key.q && key.r <= k * key.q;
}

namespace {

void enumerate_rec(std::size_t pos, std::uint32_t remaining_len, std::uint32_t remaining_wt,
                   MultiIndex& current, std::vector<MultiIndex>& out) {
  const std::size_t k = current.size();
  const std::uint32_t h = static_cast<std::uint32_t>(pos + 1);
  if (pos + 1 == k) {
    if (remaining_wt == h * remaining_len) {
      current[pos] = remaining_len;
      out.push_back(current);
      current[pos] = 0;
    }
    return;
  }
  // Remaining weight must lie in [h' * len', k * len'] for the tail.
  for (std::uint32_t a = std::min(remaining_len, remaining_wt / h) + 1; a-- > 0;) {
    const std::uint32_t len = remaining_len - a;
    const std::uint32_t wt = remaining_wt - h * a;
    if (wt < (h + 1) * len || wt > k * len) continue;
    current[pos] = a;
    enumerate_rec(pos + 1, len, wt, current, out);
    current[pos] = 0;
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_class(std::size_t k, QRKey key) {
  std::vector<MultiIndex> out;
  if (k == 0 || !class_nonempty(k, key)) return out;
  MultiIndex current(k);
  enumerate_rec(0, key.q, key.r, current, out);
  return out;
}

bool is_minimal(const MultiIndex& alpha) {
  const std::size_t k = alpha.size();
  if (k <= 2) return true;
  std::uint32_t middle = 0;
  for (std::size_t pos = 1; pos + 1 < k; ++pos) middle += alpha[pos];
  return middle <= 1;
}

std::optional<MultiIndex> minimal_form(std::size_t k, QRKey key) {
  if (k == 0 || !class_nonempty(k, key)) return std::nullopt;
  MultiIndex mu(k);
  if (key.q == 0) return mu;
  if (k == 1) {
    mu[0] = key.q;
    return mu;
  }
  const std::uint32_t excess = key.r - key.q;  // (k-1) m + (j-1)
  const std::uint32_t m = excess / static_cast<std::uint32_t>(k - 1);
  const std::uint32_t j_minus_1 = excess % static_cast<std::uint32_t>(k - 1);
  if (j_minus_1 == 0) {
    mu[0] = key.q - m;
    mu[k - 1] += m;
  } else {
    mu[0] = key.q - 1 - m;
    mu[j_minus_1] = 1;
    mu[k - 1] += m;
  }
  return mu;
}

MultiIndex reduce_to_minimal(const MultiIndex& alpha) {
  const std::size_t k = alpha.size();
  if (k <= 2) return alpha;
  // mu = x1^ones * x_middle * xk^tops, middle == 0 meaning "absent".
  std::uint32_t ones = 0, tops = 0;
  std::size_t middle = 0;
  for (std::size_t h = 1; h <= k; ++h) {
    for (std::uint32_t n = 0; n < alpha[h - 1]; ++n) {
      if (h == 1) {
        ++ones;
      } else if (h == k) {
        ++tops;
      } else if (middle == 0) {
        middle = h;
      } else {
        const std::size_t j = middle;
        if (h + j - 1 <= k) {
          ++ones;
          middle = h + j - 1;
        } else {
          ++tops;
          middle = h + j - k;
        }
        if (middle == k) {
          ++tops;
          middle = 0;
        } else if (middle == 1) {
          ++ones;
          middle = 0;
        }
      }
    }
  }
  MultiIndex mu(k);
  mu[0] = ones;
  mu[k - 1] = tops;
  if (middle != 0) mu[middle - 1] += 1;
  return mu;
}

bool on_surface(const SurfacePoint<Rational>& point) {
  for (const auto& m : sk_minors(point))
    if (m != 0) return false;
  return true;
}

}  // namespace holoroot
