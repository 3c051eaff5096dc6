#include "holoroot/weyl.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace holoroot {

namespace {

Rational binomial(std::uint32_t n, std::uint32_t r) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, r);
  return Rational(out);
}

// Visits every gamma with 0 <= gamma <= alpha componentwise.
template <class Fn>
void for_each_below(const MultiIndex& alpha, Fn&& fn) {
  MultiIndex gamma(alpha.size());
  while (true) {
    fn(gamma);
    std::size_t i = 0;
    while (i < alpha.size() && gamma[i] == alpha[i]) gamma[i++] = 0;
    if (i == alpha.size()) return;
    ++gamma[i];
  }
}

DiffOp d(std::size_t k, std::size_t h) { return DiffOp::derivative(k, h); }

DiffOp mult(const Poly& c) { return DiffOp::multiplication(c); }

DiffOp constant_op(std::size_t k, const Rational& c) {
  return DiffOp::multiplication(Poly::constant(k, c));
}

}  // namespace

DiffOp DiffOp::identity(std::size_t k) { return constant_op(k, 1); }

DiffOp DiffOp::multiplication(const Poly& c) { return term(MultiIndex(c.nvars()), c); }

DiffOp DiffOp::derivative(std::size_t k, std::size_t h) {
  if (h < 1 || h > k) throw std::invalid_argument("derivative index out of range");
  return term(MultiIndex::unit(k, h), Poly::constant(k, 1));
}

DiffOp DiffOp::term(const MultiIndex& alpha, const Poly& c) {
  if (alpha.size() != c.nvars()) throw std::invalid_argument("term dimension mismatch");
  DiffOp out(alpha.size());
  out.add_term(alpha, c);
  return out;
}

std::uint32_t DiffOp::order() const {
  std::uint32_t out = 0;
  for (const auto& [alpha, c] : terms_) out = std::max(out, length(alpha));
  return out;
}

Poly DiffOp::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Poly(k_) : it->second;
}

void DiffOp::add_term(const MultiIndex& alpha, const Poly& c) {
  if (alpha.size() != k_ || c.nvars() != k_)
    throw std::invalid_argument("operator dimension mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void DiffOp::require_same_k(const DiffOp& other) const {
  if (other.k_ != k_) throw std::invalid_argument("operator dimension mismatch");
}

DiffOp& DiffOp::operator+=(const DiffOp& other) {
  require_same_k(other);
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& other) {
  require_same_k(other);
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, -c);
  return *this;
}

DiffOp& DiffOp::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, coeff] : terms_) coeff *= c;
  return *this;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  a.require_same_k(b);
  DiffOp out(a.k_);
  for (const auto& [alpha, ca] : a.terms_) {
    for (const auto& [beta, cb] : b.terms_) {
      for_each_below(alpha, [&](const MultiIndex& gamma) {
        Poly dc = derivative(cb, gamma);
        if (dc.is_zero()) return;
        Rational factor = 1;
        for (std::size_t i = 0; i < gamma.size(); ++i) factor *= binomial(alpha[i], gamma[i]);
        out.add_term(alpha.minus(gamma) + beta, ca * dc * factor);
      });
    }
  }
  return out;
}

DiffOp compose(const DiffOp& d1, const DiffOp& d2) { return d1 * d2; }

Poly derivative(const Poly& p, const MultiIndex& alpha) {
  if (alpha.size() != p.nvars()) throw std::invalid_argument("derivative dimension mismatch");
  Poly out(p.nvars());
  for (const auto& [mono, c] : p.terms()) {
    if (!alpha.divides(mono)) continue;
    Rational coeff = c;
    for (std::size_t i = 0; i < alpha.size(); ++i)
      for (std::uint32_t j = 0; j < alpha[i]; ++j) coeff *= mono[i] - j;
    out.add_term(mono.minus(alpha), coeff);
  }
  return out;
}

Poly apply(const DiffOp& d, const Poly& p) {
  if (d.k() != p.nvars()) throw std::invalid_argument("apply: dimension mismatch");
  Poly out(p.nvars());
  for (const auto& [alpha, c] : d.terms()) out += c * derivative(p, alpha);
  return out;
}

Poly sigma(std::size_t k, std::size_t h) {
  if (h == 0) return Poly::constant(k, 1);
  if (h > k) return Poly(k);
  return Poly::variable(k, h);
}

DiffOp gen_A(std::size_t k, std::size_t p, std::size_t q) {
  if (p < 1 || p + 1 > k || q < 2 || q > k)
    throw std::invalid_argument("gen_A: indices out of range");
  return d(k, p) * d(k, q) - d(k, p + 1) * d(k, q - 1);
}

DiffOp gen_E(std::size_t k) {
  DiffOp out(k);
  for (std::size_t h = 1; h <= k; ++h) out += mult(sigma(k, h)) * d(k, h);
  return out;
}

DiffOp gen_T(std::size_t k, std::size_t m) {
  if (m < 2 || m > k) throw std::invalid_argument("gen_T: m out of range");
  return d(k, 1) * d(k, m - 1) + d(k, m) * gen_E(k);
}

DiffOp gen_U0(std::size_t k, const Rational& lambda) {
  DiffOp out = constant_op(k, -lambda);
  for (std::size_t h = 1; h <= k; ++h) out += mult(sigma(k, h) * Rational(h)) * d(k, h);
  return out;
}

DiffOp gen_Um1(std::size_t k) {
  DiffOp out(k);
  for (std::size_t h = 0; h < k; ++h)
    out += mult(sigma(k, h) * Rational(k - h)) * d(k, h + 1);
  return out;
}

DiffOp gen_U1(std::size_t k) {
  DiffOp out(k);
  for (std::size_t h = 1; h <= k; ++h) {
    Poly c = sigma(k, 1) * sigma(k, h) - sigma(k, h + 1) * Rational(h + 1);
    out += mult(c) * d(k, h);
  }
  return out;
}

DiffOp gen_U0_shifted(std::size_t k, const Rational& lambda) {
  return gen_U0(k, lambda) - constant_op(k, k) * d(k, k);
}

namespace {

std::mutex family_mutex;
std::map<std::size_t, std::vector<Poly>> newton_cache;
// Indexed by m + k - 1.
std::map<std::size_t, std::vector<Poly>> dn_cache;

}  // namespace

Poly newton_polynomial(std::size_t k, std::uint32_t m) {
  if (k == 0) throw std::invalid_argument("newton_polynomial: k must be positive");
  std::lock_guard lock(family_mutex);
  auto& family = newton_cache[k];
  if (family.empty()) family.push_back(Poly::constant(k, k));
  while (family.size() <= m) {
    const std::uint32_t n = static_cast<std::uint32_t>(family.size());
    Poly next(k);
    for (std::uint32_t i = 1; i <= std::min<std::uint32_t>(n - 1, k); ++i) {
      Rational sign = i % 2 == 1 ? 1 : -1;
      next += sigma(k, i) * family[n - i] * sign;
    }
    if (n <= k) next += sigma(k, n) * Rational(n % 2 == 1 ? n : -static_cast<long>(n));
    family.push_back(std::move(next));
  }
  return family[m];
}

Poly dn_polynomial(std::size_t k, int m) {
  if (k == 0) throw std::invalid_argument("dn_polynomial: k must be positive");
  const int lowest = 1 - static_cast<int>(k);
  if (m < lowest) throw std::invalid_argument("dn_polynomial: m < 1 - k");
  std::lock_guard lock(family_mutex);
  auto& family = dn_cache[k];
  if (family.empty()) {
    for (int j = lowest; j < 0; ++j) family.push_back(Poly(k));
    family.push_back(Poly::constant(k, 1));
  }
  while (static_cast<int>(family.size()) + lowest <= m) {
    const int n = static_cast<int>(family.size()) + lowest;
    Poly next(k);
    for (std::size_t h = 1; h <= k; ++h) {
      Rational sign = h % 2 == 1 ? 1 : -1;
      next += sigma(k, h) * family[static_cast<std::size_t>(n - static_cast<int>(h) - lowest)] * sign;
    }
    family.push_back(std::move(next));
  }
  return family[static_cast<std::size_t>(m - lowest)];
}

bool annihilates_newton(const DiffOp& d, std::optional<std::uint32_t> M) {
  const std::uint32_t bound =
      M.value_or(2 * d.order() + 2 * static_cast<std::uint32_t>(d.k()));
  for (std::uint32_t m = 0; m <= bound; ++m)
    if (!apply(d, newton_polynomial(d.k(), m)).is_zero()) return false;
  return true;
}

namespace {

DiffOp field_U(std::size_t k, int p) {
  switch (p) {
    case -1: return gen_Um1(k);
    case 0: return gen_U0(k, 0);
    case 1: return gen_U1(k);
    default: throw std::invalid_argument("U_p is only available for p in {-1, 0, 1}");
  }
}

void require_h(std::size_t k, int h) {
  if (h < 2 || h > static_cast<int>(k)) throw std::invalid_argument("h must lie in [2, k]");
}

}  // namespace

IdentityResidual identity_residual(Identity id, std::size_t k, int a, int b) {
  if (k < 2) throw std::invalid_argument("identity_residual: k must be at least 2");
  const DiffOp U0m1 = gen_U0(k, 1);
  const DiffOp U0p1 = gen_U0(k, -1);
  const DiffOp Um1 = gen_Um1(k);
  switch (id) {
    case Identity::Eh: {
      require_h(k, a);
      const auto h = static_cast<std::size_t>(a);
      DiffOp r = d(k, h) * U0m1 + d(k, h - 1) * Um1 - gen_T(k, h) * Rational(k);
      for (std::size_t q = 1; q < k; ++q)
        r -= mult(sigma(k, q) * Rational(k - q)) * gen_A(k, h - 1, q + 1);
      return {"E_" + std::to_string(h), ResidualKind::exact, std::move(r)};
    }
    case Identity::E1: {
      DiffOp r = -(d(k, 1) * U0m1) + gen_E(k) * Um1;
      for (std::size_t q = 1; q < k; ++q)
        r -= mult(sigma(k, q) * Rational(k - q)) * gen_T(k, q + 1);
      return {"E_1", ResidualKind::exact, std::move(r)};
    }
    case Identity::Fh: {
      require_h(k, a);
      const auto h = static_cast<std::size_t>(a);
      DiffOp r = d(k, h) * gen_U1(k) + d(k, h - 1) * U0p1;
      return {"F_" + std::to_string(h), ResidualKind::membership, std::move(r)};
    }
    case Identity::F1: {
      DiffOp r = d(k, 1) * gen_U1(k) - gen_E(k) * U0p1;
      return {"F_1", ResidualKind::membership, std::move(r)};
    }
    case Identity::commutator: {
      if (a < -1 || a > 1 || b < -1 || b > 1 || a + b < -1 || a + b > 1)
        throw std::invalid_argument("commutator: need p, q, p + q in [-1, 1]");
      const DiffOp Up = field_U(k, a);
      const DiffOp Uq = field_U(k, b);
      DiffOp r = Up * Uq - Uq * Up - field_U(k, a + b) * Rational(b - a);
      return {"[U_" + std::to_string(a) + ",U_" + std::to_string(b) + "]", ResidualKind::exact,
              std::move(r)};
    }
  }
  throw std::invalid_argument("identity_residual: unknown identity");
}

Poly symbol(const DiffOp& d) {
  if (d.is_zero()) throw std::invalid_argument("symbol of the zero operator");
  const std::size_t k = d.k();
  const std::uint32_t top = d.order();
  Poly out(2 * k);
  for (const auto& [alpha, c] : d.terms()) {
    if (length(alpha) != top) continue;
    MultiIndex eta(2 * k);
    for (std::size_t i = 0; i < k; ++i) eta[k + i] = alpha[i];
    out += extend(c, 2 * k) * Poly::monomial(eta);
  }
  return out;
}

std::string to_string(const DiffOp& d) {
  if (d.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, c] : d.terms()) {
    if (!first) os << " + ";
    first = false;
    const std::string coeff = to_string(c);
    if (c.size() > 1)
      os << '(' << coeff << ')';
    else
      os << coeff;
    bool first_d = true;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] == 0) continue;
      os << (first_d ? " * " : " ") << 'd' << (i + 1) << '^' << alpha[i];
      first_d = false;
    }
  }
  return os.str();
}

}  // namespace holoroot
