#include "holoroot/poly.hpp"

#include <sstream>

namespace holoroot {

VarNames sigma_names(std::size_t k) {
  VarNames names;
  for (std::size_t i = 1; i <= k; ++i) names.push_back("s" + std::to_string(i));
  return names;
}

VarNames symbol_names(std::size_t k) {
  VarNames names = sigma_names(k);
  for (std::size_t i = 1; i <= k; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(MultiIndex(nvars), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  Poly p(nvars);
  p.add_term(MultiIndex::unit(nvars, i), 1);
  return p;
}

Poly Poly::monomial(const MultiIndex& alpha, const Rational& c) {
  Poly p(alpha.size());
  p.add_term(alpha, c);
  return p;
}

std::uint32_t Poly::total_degree() const {
  return terms_.empty() ? 0 : length(terms_.rbegin()->first);
}

Rational Poly::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const { return coefficient(MultiIndex(nvars_)); }

void Poly::add_term(const MultiIndex& alpha, const Rational& c) {
  if (alpha.size() != nvars_) throw std::invalid_argument("term dimension mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::require_same_ring(const Poly& other) const {
  if (other.nvars_ != nvars_) throw std::invalid_argument("polynomial variable-count mismatch");
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_ring(other);
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_ring(other);
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_ring(b);
  Poly out(a.nvars_);
  for (const auto& [alpha, c] : a.terms_)
    for (const auto& [beta, d] : b.terms_) out.add_term(alpha + beta, c * d);
  return out;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, coeff] : terms_) coeff *= c;
  return *this;
}

Poly add(const Poly& a, const Poly& b) { return a + b; }
Poly mul(const Poly& a, const Poly& b) { return a * b; }
Poly scale(const Poly& a, const Rational& c) { return a * c; }

Poly partial_derivative(const Poly& a, std::size_t i) {
  if (i < 1 || i > a.nvars()) throw std::out_of_range("partial_derivative: index out of range");
  Poly out(a.nvars());
  for (const auto& [alpha, c] : a.terms()) {
    const std::uint32_t e = alpha[i - 1];
    if (e == 0) continue;
    MultiIndex beta = alpha;
    beta[i - 1] = e - 1;
    out.add_term(beta, c * e);
  }
  return out;
}

Poly homogeneous_part(const Poly& a, std::uint32_t degree) {
  Poly out(a.nvars());
  for (const auto& [alpha, c] : a.terms())
    if (length(alpha) == degree) out.add_term(alpha, c);
  return out;
}

Poly truncate(const Poly& a, std::uint32_t degree) {
  Poly out(a.nvars());
  for (const auto& [alpha, c] : a.terms())
    if (length(alpha) <= degree) out.add_term(alpha, c);
  return out;
}

Poly extend(const Poly& a, std::size_t nvars) {
  if (nvars < a.nvars()) throw std::invalid_argument("extend: cannot drop variables");
  Poly out(nvars);
  for (const auto& [alpha, c] : a.terms()) {
    MultiIndex beta(nvars);
    for (std::size_t i = 0; i < alpha.size(); ++i) beta[i] = alpha[i];
    out.add_term(beta, c);
  }
  return out;
}

Poly divide_exact(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("divide_exact: variable-count mismatch");
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
  const auto& [lead_b, lead_c] = *b.terms().rbegin();
  Poly remainder = a;
  Poly quotient(a.nvars());
  while (!remainder.is_zero()) {
    const auto& [lead_r, lead_rc] = *remainder.terms().rbegin();
    if (!lead_b.divides(lead_r)) throw std::domain_error("divide_exact: not divisible");
    Poly step = Poly::monomial(lead_r.minus(lead_b), lead_rc / lead_c);
    quotient += step;
    remainder -= step * b;
  }
  return quotient;
}

Rational evaluate(const Poly& a, std::span<const Rational> point) {
  if (point.size() != a.nvars())
    throw std::invalid_argument("evaluate: point length differs from variable count");
  Rational total = 0;
  for (const auto& [alpha, c] : a.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] == 0) continue;
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), point[i].get_num_mpz_t(), alpha[i]);
      mpz_pow_ui(den.get_mpz_t(), point[i].get_den_mpz_t(), alpha[i]);
      term *= Rational(num, den);
    }
    total += term;
  }
  return total;
}

Poly mqr_polynomial(std::size_t k, QRKey key) {
  Poly out(k);
  for (const auto& alpha : enumerate_class(k, key)) {
    Rational c = 1 / factorial(alpha);
    out.add_term(alpha, c);
  }
  return out;
}

std::string to_string(const Poly& a, const VarNames& names) {
  if (names.size() < a.nvars()) throw std::invalid_argument("to_string: too few variable names");
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    bool first_var = true;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] == 0) continue;
      os << (first_var ? " * " : " ") << names[i] << '^' << alpha[i];
      first_var = false;
    }
  }
  return os.str();
}

std::string to_string(const Poly& a) { return to_string(a, sigma_names(a.nvars())); }

}  // namespace holoroot
