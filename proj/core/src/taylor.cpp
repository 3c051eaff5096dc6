#include "holoroot/taylor.hpp"

#include <stdexcept>

#include "holoroot/weyl.hpp"

namespace holoroot {

CoeffTable::CoeffTable(std::size_t k, std::uint32_t order) : k_(k), order_(order) {
  if (k < 2) throw std::invalid_argument("coefficient tables need k >= 2");
}

bool CoeffTable::in_range(QRKey key) const {
  return key.q <= order_ && class_nonempty(k_, key);
}

Rational CoeffTable::at(QRKey key) const {
  auto it = values_.find(key);
  return it == values_.end() ? Rational(0) : it->second;
}

void CoeffTable::set(QRKey key, const Rational& value) {
  if (!in_range(key)) throw std::out_of_range("coefficient key out of range");
  values_[key] = value;
}

CoeffTable seed_coefficients(std::size_t k) {
  CoeffTable t(k, 1);
  t.set({0, 0}, -1);
  t.set({1, 1}, 0);
  for (std::uint32_t h = 2; h <= k; ++h) t.set({1, h}, make_rational(1, static_cast<long>(k)));
  return t;
}

namespace {

Rational frac(long num, std::size_t den) { return make_rational(num, static_cast<long>(den)); }

// C_{h,h} for h in [2, k] by the (B) chain from C_{1,h} = 1/k.
Rational diagonal_by_chain(std::size_t k, std::uint32_t h) {
  Rational c = frac(1, k);
  for (std::uint32_t q = 1; q < h; ++q) c *= -frac(static_cast<long>(k * q) - h + 1, k);
  return c;
}

}  // namespace

CoeffTable build_table(std::size_t k, std::uint32_t order) {
  if (k < 2) throw std::invalid_argument("build_table needs k >= 2");
  CoeffTable t(k, order);
  const CoeffTable seeds = seed_coefficients(k);
  for (const auto& [key, value] : seeds.values())
    if (t.in_range(key)) t.set(key, value);
  if (order == 0) return t;

  const auto kk = static_cast<long>(k);
  const std::uint32_t top = static_cast<std::uint32_t>(k) * order;
  std::vector<Rational> diag(top + 1, Rational(0));
  for (std::uint32_t h = 2; h <= std::min<std::uint32_t>(static_cast<std::uint32_t>(k), top); ++h)
    diag[h] = diagonal_by_chain(k, h);
  for (std::uint32_t r = 1; r + k <= top; ++r) {
    const Rational shift = frac(static_cast<long>(r) - 1, k);
    Rational c = shift * diag[r];
    for (long p = 0; p <= kk - 2; ++p) c *= Rational(static_cast<long>(r) + p) - shift;
    diag[r + k] = (k % 2 == 0 ? -c : c);
  }

  for (std::uint32_t q = 1; q <= order; ++q) {
    for (std::uint32_t r = q; r <= k * q; ++r) {
      if ((r - 1) % k == 0) {
        t.set({q, r}, 0);
        continue;
      }
      const std::uint32_t s = r - q;
      const Rational shift = frac(static_cast<long>(r) - 1, k);
      Rational den = 1;
      for (std::uint32_t j = 1; j <= s; ++j) den *= Rational(static_cast<long>(r - j)) - shift;
      Rational value = diag[r] / den;
      t.set({q, r}, s % 2 == 0 ? value : -value);
    }
  }
  return t;
}

std::vector<RecurrenceViolation> check_recurrences(const CoeffTable& t) {
  std::vector<RecurrenceViolation> out;
  const std::size_t k = t.k();
  const auto kr = Rational(static_cast<unsigned long>(k));
  for (std::uint32_t q = 1; q + 1 <= t.order(); ++q) {
    for (std::uint32_t r = q; r <= k * q; ++r) {
      Rational res = Rational(static_cast<long>(r) - 1) * t.at(q, r) -
                     kr * t.at(q + 1, r + static_cast<std::uint32_t>(k));
      if (res != 0) out.push_back({'A', {q, r}, res});
    }
  }
  for (std::uint32_t q = 1; q + 1 <= t.order(); ++q) {
    for (std::uint32_t r = q + 1; r <= k * q; ++r) {
      Rational res = Rational(static_cast<long>(k * q) - r + 1) * t.at(q, r) + kr * t.at(q + 1, r);
      if (res != 0) out.push_back({'B', {q, r}, res});
    }
  }
  return out;
}

Poly assemble_series(const CoeffTable& t) {
  Poly out(t.k());
  for (const auto& [key, value] : t.values())
    if (value != 0) out += mqr_polynomial(t.k(), key) * value;
  return out;
}

Poly root_series(const CoeffTable& t) {
  return assemble_series(t) + Poly::variable(t.k(), 1) * frac(1, t.k());
}

std::vector<OperatorResidual> annihilation_residuals(const CoeffTable& t) {
  const std::size_t k = t.k();
  const Poly series = assemble_series(t);
  std::vector<std::pair<std::string, DiffOp>> ops;
  for (std::size_t p = 1; p < k; ++p)
    for (std::size_t q = 2; q <= k; ++q)
      ops.emplace_back("A_" + std::to_string(p) + "," + std::to_string(q), gen_A(k, p, q));
  ops.emplace_back("U0_shifted-1", gen_U0_shifted(k, 1));
  ops.emplace_back("U_-1", gen_Um1(k));

  std::vector<OperatorResidual> out;
  for (const auto& [name, op] : ops) {
    OperatorResidual report{name, op.order(), std::nullopt, std::nullopt, true};
    // A_{p,q} is order 2 even when it cancels to zero (k = 2).
    const std::uint32_t order = name[0] == 'A' ? 2 : op.order();
    report.order = order;
    if (t.order() >= order) report.window = t.order() - order;
    const Poly residual = apply(op, series);
    if (!residual.is_zero()) {
      report.lowest_nonzero = length(residual.terms().begin()->first);
      if (report.window && *report.lowest_nonzero <= *report.window) report.ok = false;
    }
    out.push_back(std::move(report));
  }
  return out;
}

Rational displayed_diagonal_formula(std::size_t k, std::uint32_t h) {
  const Rational shift = frac(static_cast<long>(h) - 1, k);
  Rational num = 1;
  for (std::uint32_t j = 1; j < h; ++j) num *= Rational(static_cast<long>(h - j)) - shift;
  Rational den = 1;
  for (std::size_t p = 0; p + 2 <= k; ++p) den *= Rational(static_cast<long>(h + p)) - shift;
  Rational value = num / den;
  return (k + h) % 2 == 0 ? value : Rational(-value);
}

std::vector<DiagonalDiagnostic> diagonal_diagnostics(std::size_t k) {
  if (k < 2) throw std::invalid_argument("diagonal_diagnostics needs k >= 2");
  std::vector<DiagonalDiagnostic> out;
  for (std::uint32_t h = 2; h <= k; ++h) {
    const Rational shift = frac(static_cast<long>(h) - 1, k);
    Rational inverted = frac(1, k);
    for (std::uint32_t j = 1; j < h; ++j) inverted *= Rational(static_cast<long>(h - j)) - shift;
    if ((h - 1) % 2 == 1) inverted = -inverted;
    const Rational recurrence = diagonal_by_chain(k, h);
    const Rational displayed = displayed_diagonal_formula(k, h);
    out.push_back({h, recurrence, inverted, displayed, displayed != recurrence});
  }
  return out;
}

}  // namespace holoroot
