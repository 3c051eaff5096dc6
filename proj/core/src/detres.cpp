#include "holoroot/detres.hpp"

#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "holoroot/weyl.hpp"

namespace holoroot {

PolyMatrix PolyMatrix::zero(std::size_t rows, std::size_t cols, std::size_t nvars) {
  PolyMatrix m;
  m.rows.assign(rows, std::vector<Poly>(cols, Poly(nvars)));
  return m;
}

PolyMatrix PolyMatrix::identity(std::size_t n, std::size_t nvars) {
  PolyMatrix m = zero(n, n, nvars);
  for (std::size_t i = 0; i < n; ++i) m.rows[i][i] = Poly::constant(nvars, 1);
  return m;
}

bool PolyMatrix::is_square() const {
  for (const auto& row : rows)
    if (row.size() != rows.size()) return false;
  return true;
}

namespace {

void require_square(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
}

std::size_t ring_of(const PolyMatrix& m) {
  return m.rows.empty() ? 0 : m.rows.front().front().nvars();
}

}  // namespace

Poly determinant_cofactor(const PolyMatrix& m) {
  require_square(m);
  const std::size_t n = m.row_count();
  if (n == 0) return Poly::constant(0, 1);
  if (n > 20) throw std::invalid_argument("determinant_cofactor: dimension too large");
  const std::size_t nvars = ring_of(m);
  // det of rows [n - popcount(cols), n) restricted to the column set `cols`.
  std::unordered_map<std::uint32_t, Poly> memo;
  auto rec = [&](auto&& self, std::uint32_t cols) -> Poly {
    if (cols == 0) return Poly::constant(nvars, 1);
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    const std::size_t row = n - static_cast<std::size_t>(__builtin_popcount(cols));
    Poly total(nvars);
    int position = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(cols & (1u << j))) continue;
      const Poly& entry = m.rows[row][j];
      if (!entry.is_zero()) {
        Poly minor = self(self, cols & ~(1u << j));
        if (position % 2 == 0)
          total += entry * minor;
        else
          total -= entry * minor;
      }
      ++position;
    }
    memo.emplace(cols, total);
    return total;
  };
  return rec(rec, (n == 32 ? 0u : (1u << n)) - 1u);
}

Poly determinant(const PolyMatrix& m) {
  require_square(m);
  const std::size_t n = m.row_count();
  if (n <= 4) return determinant_cofactor(m);
  const std::size_t nvars = ring_of(m);
  std::vector<std::vector<Poly>> a = m.rows;
  Poly previous = Poly::constant(nvars, 1);
  bool negate = false;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (a[p][p].is_zero()) {
      std::size_t swap_row = p + 1;
      while (swap_row < n && a[swap_row][p].is_zero()) ++swap_row;
      if (swap_row == n) return Poly(nvars);
      std::swap(a[p], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = p + 1; i < n; ++i) {
      for (std::size_t j = p + 1; j < n; ++j)
        a[i][j] = divide_exact(a[p][p] * a[i][j] - a[i][p] * a[p][j], previous);
      a[i][p] = Poly(nvars);
    }
    previous = a[p][p];
  }
  Poly det = a[n - 1][n - 1];
  return negate ? -det : det;
}

int UnivariatePoly::degree() const {
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    if (!coeffs[static_cast<std::size_t>(i)].is_zero()) return i;
  return -1;
}

UnivariatePoly UnivariatePoly::derivative() const {
  UnivariatePoly out;
  for (std::size_t i = 1; i < coeffs.size(); ++i)
    out.coeffs.push_back(coeffs[i] * Rational(static_cast<unsigned long>(i)));
  if (out.coeffs.empty() && !coeffs.empty()) out.coeffs.push_back(Poly(coeffs.front().nvars()));
  return out;
}

Poly resultant(const UnivariatePoly& p, const UnivariatePoly& q) {
  const int dp = p.degree();
  const int dq = q.degree();
  if (dp < 0 || dq < 0) throw std::invalid_argument("resultant of a zero polynomial");
  const std::size_t nvars = p.coeffs.front().nvars();
  if (q.coeffs.front().nvars() != nvars)
    throw std::invalid_argument("resultant: coefficient rings differ");
  const auto m = static_cast<std::size_t>(dp);
  const auto n = static_cast<std::size_t>(dq);
  if (m + n == 0) return Poly::constant(nvars, 1);
  PolyMatrix s = PolyMatrix::zero(m + n, m + n, nvars);
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t i = 0; i <= m; ++i) s.rows[row][row + i] = p.coeffs[m - i];
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t i = 0; i <= n; ++i) s.rows[n + row][row + i] = q.coeffs[n - i];
  return determinant(s);
}

UnivariatePoly universal_polynomial(std::size_t k) {
  UnivariatePoly p;
  p.coeffs.assign(k + 1, Poly(k));
  for (std::size_t h = 0; h <= k; ++h)
    p.coeffs[k - h] = sigma(k, h) * Rational(h % 2 == 0 ? 1 : -1);
  return p;
}

Poly discriminant(std::size_t k) {
  if (k < 2) throw std::invalid_argument("discriminant needs k >= 2");
  const UnivariatePoly p = universal_polynomial(k);
  Poly res = resultant(p, p.derivative());
  return (k * (k - 1) / 2) % 2 == 0 ? res : -res;
}

namespace {

std::vector<std::string> y_labels(std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t r = 2; r <= 2 * k; ++r) labels.push_back("y" + std::to_string(r));
  return labels;
}

ProportionalityCheck check_proportional(const Poly& det, const Poly& reference,
                                        const char* what) {
  if (det == reference) return {det, 1, reference};
  if (det == -reference) return {det, -1, reference};
  throw std::logic_error(std::string(what) + ": determinant is not +-1 times the reference");
}

void require_k(std::size_t k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
}

}  // namespace

PolyMatrix lemma_determinant_matrix(std::size_t k) {
  require_k(k);
  const std::size_t n = 2 * k - 1;
  PolyMatrix m = PolyMatrix::zero(n, n, k);
  m.col_labels = y_labels(k);
  std::size_t row = 0;
  for (std::size_t q = 1; q <= k; ++q, ++row) {
    for (std::size_t h = 1; h <= k; ++h) m.rows[row][q + h - 2] = sigma(k, h) * Rational(h);
    m.row_labels.push_back("L" + std::to_string(q));
  }
  for (std::size_t r = 2; r <= k; ++r, ++row) {
    for (std::size_t h = 0; h <= k; ++h) m.rows[row][r + h - 2] = sigma(k, h);
    m.row_labels.push_back("Lambda" + std::to_string(r));
  }
  return m;
}

ProportionalityCheck lemma_determinant_check(std::size_t k) {
  const Poly det = determinant(lemma_determinant_matrix(k));
  return check_proportional(det, sigma(k, k) * discriminant(k), "lemma_determinant_check");
}

PolyMatrix lemma_manquant_matrix(std::size_t k) {
  require_k(k);
  const std::size_t n = 2 * k - 1;
  PolyMatrix m = PolyMatrix::zero(n, n, k);
  m.col_labels = y_labels(k);
  std::size_t row = 0;
  for (std::size_t j = 2; j <= k; ++j, ++row) {
    for (std::size_t p = 1; p <= k; ++p) m.rows[row][j + p - 2] = sigma(k, p) * Rational(p);
    m.row_labels.push_back("A" + std::to_string(j));
  }
  for (std::size_t h = 1; h <= k; ++h, ++row) {
    for (std::size_t p = 0; p < k; ++p) m.rows[row][h + p - 1] = sigma(k, p) * Rational(k - p);
    m.row_labels.push_back("B" + std::to_string(h));
  }
  return m;
}

ProportionalityCheck lemma_manquant_check(std::size_t k) {
  const Poly det = determinant(lemma_manquant_matrix(k));
  Rational factor = 1;
  for (std::size_t i = 1; i < k; ++i) factor *= -static_cast<long>(k);
  return check_proportional(det, discriminant(k) * factor, "lemma_manquant_check");
}

}  // namespace holoroot
