#pragma once

// Taylor coefficients C_{q,r} of the root near -1 of
//   z^k + sum_h (-1)^h s_h z^(k-h) - (-1)^k = 0,
// written in the m_{q,r} basis: z(s) - s1/k = sum C_{q,r} m_{q,r}(s).

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holoroot/multiindex.hpp"
#include "holoroot/poly.hpp"
#include "holoroot/rational.hpp"

namespace holoroot {

class CoeffTable {
 public:
  using Values = std::map<QRKey, Rational>;

  CoeffTable(std::size_t k, std::uint32_t order);

  std::size_t k() const { return k_; }
  std::uint32_t order() const { return order_; }
  const Values& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  /// True iff q <= order and r in [q, k q].
  bool in_range(QRKey key) const;
  bool contains(QRKey key) const { return values_.count(key) != 0; }
  /// Stored value; 0 for keys that are absent or out of range.
  Rational at(QRKey key) const;
  Rational at(std::uint32_t q, std::uint32_t r) const { return at(QRKey{q, r}); }
  /// Throws std::out_of_range when the key is not in range.
  void set(QRKey key, const Rational& value);

  friend bool operator==(const CoeffTable&, const CoeffTable&) = default;

 private:
  std::size_t k_;
  std::uint32_t order_;
  Values values_;
};

/// C_{0,0} = -1, C_{1,1} = 0, C_{1,h} = 1/k (h in [2, k]); order 1.
CoeffTable seed_coefficients(std::size_t k);

/// Full table through length `order`. Fill order: seeds; C_{h,h} for
/// h in [2, k] by iterating (B) from C_{1,h}; the remaining diagonal by
/// (A*); the off-diagonal by (B*); finally every key with r = 1 mod k is
/// zeroed. Throws std::invalid_argument for k < 2.
CoeffTable build_table(std::size_t k, std::uint32_t order);

struct RecurrenceViolation {
  char relation;  ///< 'A' or 'B'
  QRKey key;      ///< (q, r) at which the relation was evaluated
  Rational residual;
};

/// (A): (r-1) C_{q,r} - k C_{q+1,r+k} = 0 for q >= 1, r in [q, kq];
/// (B): (kq - r + 1) C_{q,r} + k C_{q+1,r} = 0 for q >= 1, r in [q+1, kq];
/// both only where q + 1 <= order. Returns all violations, sorted by
/// relation then key.
std::vector<RecurrenceViolation> check_recurrences(const CoeffTable& t);

/// sum C_{q,r} m_{q,r}(s)
Poly assemble_series(const CoeffTable& t);
/// assemble_series(t) + s1/k, the truncated root itself.
Poly root_series(const CoeffTable& t);

struct OperatorResidual {
  std::string name;
  std::uint32_t order;
  /// Residual must vanish in every total degree <= window (absent when the
  /// window is empty).
  std::optional<std::uint32_t> window;
  /// Lowest total degree with a nonzero residual, if any.
  std::optional<std::uint32_t> lowest_nonzero;
  bool ok;
};

/// Applies every A_{p,q}, the shifted Euler operator minus 1 and U_{-1} to
/// the assembled series and checks each residual degree by degree.
std::vector<OperatorResidual> annihilation_residuals(const CoeffTable& t);

struct DiagonalDiagnostic {
  std::uint32_t h;
  Rational recurrence;  ///< iterate (B) from C_{1,h} = 1/k
  Rational inverted;    ///< (B*) at r = h, s = h - 1 solved for C_{h,h}
  Rational displayed;   ///< printed closed form
  bool discrepancy;     ///< displayed != recurrence
};

/// (-1)^(k-h) prod_{j=1}^{h-1} (h - j - (h-1)/k) / prod_{p=0}^{k-2} (h + p - (h-1)/k)
Rational displayed_diagonal_formula(std::size_t k, std::uint32_t h);

/// One entry per h in [2, k].
std::vector<DiagonalDiagnostic> diagonal_diagnostics(std::size_t k);

}  // namespace holoroot
