#pragma once

// Exact rational scalars and conversions into floating scalar types.

#include <complex>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace holoroot {

// mpq_class arithmetic keeps values canonical: lowest terms, positive
// denominator, zero stored as 0/1.
using Rational = mpq_class;

/// num/den in lowest terms. Throws std::invalid_argument when den == 0.
Rational make_rational(long num, long den);

/// Parses `p`, `p/q` or a decimal literal such as `-0.125` (read exactly as
/// p/10^n). Throws std::invalid_argument on malformed input or a zero
/// denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: `p` for integers, `p/q` otherwise.
std::string to_string(const Rational& value);

namespace detail {
template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};
}  // namespace detail

/// Converts an exact rational into a floating scalar. Works for double,
/// long double, std::complex of those, and any type constructible from a
/// decimal integer string (e.g. boost::multiprecision floats).
template <class Scalar>
Scalar from_rational(const Rational& value) {
  if constexpr (detail::is_complex<Scalar>::value) {
    return Scalar(from_rational<typename Scalar::value_type>(value));
  } else if constexpr (std::is_same_v<Scalar, double>) {
    return value.get_d();
  } else if constexpr (std::is_same_v<Scalar, long double>) {
    return std::stold(value.get_num().get_str()) /
           std::stold(value.get_den().get_str());
  } else {
    return Scalar(value.get_num().get_str()) /
           Scalar(value.get_den().get_str());
  }
}

}  // namespace holoroot
