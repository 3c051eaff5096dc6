#include "holoroot/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace holoroot {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("malformed integer");
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational literal");

  try {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      mpz_class num = parse_integer(text.substr(0, slash));
      std::string_view den_text = text.substr(slash + 1);
      if (!all_digits(den_text)) throw std::invalid_argument("bad denominator");
      mpz_class den(std::string(den_text), 10);
      if (den == 0) throw std::invalid_argument("zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      std::string_view int_part = text.substr(0, dot);
      std::string_view frac_part = text.substr(dot + 1);
      bool negative = !int_part.empty() && int_part.front() == '-';
      if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+'))
        int_part.remove_prefix(1);
      if (int_part.empty() && frac_part.empty())
        throw std::invalid_argument("bare decimal point");
      if (!int_part.empty() && !all_digits(int_part))
        throw std::invalid_argument("bad integer part");
      if (!frac_part.empty() && !all_digits(frac_part))
        throw std::invalid_argument("bad fractional part");
      std::string digits = std::string(int_part) + std::string(frac_part);
      mpz_class num(digits.empty() ? std::string("0") : digits, 10);
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
      Rational q(negative ? mpz_class(-num) : num, den);
      q.canonicalize();
      return q;
    }
    return Rational(parse_integer(text));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("cannot parse rational '" + std::string(text) + "'");
  }
}

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace holoroot
