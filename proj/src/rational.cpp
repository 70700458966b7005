#include "conoff/rational.hpp"

#include "conoff/errors.hpp"

#include <cctype>
#include <cstdlib>
#include <string>

namespace conoff {

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInteger parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw ParseError("malformed integer '" + std::string(s) + "'");
  }
  std::string digits(s);
  if (digits.front() == '+') digits.erase(0, 1);
  return BigInteger(digits, 10);
}

BigRational parse_decimal(std::string_view s) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    negative = s[pos] == '-';
    ++pos;
  }
  std::string mantissa;
  long scale = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa.push_back(c);
      seen_digit = true;
      if (seen_point) --scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw ParseError("malformed number '" + std::string(s) + "'");
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') {
      throw ParseError("malformed number '" + std::string(s) + "'");
    }
    const std::string_view exponent = s.substr(pos + 1);
    if (!is_integer_literal(exponent) || exponent.size() > 6) {
      throw ParseError("malformed exponent in '" + std::string(s) + "'");
    }
    scale += std::stol(std::string(exponent));
  }
  BigRational value(BigInteger(mantissa, 10));
  BigInteger power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
  if (scale >= 0) {
    value *= power;
  } else {
    value /= power;
  }
  return negative ? BigRational(-value) : value;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInteger num = parse_integer(text.substr(0, slash));
    const BigInteger den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    BigRational q(num, den);
    q.canonicalize();
    return q;
  }
  if (is_integer_literal(text)) return BigRational(parse_integer(text));
  return parse_decimal(text);
}

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const BigRational& q) { return q.get_d(); }

BigRational from_double(double v) {
  BigRational q(v);
  q.canonicalize();
  return q;
}

}  // namespace conoff
