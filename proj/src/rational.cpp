#include "equiform/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace equiform {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class pow10(unsigned long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

Rational parse_decimal(const std::string& text) {
  std::string s = text;
  bool negative = false;
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }

  std::string int_part, frac_part, exp_part;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    int_part += s[pos++];
  }
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      frac_part += s[pos++];
    }
  }
  long exponent = 0;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    bool exp_neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      exp_neg = s[pos] == '-';
      ++pos;
    }
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      exp_part += s[pos++];
    }
    if (exp_part.empty()) throw std::invalid_argument("bad exponent: " + text);
    exponent = std::stol(exp_part);
    if (exp_neg) exponent = -exponent;
  }
  if (pos != s.size() || (int_part.empty() && frac_part.empty())) {
    throw std::invalid_argument("not a rational: " + text);
  }

  mpz_class mantissa(int_part.empty() ? std::string("0") : int_part);
  for (char c : frac_part) {
    mantissa = mantissa * 10 + (c - '0');
  }
  long net = exponent - static_cast<long>(frac_part.size());

  Rational value(mantissa);
  if (net > 0) {
    value *= Rational(pow10(static_cast<unsigned long>(net)));
  } else if (net < 0) {
    value /= Rational(pow10(static_cast<unsigned long>(-net)));
  }
  if (negative) value = -value;
  value.canonicalize();
  return value;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  std::size_t slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    std::string num_digits = num;
    if (!num_digits.empty() && (num_digits[0] == '+' || num_digits[0] == '-')) {
      num_digits = num_digits.substr(1);
    }
    if (!all_digits(num_digits) || !all_digits(den)) {
      throw std::invalid_argument("not a rational: " + text);
    }
    Rational value(s);
    if (value.get_den() == 0) {
      throw std::invalid_argument("zero denominator: " + text);
    }
    value.canonicalize();
    return value;
  }
  return parse_decimal(s);
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("non-finite value");
  }
  return Rational(value);
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace equiform
