#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tilt3 {

// All arithmetic in this library is exact.  Rationals are GMP rationals,
// always kept canonical (lowest terms, positive denominator), so structural
// equality is value equality.
using Rational = mpq_class;
using BigInt = mpz_class;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

inline int sign_of(const Rational& q) { return sgn(q); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline double to_double(const Rational& q) { return q.get_d(); }

namespace detail {

// [+-]?digits, returning the number of characters consumed (0 on no match).
inline std::size_t scan_integer(std::string_view text, std::size_t pos) {
  std::size_t i = pos;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
    ++i;
    ++digits;
  }
  return digits == 0 ? 0 : i - pos;
}

// digits only (no sign), as used for denominators.
inline std::size_t scan_digits(std::string_view text, std::size_t pos) {
  std::size_t i = pos;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
  return i - pos;
}

inline BigInt bigint_of(std::string_view digits) {
  std::string tmp(digits);
  if (!tmp.empty() && tmp.front() == '+') tmp.erase(tmp.begin());
  return BigInt(tmp);
}

// Parses a rational starting at `pos`; advances `pos` past it.
inline Rational parse_rational_at(std::string_view text, std::size_t& pos) {
  std::size_t num_len = scan_integer(text, pos);
  if (num_len == 0)
    throw ParseError("expected rational at offset " + std::to_string(pos) +
                     " in '" + std::string(text) + "'");
  BigInt num = bigint_of(text.substr(pos, num_len));
  pos += num_len;
  BigInt den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::size_t den_len = scan_digits(text, pos);
    if (den_len == 0)
      throw ParseError("expected denominator in '" + std::string(text) + "'");
    den = bigint_of(text.substr(pos, den_len));
    pos += den_len;
  }
  return make_rational(num, den);
}

}  // namespace detail

// Accepts "p", "p/q", with an optional leading sign on p.  The whole string
// must be consumed.
inline Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  Rational q = detail::parse_rational_at(text, pos);
  if (pos != text.size())
    throw ParseError("trailing characters in rational '" + std::string(text) +
                     "'");
  return q;
}

}  // namespace tilt3
