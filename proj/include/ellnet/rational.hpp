#ifndef ELLNET_RATIONAL_HPP
#define ELLNET_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "ellnet/error.hpp"

namespace ellnet {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZeroError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

// Exact power with a possibly negative exponent; 0^e for e < 0 is an error.
inline Rational pow(const Rational& base, long e) {
  unsigned long m = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Integer n = ipow(base.get_num(), m);
  Integer d = ipow(base.get_den(), m);
  if (e >= 0) return make_rational(n, d);
  if (n == 0) throw DivisionByZeroError("zero raised to a negative power");
  return make_rational(d, n);
}

inline std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r != n) return std::nullopt;
  return r;
}

inline int sign(const Rational& r) { return sgn(r); }

// "p/q" or bare "p"; the value is always printed in lowest terms.
inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

struct ParsedRational {
  Rational value;
  bool was_lowest_terms = true;
};

// Accepts [+-]digits or [+-]digits/digits.  Returns nullopt on syntax errors;
// a zero denominator throws.
inline std::optional<ParsedRational> parse_rational(std::string_view text) {
  auto digits_ok = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view num = text, den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!digits_ok(den)) return std::nullopt;
  }
  std::string_view body = num;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!digits_ok(body)) return std::nullopt;
  std::string ns(num.front() == '+' ? num.substr(1) : num);
  Integer n(ns, 10);
  Integer d = den.empty() ? Integer(1) : Integer(std::string(den), 10);
  if (d == 0) throw DivisionByZeroError("zero denominator in '" + std::string(text) + "'");
  Integer g = gcd(n, d);
  ParsedRational out{make_rational(n, d), g == 1};
  return out;
}

}  // namespace ellnet

#endif  // ELLNET_RATIONAL_HPP
