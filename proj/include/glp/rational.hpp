#ifndef GLP_RATIONAL_HPP
#define GLP_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace glp {

// All arithmetic in the toolkit is exact rational; no floating point anywhere.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline Integer to_integer(const Rational& q) {
  if (!is_integer(q)) throw Error("NotAnInteger", "expected integer, got " + q.str());
  return numerator(q);
}

inline long to_long(const Rational& q) { return static_cast<long>(to_integer(q)); }

// Positive rational gcd: the largest d with x/d integral for all inputs.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a == 0) return abs(b);
  if (b == 0) return abs(a);
  Integer num = gcd(numerator(a) * denominator(b), numerator(b) * denominator(a));
  return Rational(abs(num), denominator(a) * denominator(b));
}

inline Integer rational_floor(const Rational& q) {
  Integer n = numerator(q), d = denominator(q);
  Integer f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

// "p/q", or plain "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.str(); }

inline Rational parse_rational(const std::string& s) {
  try {
    Rational q(s);
    return q;
  } catch (const std::exception&) {
    throw Error("BadRational", "cannot parse rational '" + s + "'");
  }
}

}  // namespace glp

#endif
