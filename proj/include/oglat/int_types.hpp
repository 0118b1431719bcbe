#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace oglat {

// Every quantity that feeds a verdict is an Int or a Rat. No floating point
// anywhere in the trusted path; doubles appear only in display helpers.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

// cpp_rational's two-argument constructor insists on a positive denominator.
inline Rat make_rat(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

// Floor division (rounds toward negative infinity).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int mod_floor(const Int& a, const Int& b) { return a - b * floor_div(a, b); }

// Nearest integer to a/b, b > 0; half-integers round down.
inline Int round_div(const Int& a, const Int& b) {
  return floor_div(2 * a + b, 2 * b);
}

inline Int round_rat(const Rat& q) { return round_div(rat_num(q), rat_den(q)); }

inline Int floor_rat(const Rat& q) { return floor_div(rat_num(q), rat_den(q)); }

// Exact integer square root of a perfect square; throws otherwise.
inline Int exact_sqrt(const Int& a) {
  if (a < 0) throw std::domain_error("exact_sqrt: negative input");
  Int r = boost::multiprecision::sqrt(a);
  if (r * r != a) throw std::domain_error("exact_sqrt: not a perfect square");
  return r;
}

inline bool is_power_of_two(Int a) {
  if (a < 1) return false;
  while (a % 2 == 0) a /= 2;
  return a == 1;
}

inline Int pow_int(Int base, unsigned exp) {
  Int r = 1;
  while (exp) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

inline Rat pow_rat(const Rat& base, unsigned exp) {
  Rat r = 1;
  Rat b = base;
  unsigned e = exp;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

// Reduce q into [0, m) for a positive rational modulus m.
inline Rat mod_rat(const Rat& q, const Rat& m) {
  Rat r = q - m * Rat(floor_rat(q / m));
  if (r < 0) r += m;  // guard against floor rounding at exact multiples
  if (r >= m) r -= m;
  return r;
}

// Decimal string if the denominator is of the form 2^a 5^b, else "num/den".
inline std::string rat_to_string(const Rat& q) {
  Int num = rat_num(q), den = rat_den(q);
  Int d = den;
  unsigned twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) return num.str() + "/" + den.str();
  if (den == 1) return num.str();
  unsigned digits = twos > fives ? twos : fives;
  Int scaled = num * pow_int(10, digits) / den;
  bool neg = scaled < 0;
  std::string s = abs_int(scaled).str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return (neg ? "-" : "") + s;
}

// Parses "3", "1.001" or "1001/1000".
inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rat_from_string: zero denominator");
    return make_rat(std::move(num), std::move(den));
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rat(Int(s));
  std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
  if (head.empty() || head == "-" || head == "+") head += "0";
  Int scale = pow_int(10, static_cast<unsigned>(tail.size()));
  Int whole(head);
  Int frac = tail.empty() ? Int(0) : Int(tail);
  Int num = abs_int(whole) * scale + frac;
  bool neg = !head.empty() && head[0] == '-';
  return Rat(neg ? Int(-num) : num, scale);
}

}  // namespace oglat
