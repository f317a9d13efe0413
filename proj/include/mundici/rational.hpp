#pragma once

// Exact rational arithmetic on int64. Always normalized: den > 0, gcd(num, den) = 1.

#include <cstdint>
#include <numeric>
#include <string>

#include "mundici/errors.hpp"

namespace mundici {

struct Rat {
  long long num = 0;
  long long den = 1;

  constexpr Rat() = default;
  constexpr Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) {
    if (den == 0) fail(Errc::BadInput, "rational with zero denominator");
    normalize();
  }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
  friend Rat operator-(const Rat& a) { Rat r; r.num = -a.num; r.den = a.den; return r; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.num * b.den <= b.num * a.den; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

  bool is_integer() const { return den == 1; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

inline Rat rat_min(const Rat& a, const Rat& b) { return a <= b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a >= b ? a : b; }

// Smallest integer n with q <= n; i.e. ceil(q).
inline long long rat_ceil(const Rat& q) {
  if (q.num >= 0) return (q.num + q.den - 1) / q.den;
  return -((-q.num) / q.den);
}

// Parses "p/q" or "p". Throws BadInput on malformed text.
Rat parse_rat(const std::string& s);

}  // namespace mundici
