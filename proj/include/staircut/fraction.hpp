#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "staircut/geometry.hpp"

namespace staircut {

// Small exact rational, used for objective weights so that score comparisons
// can be carried out without floating-point noise. Denominator is kept > 0.
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Frac of(std::int64_t n, std::int64_t d) {
    if (d == 0) throw Error("fraction with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return Frac{n, d};
  }

  // Snap a decimal to the 1e-6 grid; grid weights like 0.1 or 0.35 stay exact.
  static Frac from_decimal(double v) {
    return of(std::llround(v * 1e6), 1000000);
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  bool operator==(const Frac&) const = default;

  // Minimal decimal rendering ("0.4", "0", "0.35"). Valid for denominators
  // dividing 1e6, which covers everything from_decimal produces.
  std::string str() const {
    std::int64_t scale = 1000000 / den;
    std::int64_t scaled = num * scale;
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::int64_t whole = scaled / 1000000;
    std::int64_t frac = scaled % 1000000;
    std::string s = (neg ? "-" : "") + std::to_string(whole);
    if (frac != 0) {
      std::string digits = std::to_string(frac);
      digits.insert(0, 6 - digits.size(), '0');
      while (digits.back() == '0') digits.pop_back();
      s += "." + digits;
    }
    return s;
  }
};

// 128-bit rational used internally for exact score comparisons. Operations
// that would overflow mark the value inexact; callers then fall back to a
// toleranced double comparison.
struct Rat128 {
  __int128 num = 0;
  __int128 den = 1;
  bool exact = true;

  static Rat128 of(std::int64_t n, std::int64_t d) {
    Rat128 r;
    r.num = n;
    r.den = d;
    r.reduce();
    return r;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  void reduce() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
};

inline bool mul_over(__int128 a, __int128 b, __int128* out) {
  return __builtin_mul_overflow(a, b, out);
}
inline bool add_over(__int128 a, __int128 b, __int128* out) {
  return __builtin_add_overflow(a, b, out);
}

inline Rat128 rat_mul(Rat128 a, Rat128 b) {
  Rat128 r;
  r.exact = a.exact && b.exact;
  __int128 g1 = Rat128::gcd128(a.num, b.den);
  __int128 g2 = Rat128::gcd128(b.num, a.den);
  if (g1 > 1) {
    a.num /= g1;
    b.den /= g1;
  }
  if (g2 > 1) {
    b.num /= g2;
    a.den /= g2;
  }
  if (mul_over(a.num, b.num, &r.num) || mul_over(a.den, b.den, &r.den)) r.exact = false;
  if (r.exact) r.reduce();
  return r;
}

inline Rat128 rat_add(Rat128 a, Rat128 b) {
  Rat128 r;
  r.exact = a.exact && b.exact;
  if (!r.exact) return r;
  __int128 g = Rat128::gcd128(a.den, b.den);
  __int128 bd = b.den / g;
  __int128 t1, t2;
  if (mul_over(a.num, bd, &t1) || mul_over(b.num, a.den / g, &t2) ||
      add_over(t1, t2, &r.num) || mul_over(a.den, bd, &r.den)) {
    r.exact = false;
    return r;
  }
  r.reduce();
  return r;
}

// -1 / 0 / +1 ordering of two exact rationals; requires both exact.
inline int rat_cmp(const Rat128& a, const Rat128& b, bool* ok) {
  __int128 g = Rat128::gcd128(a.den, b.den);
  __int128 l, r;
  if (mul_over(a.num, b.den / g, &l) || mul_over(b.num, a.den / g, &r)) {
    *ok = false;
    return 0;
  }
  *ok = true;
  return l < r ? -1 : (l > r ? 1 : 0);
}

}  // namespace staircut
