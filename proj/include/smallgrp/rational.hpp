#pragma once

#include <string>

#include "smallgrp/error.hpp"

namespace smallgrp {

using int128 = __int128;
using uint128 = unsigned __int128;

namespace detail {

inline uint128 uabs128(int128 x) {
  uint128 m = static_cast<uint128>(x);
  if (x < 0) m = ~m + 1;
  return m;
}

inline uint128 gcd128(uint128 a, uint128 b) {
  while (b != 0) {
    uint128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline int128 checked_add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit addition overflow");
  return r;
}

inline int128 checked_sub(int128 a, int128 b) {
  int128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("128-bit subtraction overflow");
  return r;
}

inline int128 checked_mul(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit multiplication overflow");
  return r;
}

inline uint128 checked_add_u(uint128 a, uint128 b) {
  uint128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit unsigned addition overflow");
  return r;
}

inline uint128 checked_mul_u(uint128 a, uint128 b) {
  uint128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit unsigned multiplication overflow");
  return r;
}

// Exact comparison of a/b vs c/d for nonnegative numerators, positive
// denominators, immune to overflow (continued-fraction descent).
inline int compare_nonneg_fractions(uint128 a, uint128 b, uint128 c, uint128 d) {
  for (;;) {
    uint128 q1 = a / b, r1 = a % b;
    uint128 q2 = c / d, r2 = c % d;
    if (q1 != q2) return q1 < q2 ? -1 : 1;
    if (r1 == 0 && r2 == 0) return 0;
    if (r1 == 0) return -1;
    if (r2 == 0) return 1;
    // r1/b vs r2/d equals d/r2 vs b/r1 after taking reciprocals.
    uint128 na = d, nb = r2, nc = b, nd = r1;
    a = na;
    b = nb;
    c = nc;
    d = nd;
  }
}

}  // namespace detail

inline std::string to_string_128(int128 v) {
  if (v == 0) return "0";
  uint128 m = detail::uabs128(v);
  std::string s;
  while (m != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(m % 10)));
    m /= 10;
  }
  if (v < 0) s.push_back('-');
  return std::string(s.rbegin(), s.rend());
}

inline std::string to_string_128(uint128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return std::string(s.rbegin(), s.rend());
}

// Reduced fraction over 128-bit integers. Invariants: den > 0, gcd(|num|, den) = 1.
struct ExactRatio {
  int128 num = 0;
  int128 den = 1;

  ExactRatio() = default;

  ExactRatio(int128 n, int128 d) {
    if (d == 0) throw InvalidInputError("zero denominator");
    if (d < 0) {
      n = detail::checked_sub(0, n);
      d = detail::checked_sub(0, d);
    }
    uint128 g = detail::gcd128(detail::uabs128(n), detail::uabs128(d));
    if (g > 1) {
      bool neg = n < 0;
      uint128 un = detail::uabs128(n) / g;
      uint128 ud = detail::uabs128(d) / g;
      n = static_cast<int128>(un);
      if (neg) n = -n;
      d = static_cast<int128>(ud);
    }
    num = n;
    den = d;
  }

  static ExactRatio from_counts(uint128 n, uint128 d) {
    if (d == 0) throw InvalidInputError("zero denominator");
    uint128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr uint128 kMax = ~uint128{0} >> 1;  // INT128_MAX
    if (n > kMax || d > kMax)
      throw OverflowError("count ratio exceeds 128-bit signed capacity");
    ExactRatio r;
    r.num = static_cast<int128>(n);
    r.den = static_cast<int128>(d);
    return r;
  }

  static ExactRatio zero() { return ExactRatio(); }
  static ExactRatio one() { return ExactRatio(1, 1); }

  friend bool operator==(const ExactRatio& a, const ExactRatio& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const ExactRatio& a, const ExactRatio& b) { return !(a == b); }

  friend bool operator<(const ExactRatio& a, const ExactRatio& b) {
    bool an = a.num < 0, bn = b.num < 0;
    if (an != bn) return an;
    int c = detail::compare_nonneg_fractions(detail::uabs128(a.num), detail::uabs128(a.den),
                                             detail::uabs128(b.num), detail::uabs128(b.den));
    return an ? c > 0 : c < 0;
  }
  friend bool operator>(const ExactRatio& a, const ExactRatio& b) { return b < a; }
  friend bool operator<=(const ExactRatio& a, const ExactRatio& b) { return !(b < a); }
  friend bool operator>=(const ExactRatio& a, const ExactRatio& b) { return !(a < b); }

  friend ExactRatio operator+(const ExactRatio& a, const ExactRatio& b) {
    int128 n = detail::checked_add(detail::checked_mul(a.num, b.den),
                                   detail::checked_mul(b.num, a.den));
    return ExactRatio(n, detail::checked_mul(a.den, b.den));
  }
  friend ExactRatio operator-(const ExactRatio& a, const ExactRatio& b) {
    int128 n = detail::checked_sub(detail::checked_mul(a.num, b.den),
                                   detail::checked_mul(b.num, a.den));
    return ExactRatio(n, detail::checked_mul(a.den, b.den));
  }
  friend ExactRatio operator*(const ExactRatio& a, const ExactRatio& b) {
    // Cross-reduce first so intermediate products stay small.
    uint128 g1 = detail::gcd128(detail::uabs128(a.num), detail::uabs128(b.den));
    uint128 g2 = detail::gcd128(detail::uabs128(b.num), detail::uabs128(a.den));
    int128 an = a.num / static_cast<int128>(g1 ? g1 : 1);
    int128 bd = b.den / static_cast<int128>(g1 ? g1 : 1);
    int128 bn = b.num / static_cast<int128>(g2 ? g2 : 1);
    int128 ad = a.den / static_cast<int128>(g2 ? g2 : 1);
    return ExactRatio(detail::checked_mul(an, bn), detail::checked_mul(ad, bd));
  }
};

// Six decimal places, round half to even. The fraction is rendered by long
// division so no floating point is involved.
inline std::string decimal6(const ExactRatio& r) {
  constexpr int kPlaces = 6;
  uint128 n = detail::uabs128(r.num);
  uint128 d = detail::uabs128(r.den);
  uint128 ip = n / d;
  uint128 rem = n % d;
  int digits[kPlaces];
  constexpr uint128 kUMax = ~uint128{0};
  for (int i = 0; i < kPlaces; ++i) {
    if (rem > kUMax / 10) throw OverflowError("denominator too large to render");
    rem *= 10;
    digits[i] = static_cast<int>(rem / d);
    rem %= d;
  }
  // Round the residue: 2*rem vs d decides, ties go to an even last digit.
  bool round_up = false;
  if (rem > d - rem) {
    round_up = true;
  } else if (rem == d - rem && rem != 0) {
    round_up = (digits[kPlaces - 1] % 2) != 0;
  }
  if (round_up) {
    int i = kPlaces - 1;
    while (i >= 0 && digits[i] == 9) digits[i--] = 0;
    if (i >= 0)
      ++digits[i];
    else
      ip = detail::checked_add_u(ip, 1);
  }
  std::string out;
  if (r.num < 0) out.push_back('-');
  out += to_string_128(ip);
  out.push_back('.');
  for (int i = 0; i < kPlaces; ++i) out.push_back(static_cast<char>('0' + digits[i]));
  return out;
}

// Display form used by the CLI: "5/8 (~0.625000)" with the approx sign.
inline std::string format_ratio(const ExactRatio& r) {
  return to_string_128(r.num) + "/" + to_string_128(r.den) + " (≈" + decimal6(r) + ")";
}

}  // namespace smallgrp
