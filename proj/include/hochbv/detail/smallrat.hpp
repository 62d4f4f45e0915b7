#pragma once

#include <cstdint>
#include <numeric>

#include "hochbv/scalar.hpp"

namespace hochbv::detail {

// Raised when the fixed-width rational fast path overflows; the caller redoes
// the same evaluation with arbitrary-precision scalars, so results never
// depend on which path ran.
struct Rat64Overflow {};

struct Rat64 {
  int64_t num = 0;
  int64_t den = 1;  // > 0, coprime to num

  Rat64() = default;
  Rat64(int64_t n, int64_t d) : num(n), den(d) { reduce(); }
  static Rat64 of_int(int64_t n) {
    Rat64 r;
    r.num = n;
    return r;
  }

  void reduce() {
    if (den == 0) throw Rat64Overflow{};
    if (den < 0) {
      if (num == INT64_MIN || den == INT64_MIN) throw Rat64Overflow{};
      num = -num;
      den = -den;
    }
    int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_zero() const { return num == 0; }

  Rat64 operator-() const {
    if (num == INT64_MIN) throw Rat64Overflow{};
    Rat64 r;
    r.num = -num;
    r.den = den;
    return r;
  }

  friend Rat64 operator+(const Rat64& a, const Rat64& b) {
    int64_t x, y, n, d;
    if (__builtin_mul_overflow(a.num, b.den, &x) || __builtin_mul_overflow(b.num, a.den, &y) ||
        __builtin_add_overflow(x, y, &n) || __builtin_mul_overflow(a.den, b.den, &d))
      throw Rat64Overflow{};
    return Rat64(n, d);
  }
  friend Rat64 operator-(const Rat64& a, const Rat64& b) { return a + (-b); }
  friend Rat64 operator*(const Rat64& a, const Rat64& b) {
    int64_t n, d;
    if (__builtin_mul_overflow(a.num, b.num, &n) || __builtin_mul_overflow(a.den, b.den, &d))
      throw Rat64Overflow{};
    return Rat64(n, d);
  }
  Rat64& operator+=(const Rat64& o) { return *this = *this + o; }
  Rat64& operator*=(const Rat64& o) { return *this = *this * o; }
  friend bool operator==(const Rat64& a, const Rat64& b) {
    return a.num == b.num && a.den == b.den;
  }
};

inline Rat64 rat64_of_scalar(const Scalar& s) {
  const BigRat& q = s.rational();
  auto n = numerator(q);
  auto d = denominator(q);
  if (n < INT64_MIN || n > INT64_MAX || d > INT64_MAX) throw Rat64Overflow{};
  return Rat64(static_cast<int64_t>(n), static_cast<int64_t>(d));
}

inline Scalar scalar_of_rat64(const Rat64& r, const Field& f) {
  return Scalar::of_rational(BigRat(r.num, r.den), f);
}

// Prime-field element with its modulus carried along (moduli stay < 2^32).
struct FpK {
  uint64_t v = 0;
  uint64_t p = 0;

  bool is_zero() const { return v == 0; }
  FpK operator-() const { return {v == 0 ? 0 : p - v, p}; }
  friend FpK operator+(const FpK& a, const FpK& b) { return {fp_add(a.v, b.v, a.p), a.p}; }
  friend FpK operator-(const FpK& a, const FpK& b) { return {fp_sub(a.v, b.v, a.p), a.p}; }
  friend FpK operator*(const FpK& a, const FpK& b) { return {fp_mul(a.v, b.v, a.p), a.p}; }
  FpK& operator+=(const FpK& o) { return *this = *this + o; }
  FpK& operator*=(const FpK& o) { return *this = *this * o; }
  friend bool operator==(const FpK& a, const FpK& b) { return a.v == b.v; }
};

inline FpK fpk_of_scalar(const Scalar& s) { return {s.residue(), s.field().p}; }

}  // namespace hochbv::detail
