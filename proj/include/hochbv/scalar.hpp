#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "hochbv/field.hpp"

namespace hochbv {

using BigRat = boost::multiprecision::cpp_rational;

// Exact field element. Rational values are kept in lowest terms with positive
// denominator (the backend normalizes); prime-field values are residues 0 <= v < p.
// Binary operations require both operands to carry the same field.
class Scalar {
 public:
  Scalar() : f_(Field::Q()) {}
  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f) { return of_int(1, f); }
  static Scalar of_int(long long v, const Field& f);
  static Scalar of_rational(const BigRat& q, const Field& f);
  // Accepts "n" or "n/d" with optional leading '-'.
  static Scalar parse(const std::string& text, const Field& f);

  const Field& field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Lowest-terms "n" / "n/d", or the residue for prime fields.
  std::string str() const;
  const BigRat& rational() const;
  std::uint64_t residue() const { return r_; }

 private:
  explicit Scalar(const Field& f) : f_(f) {}
  void check_same(const Scalar& o) const;
  Field f_;
  BigRat q_;
  std::uint64_t r_ = 0;
};

}  // namespace hochbv
