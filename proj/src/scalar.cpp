#include "hochbv/scalar.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace hochbv {

using boost::multiprecision::cpp_int;

Scalar Scalar::of_int(long long v, const Field& f) {
  Scalar s(f);
  if (f.is_rational()) {
    s.q_ = v;
  } else {
    long long r = v % static_cast<long long>(f.p);
    if (r < 0) r += static_cast<long long>(f.p);
    s.r_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::of_rational(const BigRat& q, const Field& f) {
  Scalar s(f);
  if (f.is_rational()) {
    s.q_ = q;
  } else {
    cpp_int num = numerator(q) % f.p;
    cpp_int den = denominator(q) % f.p;
    if (num < 0) num += f.p;
    if (den == 0) throw FieldError("denominator vanishes mod " + std::to_string(f.p));
    std::uint64_t n = num.convert_to<std::uint64_t>();
    std::uint64_t d = den.convert_to<std::uint64_t>();
    s.r_ = fp_mul(n, fp_inv(d, f.p), f.p);
  }
  return s;
}

Scalar Scalar::parse(const std::string& text, const Field& f) {
  auto slash = text.find('/');
  cpp_int num(slash == std::string::npos ? text : text.substr(0, slash));
  cpp_int den(slash == std::string::npos ? std::string("1") : text.substr(slash + 1));
  if (den == 0) throw FieldError("zero denominator in scalar '" + text + "'");
  return of_rational(BigRat(num, den), f);
}

bool Scalar::is_zero() const { return f_.is_rational() ? q_.is_zero() : r_ == 0; }
bool Scalar::is_one() const { return f_.is_rational() ? q_ == 1 : r_ == 1; }

void Scalar::check_same(const Scalar& o) const {
  if (!(f_ == o.f_)) throw FieldError("mixed-field scalar arithmetic");
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (f_.is_rational())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : f_.p - r_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s(f_);
  if (f_.is_rational())
    s.q_ = q_ + o.q_;
  else
    s.r_ = fp_add(r_, o.r_, f_.p);
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar s(f_);
  if (f_.is_rational())
    s.q_ = q_ - o.q_;
  else
    s.r_ = fp_sub(r_, o.r_, f_.p);
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s(f_);
  if (f_.is_rational())
    s.q_ = q_ * o.q_;
  else
    s.r_ = fp_mul(r_, o.r_, f_.p);
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  if (o.is_zero()) throw FieldError("division by zero");
  Scalar s(f_);
  if (f_.is_rational())
    s.q_ = q_ / o.q_;
  else
    s.r_ = fp_mul(r_, fp_inv(o.r_, f_.p), f_.p);
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  return f_ == o.f_ && (f_.is_rational() ? q_ == o.q_ : r_ == o.r_);
}

std::string Scalar::str() const {
  if (!f_.is_rational()) return std::to_string(r_);
  std::string n = numerator(q_).str();
  if (denominator(q_) == 1) return n;
  return n + "/" + denominator(q_).str();
}

const BigRat& Scalar::rational() const {
  if (!f_.is_rational()) throw FieldError("not a rational scalar");
  return q_;
}

}  // namespace hochbv
