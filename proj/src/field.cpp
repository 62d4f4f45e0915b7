#include "hochbv/field.hpp"

namespace hochbv {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::Fp(std::uint64_t p) {
  if (p >= (1ull << 32)) throw FieldError("prime modulus too large (must fit in 32 bits)");
  if (!is_prime_u64(p)) throw FieldError("modulus " + std::to_string(p) + " is not prime");
  return Field{Kind::prime, p};
}

std::string Field::str() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(p);
}

Field Field::parse(const std::string& text) {
  if (text == "Q" || text == "q") return Q();
  if (text.rfind("Fp:", 0) == 0 || text.rfind("fp:", 0) == 0)
    return Fp(std::stoull(text.substr(3)));
  throw FieldError("cannot parse field '" + text + "' (expected Q or Fp:<p>)");
}

std::uint64_t fp_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint64_t fp_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t fp_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;  // p < 2^32 so no overflow
}

std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw FieldError("division by zero in F_p");
  // extended Euclid on (a, p)
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a % p);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace hochbv
