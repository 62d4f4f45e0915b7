#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hochbv {

// Ground field of a session: the rationals or a prime field F_p.
struct Field {
  enum class Kind { rational, prime };
  Kind kind = Kind::rational;
  std::uint64_t p = 0;  // prime modulus when kind == prime

  bool operator==(const Field&) const = default;

  static Field Q() { return Field{Kind::rational, 0}; }
  static Field Fp(std::uint64_t p);

  bool is_rational() const { return kind == Kind::rational; }
  std::string str() const;

  // Accepts "Q" or "Fp:<p>" (CLI syntax).
  static Field parse(const std::string& text);
};

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Residue arithmetic helpers (p < 2^32 so products fit in uint64).
std::uint64_t fp_add(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t fp_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t fp_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p);
bool is_prime_u64(std::uint64_t n);

}  // namespace hochbv
