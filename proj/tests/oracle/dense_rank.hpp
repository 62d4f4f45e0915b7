#pragma once

// Independent dense-matrix oracle. Deliberately naive: dense row reduction over
// boost rationals (or residues), no sharing with the engine's sparse code.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace oracle {

using Q = boost::multiprecision::cpp_rational;

inline int dense_rank(std::vector<std::vector<Q>> a) {
  if (a.empty()) return 0;
  const size_t rows = a.size(), cols = a[0].size();
  int rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      Q f = a[r][col] / a[row][col];
      for (size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

// rank over F_p for small p
inline int dense_rank_fp(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
  if (a.empty()) return 0;
  const size_t rows = a.size(), cols = a[0].size();
  auto inv = [p](std::uint64_t x) {
    std::uint64_t r = 1, b = x % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  int rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && a[piv][col] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    std::uint64_t iv = inv(a[row][col]);
    for (size_t c = col; c < cols; ++c) a[row][c] = a[row][c] % p * iv % p;
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col] % p == 0) continue;
      std::uint64_t f = a[r][col] % p;
      for (size_t c = col; c < cols; ++c)
        a[r][c] = (a[r][c] % p + p - f * (a[row][c] % p) % p) % p;
    }
    ++row;
    ++rank;
  }
  return rank;
}

inline int dense_homology_dim(const std::vector<std::vector<Q>>& d_in,
                              const std::vector<std::vector<Q>>& d_out,
                              int middle_dim) {
  int rank_in = dense_rank(d_in);
  int rank_out = dense_rank(d_out);
  return (middle_dim - rank_out) - rank_in;
}

}  // namespace oracle
