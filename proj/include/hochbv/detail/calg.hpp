#pragma once

#include <algorithm>
#include <tuple>
#include <utility>
#include <vector>

#include "hochbv/detail/smallrat.hpp"
#include "hochbv/detail/word.hpp"
#include "hochbv/frobenius.hpp"

namespace hochbv::detail {

// Structure tables flattened for the chain-operation kernels, templated on the
// coefficient type so the same kernels run on exact big rationals, checked
// 64-bit rationals, and prime-field words.
template <class K>
struct CompiledAlg {
  int n = 0;
  int m = 0;
  bool has_diff = false;
  K one{};
  std::vector<int> deg;

  std::vector<std::vector<std::pair<uint8_t, K>>> prod;  // index i*n+j
  std::vector<std::vector<std::pair<uint8_t, K>>> diff;  // index i
  std::vector<std::vector<std::tuple<uint8_t, uint8_t, K>>> cop;  // index i

  const std::vector<std::tuple<uint8_t, uint8_t, K>>& cop1() const { return cop[0]; }

  int wdeg(const Word& w) const {
    int d = deg[w.head];
    for (int i = 0; i < w.len; ++i) d += deg[w.slot(i)] - 1;
    return d;
  }
  int wpar(const Word& w) const { return wdeg(w) & 1; }
};

template <class K, class Conv>
CompiledAlg<K> compile_algebra(const FrobeniusAlgebra& A, Conv conv) {
  CompiledAlg<K> C;
  C.n = A.dim();
  C.m = A.m();
  C.one = conv(Scalar::one(A.field()));
  C.deg.resize(C.n);
  for (int i = 0; i < C.n; ++i) C.deg[i] = A.degree(i);
  C.prod.resize(static_cast<size_t>(C.n) * C.n);
  C.diff.resize(C.n);
  C.cop.resize(C.n);
  for (int i = 0; i < C.n; ++i) {
    for (int j = 0; j < C.n; ++j)
      for (const auto& [k, c] : A.product(i, j))
        C.prod[static_cast<size_t>(i) * C.n + j].emplace_back(static_cast<uint8_t>(k), conv(c));
    for (const auto& [k, c] : A.differential(i)) {
      C.diff[i].emplace_back(static_cast<uint8_t>(k), conv(c));
      C.has_diff = true;
    }
    for (const auto& [a, b, c] : A.coproduct(i))
      C.cop[i].emplace_back(static_cast<uint8_t>(a), static_cast<uint8_t>(b), conv(c));
  }
  return C;
}

inline CompiledAlg<Scalar> compile_scalar(const FrobeniusAlgebra& A) {
  return compile_algebra<Scalar>(A, [](const Scalar& s) { return s; });
}
inline CompiledAlg<Rat64> compile_rat64(const FrobeniusAlgebra& A) {
  return compile_algebra<Rat64>(A, rat64_of_scalar);
}
inline CompiledAlg<FpK> compile_fpk(const FrobeniusAlgebra& A) {
  return compile_algebra<FpK>(A, fpk_of_scalar);
}

// Term lists accumulate unnormalized output; normalize sorts, merges equal
// words, and drops zeros so chain equality is plain vector equality.
template <class W, class K>
using Terms = std::vector<std::pair<W, K>>;

template <class W, class K>
void normalize_terms(Terms<W, K>& v) {
  std::sort(v.begin(), v.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  size_t out = 0;
  for (size_t i = 0; i < v.size();) {
    W w = v[i].first;
    K acc = v[i].second;
    size_t j = i + 1;
    for (; j < v.size() && v[j].first == w; ++j) acc += v[j].second;
    if (!acc.is_zero()) v[out++] = {w, acc};
    i = j;
  }
  v.resize(out);
}

}  // namespace hochbv::detail
