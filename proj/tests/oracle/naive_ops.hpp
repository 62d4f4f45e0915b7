#pragma once

// Straight-line transcription of the chain-level formulas used as an
// independent oracle. Deliberately naive: words are int vectors, chains are
// ordered maps, every sign exponent is recomputed from scratch. No code is
// shared with the engine under test beyond the algebra tables themselves.

#include <hochbv/frobenius.hpp>

#include <map>
#include <vector>

namespace oracle {

using IWord = std::vector<int>;  // [a0, a1, ..., an]; slots are non-unit indices
using IChain = std::map<IWord, hochbv::Scalar>;

inline void iadd(IChain& c, const IWord& w, const hochbv::Scalar& v) {
  if (v.is_zero()) return;
  auto it = c.find(w);
  if (it == c.end()) {
    c.emplace(w, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) c.erase(it);
}

inline int ipow_sign(long long e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }

inline hochbv::Scalar iscale(const hochbv::Scalar& v, int sgn) {
  return sgn < 0 ? -v : v;
}

inline int ideg(const hochbv::FrobeniusAlgebra& A, const IWord& w) {
  int d = A.degree(w[0]);
  for (size_t i = 1; i < w.size(); ++i) d += A.degree(w[i]) - 1;
  return d;
}

// D = d0 + d1 on the normalized complex; unit components of merged slots drop.
inline IChain naive_D(const hochbv::FrobeniusAlgebra& A, const IWord& w) {
  IChain out;
  const int n = static_cast<int>(w.size()) - 1;

  // d0 head term: d(a0)[a1..an]
  for (const auto& [k, c] : A.differential(w[0])) {
    IWord t = w;
    t[0] = k;
    iadd(out, t, c);
  }
  // d0 slot terms: -(-1)^{eps_i} a0[..., d(a_i), ...]
  for (int i = 1; i <= n; ++i) {
    long long eps = A.degree(w[0]);
    for (int j = 1; j < i; ++j) eps += A.degree(w[j]);
    eps += -i + 1;
    for (const auto& [k, c] : A.differential(w[i])) {
      if (k == 0) continue;
      IWord t = w;
      t[i] = k;
      iadd(out, t, iscale(c, -ipow_sign(eps)));
    }
  }

  if (n == 0) return out;

  // d1 first term: (-1)^{|a0|} (a0 a1)[a2..an]
  for (const auto& [k, c] : A.product(w[0], w[1])) {
    IWord t;
    t.push_back(k);
    for (int j = 2; j <= n; ++j) t.push_back(w[j]);
    iadd(out, t, iscale(c, ipow_sign(A.degree(w[0]))));
  }
  // d1 merges: (-1)^{eps_i} a0[..., a_{i-1} a_i, ...]
  for (int i = 2; i <= n; ++i) {
    long long eps = A.degree(w[0]);
    for (int j = 1; j < i; ++j) eps += A.degree(w[j]);
    eps += -i + 1;
    for (const auto& [k, c] : A.product(w[i - 1], w[i])) {
      if (k == 0) continue;
      IWord t;
      for (int j = 0; j < i - 1; ++j) t.push_back(w[j]);
      t.push_back(k);
      for (int j = i + 1; j <= n; ++j) t.push_back(w[j]);
      iadd(out, t, iscale(c, ipow_sign(eps)));
    }
  }
  // d1 last term: -(-1)^{eps_n(|a_n|+1)} (a_n a0)[a1..a_{n-1}]
  {
    long long eps = A.degree(w[0]);
    for (int j = 1; j < n; ++j) eps += A.degree(w[j]);
    eps += -n + 1;
    long long e = eps * (A.degree(w[n]) + 1);
    for (const auto& [k, c] : A.product(w[n], w[0])) {
      IWord t;
      t.push_back(k);
      for (int j = 1; j < n; ++j) t.push_back(w[j]);
      iadd(out, t, iscale(c, -ipow_sign(e)));
    }
  }
  return out;
}

// B(a0[a1..an]) = sum_i (-1)^{eps_i} 1[a_i..a_n, a0, a1..a_{i-1}]
inline IChain naive_B(const hochbv::FrobeniusAlgebra& A, const IWord& w) {
  IChain out;
  if (w[0] == 0) return out;  // rotated-in unit slot dies in the quotient
  const int n = static_cast<int>(w.size()) - 1;
  for (int i = 1; i <= n + 1; ++i) {
    long long left = A.degree(w[0]);
    for (int j = 1; j < i; ++j) left += A.degree(w[j]);
    left -= i;
    long long right = -n + i - 1;
    for (int j = i; j <= n; ++j) right += A.degree(w[j]);
    IWord t;
    t.push_back(0);
    for (int j = i; j <= n; ++j) t.push_back(w[j]);
    t.push_back(w[0]);
    for (int j = 1; j < i; ++j) t.push_back(w[j]);
    iadd(out, t, iscale(hochbv::Scalar::one(A.field()), ipow_sign(left * right)));
  }
  return out;
}

inline IChain naive_apply(const hochbv::FrobeniusAlgebra& A, const IChain& c,
                          IChain (*op)(const hochbv::FrobeniusAlgebra&, const IWord&)) {
  IChain out;
  for (const auto& [w, v] : c)
    for (const auto& [tw, tv] : op(A, w)) iadd(out, tw, tv * v);
  return out;
}

}  // namespace oracle
