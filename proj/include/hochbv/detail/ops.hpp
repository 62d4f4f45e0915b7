#pragma once

#include <cassert>

#include "hochbv/detail/calg.hpp"

namespace hochbv::detail {

// Every kernel takes one normalized word and appends unnormalized terms; sign
// exponents are integer parity expressions over stored degrees, never
// hard-coded constants. Emitted terms carry degree assertions because the
// grading shifts (+1 for the differential, -1 for the rotation operator) are
// load-bearing invariants of the whole tower of identities built on top.

template <class K>
K signed_by(K c, long long exp) {
  return (exp & 1) ? -c : c;
}

// D = d0 + d1. Merged-slot products drop their unit component (normalized
// complex); head products keep everything.
template <class K>
void op_D(const CompiledAlg<K>& A, const Word& w, Terms<Word, K>& out) {
#ifndef NDEBUG
  const int dcheck = A.wdeg(w) + 1;
  const size_t first = out.size();
#endif
  const int n = w.len;

  if (A.has_diff) {
    for (const auto& [k, c] : A.diff[w.head]) {
      Word t = w;
      t.head = k;
      out.emplace_back(t, c);
    }
    long long eps = A.deg[w.head];
    for (int i = 1; i <= n; ++i) {
      // eps_i = |a0| + |a1| + ... + |a_{i-1}| - i + 1, leading minus on d0 slots
      for (const auto& [k, c] : A.diff[w.slot(i - 1)]) {
        if (k == 0) continue;
        Word t = w;
        t.s[i - 1] = k;
        out.emplace_back(t, signed_by(c, eps - i + 1 + 1));
      }
      eps += A.deg[w.slot(i - 1)];
    }
  }

  if (n > 0) {
    for (const auto& [k, c] : A.prod[static_cast<size_t>(w.head) * A.n + w.slot(0)]) {
      Word t = make_word(k);
      for (int j = 1; j < n; ++j) append_slot(t, w.slot(j));
      out.emplace_back(t, signed_by(c, A.deg[w.head]));
    }
    long long eps = A.deg[w.head] + A.deg[w.slot(0)];
    for (int i = 2; i <= n; ++i) {
      for (const auto& [k, c] :
           A.prod[static_cast<size_t>(w.slot(i - 2)) * A.n + w.slot(i - 1)]) {
        if (k == 0) continue;
        Word t = make_word(w.head);
        for (int j = 0; j < i - 2; ++j) append_slot(t, w.slot(j));
        append_slot(t, k);
        for (int j = i; j < n; ++j) append_slot(t, w.slot(j));
        out.emplace_back(t, signed_by(c, eps - i + 1));
      }
      eps += A.deg[w.slot(i - 1)];
    }
    long long eps_n = A.deg[w.head];
    for (int j = 0; j < n - 1; ++j) eps_n += A.deg[w.slot(j)];
    eps_n += -n + 1;
    const long long e = eps_n * (A.deg[w.slot(n - 1)] + 1);
    for (const auto& [k, c] : A.prod[static_cast<size_t>(w.slot(n - 1)) * A.n + w.head]) {
      Word t = make_word(k);
      for (int j = 0; j < n - 1; ++j) append_slot(t, w.slot(j));
      out.emplace_back(t, signed_by(c, e + 1));
    }
  }
#ifndef NDEBUG
  for (size_t i = first; i < out.size(); ++i) assert(A.wdeg(out[i].first) == dcheck);
#endif
}

// B(a0[a1..an]) = sum_i ±1[a_i..a_n, a0, a1..a_{i-1}]; a unit head would land
// in a tensor slot, so those inputs die outright.
template <class K>
void op_B(const CompiledAlg<K>& A, const Word& w, Terms<Word, K>& out) {
  if (w.head == 0) return;
#ifndef NDEBUG
  const int dcheck = A.wdeg(w) - 1;
  const size_t first = out.size();
#endif
  const int n = w.len;
  for (int i = 1; i <= n + 1; ++i) {
    long long left = A.deg[w.head] - i;
    for (int j = 1; j < i; ++j) left += A.deg[w.slot(j - 1)];
    long long right = -n + i - 1;
    for (int j = i; j <= n; ++j) right += A.deg[w.slot(j - 1)];
    Word t = make_word(0);
    for (int j = i; j <= n; ++j) append_slot(t, w.slot(j - 1));
    append_slot(t, w.head);
    for (int j = 1; j < i; ++j) append_slot(t, w.slot(j - 1));
    out.emplace_back(t, signed_by(A.one, left * right));
  }
#ifndef NDEBUG
  for (size_t i = first; i < out.size(); ++i) assert(A.wdeg(out[i].first) == dcheck);
#endif
}

}  // namespace hochbv::detail
