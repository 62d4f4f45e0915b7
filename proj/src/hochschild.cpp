#include "hochbv/hochschild.hpp"

#include <algorithm>
#include <cassert>

#include "hochbv/detail/ops.hpp"

namespace hochbv {

using detail::CompiledAlg;
using detail::compile_scalar;

Word make_word(const FrobeniusAlgebra& A, int head, const std::vector<int>& slots) {
  if (head < 0 || head >= A.dim()) throw FrobeniusError("word head index out of range");
  Word w = detail::make_word(static_cast<uint8_t>(head));
  for (int s : slots) {
    if (s <= 0 || s >= A.dim())
      throw FrobeniusError("word slot index must name a non-unit basis element");
    detail::append_slot(w, static_cast<uint8_t>(s));
  }
  return w;
}

int word_degree(const FrobeniusAlgebra& A, const Word& w) {
  int d = A.degree(w.head);
  for (int i = 0; i < w.len; ++i) d += A.degree(w.slot(i)) - 1;
  return d;
}

std::string word_str(const FrobeniusAlgebra& A, const Word& w) {
  std::string s = A.basis()[w.head].name + " [";
  for (int i = 0; i < w.len; ++i) {
    if (i) s += ",";
    s += A.basis()[w.slot(i)].name;
  }
  return s + "]";
}

std::string chain_str(const FrobeniusAlgebra& A, const Chain& c) {
  std::string s;
  for (const auto& [w, v] : c) {
    if (!s.empty()) s += "\n";
    s += v.str() + " " + word_str(A, w);
  }
  return s;
}

Chain make_chain(std::vector<std::pair<Word, Scalar>> terms) {
  detail::normalize_terms(terms);
  return terms;
}

Chain chain_add(const Chain& a, const Chain& b) {
  Chain out = a;
  out.insert(out.end(), b.begin(), b.end());
  detail::normalize_terms(out);
  return out;
}

Chain chain_scale(const Chain& a, const Scalar& c) {
  if (c.is_zero()) return {};
  Chain out = a;
  for (auto& [w, v] : out) v *= c;
  return out;
}

namespace {

template <void (*Op)(const CompiledAlg<Scalar>&, const Word&, detail::Terms<Word, Scalar>&)>
Chain apply_linear(const FrobeniusAlgebra& A, const Chain& c) {
  CompiledAlg<Scalar> C = compile_scalar(A);
  detail::Terms<Word, Scalar> out;
  for (const auto& [w, v] : c) {
    detail::Terms<Word, Scalar> terms;
    Op(C, w, terms);
    for (auto& [tw, tv] : terms) out.emplace_back(tw, tv * v);
  }
  detail::normalize_terms(out);
  return out;
}

}  // namespace

Chain hochschild_differential(const FrobeniusAlgebra& A, const Chain& c) {
  return apply_linear<detail::op_D<Scalar>>(A, c);
}

Chain connes_B(const FrobeniusAlgebra& A, const Chain& c) {
  return apply_linear<detail::op_B<Scalar>>(A, c);
}

std::vector<Word> enumerate_words(const FrobeniusAlgebra& A, const Truncation& t) {
  if (t.max_len < 0) throw TruncationError("truncation length must be nonnegative");
  if (t.max_len > detail::kMaxSlots)
    throw TruncationError("truncation length exceeds engine cap");
  const int n = A.dim();
  std::vector<Word> out;
  for (int len = 0; len <= t.max_len; ++len) {
    if (len > 0 && n == 1) break;  // no non-unit slots available
    for (int head = 0; head < n; ++head) {
      Word w = detail::make_word(static_cast<uint8_t>(head));
      w.len = static_cast<uint8_t>(len);
      for (int i = 0; i < len; ++i) w.s[i] = 1;
      while (true) {
        if (!t.max_degree || word_degree(A, w) <= *t.max_degree) out.push_back(w);
        int i = len - 1;
        for (; i >= 0; --i) {
          if (w.s[i] + 1 < n) {
            ++w.s[i];
            for (int j = i + 1; j < len; ++j) w.s[j] = 1;
            break;
          }
        }
        if (i < 0) break;
      }
    }
  }
  assert(std::is_sorted(out.begin(), out.end()));
  return out;
}

SparseVector chain_to_vector(const FrobeniusAlgebra& A, const Chain& c,
                             const std::vector<Word>& codomain) {
  SparseVector v;
  for (const auto& [w, val] : c) {
    auto it = std::lower_bound(codomain.begin(), codomain.end(), w);
    if (it == codomain.end() || !(*it == w))
      throw TruncationError("truncation overflow: term " + word_str(A, w) +
                            " falls outside the window");
    v.add(static_cast<int>(it - codomain.begin()), val);
  }
  return v;
}

SparseMatrix operator_matrix(const std::function<Chain(const Word&)>& op,
                             const FrobeniusAlgebra& A, const std::vector<Word>& domain,
                             const std::vector<Word>& codomain) {
  SparseMatrix M(static_cast<int>(codomain.size()), static_cast<int>(domain.size()),
                 A.field());
  for (size_t j = 0; j < domain.size(); ++j) {
    Chain c = op(domain[j]);
    SparseVector v = chain_to_vector(A, c, codomain);
    for (const auto& [r, val] : v.entries) M.set(r, static_cast<int>(j), val);
  }
  return M;
}

SparseMatrix operator_matrix(ChainOp op, const FrobeniusAlgebra& A, const Truncation& t) {
  std::vector<Word> domain = enumerate_words(A, t);
  Truncation out = t;
  if (op == ChainOp::connes) {
    out.max_len = t.max_len + 1;
    if (out.max_degree) *out.max_degree -= 1;
  } else if (out.max_degree) {
    *out.max_degree += 1;
  }
  std::vector<Word> codomain = enumerate_words(A, out);
  auto fn = [&](const Word& w) {
    Chain c{{w, Scalar::one(A.field())}};
    return op == ChainOp::connes ? connes_B(A, c) : hochschild_differential(A, c);
  };
  return operator_matrix(fn, A, domain, codomain);
}

ShiftedChain shift(const Chain& c, int m) { return {c, m}; }

Chain unshift(const ShiftedChain& s) { return s.chain; }

}  // namespace hochbv
