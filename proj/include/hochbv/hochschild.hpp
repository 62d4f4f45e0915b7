#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hochbv/detail/word.hpp"
#include "hochbv/exactlinalg.hpp"
#include "hochbv/frobenius.hpp"

namespace hochbv {

using detail::TruncationError;
using detail::Word;

// Chains are sorted term lists with unique words and nonzero coefficients, so
// equality is plain vector equality and merging is a linear pass.
using Chain = std::vector<std::pair<Word, Scalar>>;

// Finite window onto the complex: word length <= max_len, and internal degree
// <= max_degree when given.
struct Truncation {
  int max_len = 0;
  std::optional<int> max_degree;
};

// Validated word construction from basis indices (slots must be non-unit).
Word make_word(const FrobeniusAlgebra& A, int head, const std::vector<int>& slots);

// Internal degree |a0| + sum(|ai| - 1): tensor slots live in the shifted
// augmentation ideal.
int word_degree(const FrobeniusAlgebra& A, const Word& w);

std::string word_str(const FrobeniusAlgebra& A, const Word& w);
// Dump format: one term per line, "coeff a0 [a1,...,an]", in word order.
std::string chain_str(const FrobeniusAlgebra& A, const Chain& c);

// Sorts, merges duplicate words, and drops zero coefficients.
Chain make_chain(std::vector<std::pair<Word, Scalar>> terms);
Chain chain_add(const Chain& a, const Chain& b);
Chain chain_scale(const Chain& a, const Scalar& c);

// D = d0 + d1; raises internal degree by 1 and never lengthens words.
Chain hochschild_differential(const FrobeniusAlgebra& A, const Chain& c);
// Connes operator; lowers internal degree by 1 and lengthens words by 1.
Chain connes_B(const FrobeniusAlgebra& A, const Chain& c);

// All normalized words in the window, length-lexicographic by basis index.
// The order is deterministic and the list is a basis of the truncated complex.
std::vector<Word> enumerate_words(const FrobeniusAlgebra& A, const Truncation& t);

// Expands a chain over an enumerated codomain; any nonzero term outside the
// window throws TruncationError("truncation overflow ...") rather than clip.
SparseVector chain_to_vector(const FrobeniusAlgebra& A, const Chain& c,
                             const std::vector<Word>& codomain);

enum class ChainOp { differential, connes };

// Matrix of op over the window; the codomain window is enlarged to hold every
// output exactly (length +1 for connes, degree bound bumped for both).
SparseMatrix operator_matrix(ChainOp op, const FrobeniusAlgebra& A, const Truncation& t);
SparseMatrix operator_matrix(const std::function<Chain(const Word&)>& op,
                             const FrobeniusAlgebra& A, const std::vector<Word>& domain,
                             const std::vector<Word>& codomain);

// Degree-shift wrapper: same coefficients, degrees read shifted by m. Binary
// operations pulled back through the shift pick up (-1)^{m |x|} on the first
// argument; bv_chain_ops applies that rule to its products.
struct ShiftedChain {
  Chain chain;
  int shift_m = 0;
};
ShiftedChain shift(const Chain& c, int m);
Chain unshift(const ShiftedChain& s);

}  // namespace hochbv
