#include <doctest.h>

#include <hochbv/detail/smallrat.hpp>
#include <hochbv/hochschild.hpp>

#include <random>

#include "oracle/naive_ops.hpp"

using namespace hochbv;

namespace {

std::string fixture(const std::string& name) {
  return std::string(HOCHBV_FIXTURE_DIR) + "/" + name;
}

oracle::IWord iword_of(const Word& w) {
  oracle::IWord v{w.head};
  for (int i = 0; i < w.len; ++i) v.push_back(w.slot(i));
  return v;
}

oracle::IChain to_ichain(const Chain& c) {
  oracle::IChain out;
  for (const auto& [w, v] : c) out.emplace(iword_of(w), v);
  return out;
}

bool ichain_eq(const oracle::IChain& a, const oracle::IChain& b) {
  if (a.size() != b.size()) return false;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
    if (!(ia->second == ib->second)) return false;
  }
  return true;
}

Chain unit_chain(const FrobeniusAlgebra& A, const Word& w) {
  return Chain{{w, Scalar::one(A.field())}};
}

}  // namespace

TEST_CASE("differential and rotation match their frozen examples") {
  auto A = FrobeniusAlgebra::load_file(fixture("q_x3_deg2.json"));
  Word x_empty = make_word(A, 1, {});
  Word one_x = make_word(A, 0, {1});
  Word x_x = make_word(A, 1, {1});

  // zero differential on the algebra: D(x[]) = 0
  CHECK(hochschild_differential(A, unit_chain(A, x_empty)).empty());

  // head-times-slot and slot-times-head contributions cancel exactly; the
  // oracle confirms the frozen zero before the engine is trusted with it.
  CHECK(oracle::naive_D(A, {0, 1}).empty());
  CHECK(hochschild_differential(A, unit_chain(A, one_x)).empty());
  CHECK(oracle::naive_D(A, {1, 1}).empty());
  CHECK(hochschild_differential(A, unit_chain(A, x_x)).empty());

  // B(x[]) = 1[x] with exponent (|x|-1)*0 = 0
  auto b = connes_B(A, unit_chain(A, x_empty));
  REQUIRE(b.size() == 1);
  CHECK(b[0].first == one_x);
  CHECK(b[0].second.is_one());

  // unit heads die: the rotated-in element would occupy a tensor slot
  CHECK(connes_B(A, unit_chain(A, one_x)).empty());
}

TEST_CASE("three-term differential on the exterior fixture") {
  auto A = FrobeniusAlgebra::load_file(fixture("ext2.json"));
  Word w = make_word(A, 0, {1, 2});  // 1[e1,e2]
  auto d = hochschild_differential(A, unit_chain(A, w));
  auto expected = make_chain({{make_word(A, 1, {2}), Scalar::one(A.field())},
                              {make_word(A, 0, {3}), Scalar::one(A.field())},
                              {make_word(A, 2, {1}), -Scalar::one(A.field())}});
  CHECK(d == expected);
  CHECK(ichain_eq(to_ichain(d), oracle::naive_D(A, iword_of(w))));
}

TEST_CASE("engine agrees with the naive oracle on every short word") {
  for (const char* name :
       {"q_x3_deg2.json", "ext2.json", "q_x2_deg1.json", "broken_noncomm.json"}) {
    auto A = FrobeniusAlgebra::load_file(fixture(name));
    INFO(name);
    for (const Word& w : enumerate_words(A, {3, std::nullopt})) {
      auto dc = hochschild_differential(A, unit_chain(A, w));
      CHECK(ichain_eq(to_ichain(dc), oracle::naive_D(A, iword_of(w))));
      auto bc = connes_B(A, unit_chain(A, w));
      CHECK(ichain_eq(to_ichain(bc), oracle::naive_B(A, iword_of(w))));
    }
  }
}

TEST_CASE("complex axioms hold exactly through length four") {
  for (const char* name : {"q_x3_deg2.json", "ext2.json", "broken_noncomm.json"}) {
    auto A = FrobeniusAlgebra::load_file(fixture(name));
    INFO(name);
    for (const Word& w : enumerate_words(A, {4, std::nullopt})) {
      Chain c = unit_chain(A, w);
      CHECK(hochschild_differential(A, hochschild_differential(A, c)).empty());
      CHECK(connes_B(A, connes_B(A, c)).empty());
      auto anti = chain_add(connes_B(A, hochschild_differential(A, c)),
                            hochschild_differential(A, connes_B(A, c)));
      CHECK(anti.empty());
    }
  }
}

TEST_CASE("generated terms respect the degree grading") {
  auto A = FrobeniusAlgebra::load_file(fixture("ext2.json"));
  for (const Word& w : enumerate_words(A, {3, std::nullopt})) {
    int d = word_degree(A, w);
    for (const auto& [t, v] : hochschild_differential(A, unit_chain(A, w)))
      CHECK(word_degree(A, t) == d + 1);
    for (const auto& [t, v] : connes_B(A, unit_chain(A, w)))
      CHECK(word_degree(A, t) == d - 1);
  }
}

TEST_CASE("word enumeration is length-lexicographic and windowed") {
  auto A = FrobeniusAlgebra::load_file(fixture("q_x3_deg2.json"));
  auto L0 = enumerate_words(A, {0, std::nullopt});
  REQUIRE(L0.size() == 3);
  CHECK(word_str(A, L0[0]) == "1 []");
  CHECK(word_str(A, L0[1]) == "x []");
  CHECK(word_str(A, L0[2]) == "x2 []");

  auto L1 = enumerate_words(A, {1, std::nullopt});
  CHECK(L1.size() == 9);  // 3 + 3*2
  CHECK(word_str(A, L1[3]) == "1 [x]");
  CHECK(word_str(A, L1[4]) == "1 [x2]");

  auto E = FrobeniusAlgebra::load_file(fixture("ext2.json"));
  CHECK(enumerate_words(E, {3, std::nullopt}).size() == 4 * (1 + 3 + 9 + 27));

  auto K = FrobeniusAlgebra::load_file(fixture("k.json"));
  auto KL = enumerate_words(K, {2, std::nullopt});
  REQUIRE(KL.size() == 1);
  CHECK(word_str(K, KL[0]) == "1 []");

  // degree window: only 1[], x[], 1[x], 1[x,x] have internal degree <= 2
  auto W = enumerate_words(A, {2, 2});
  REQUIRE(W.size() == 4);
  CHECK(word_str(A, W[0]) == "1 []");
  CHECK(word_str(A, W[1]) == "x []");
  CHECK(word_str(A, W[2]) == "1 [x]");
  CHECK(word_str(A, W[3]) == "1 [x,x]");

  // determinism: regeneration yields the identical list
  CHECK(enumerate_words(E, {3, std::nullopt}) == enumerate_words(E, {3, std::nullopt}));
}

TEST_CASE("operator matrices are exact on their windows") {
  auto K = FrobeniusAlgebra::load_file(fixture("k.json"));
  auto M = operator_matrix(ChainOp::differential, K, {0, std::nullopt});
  CHECK(M.rows() == 1);
  CHECK(M.cols() == 1);
  CHECK(M.is_zero());

  auto A = FrobeniusAlgebra::load_file(fixture("q_x3_deg2.json"));
  auto B = operator_matrix(ChainOp::connes, A, {0, std::nullopt});
  CHECK(B.rows() == 9);
  CHECK(B.cols() == 3);
  CHECK(B.nnz() == 2);
  CHECK(B.get(3, 1).is_one());  // x[]  -> 1[x]
  CHECK(B.get(4, 2).is_one());  // x2[] -> 1[x2]

  auto Q = FrobeniusAlgebra::load_file(fixture("q_x2_deg1.json"));
  auto D = operator_matrix(ChainOp::differential, Q, {4, std::nullopt});
  CHECK(D.rows() == D.cols());
  CHECK(D.multiply(D).is_zero());
}

TEST_CASE("window escapes raise truncation overflow instead of clipping") {
  auto A = FrobeniusAlgebra::load_file(fixture("q_x3_deg2.json"));
  Chain c = unit_chain(A, make_word(A, 0, {1, 1}));
  auto window = enumerate_words(A, {1, std::nullopt});
  CHECK_THROWS_WITH_AS(chain_to_vector(A, c, window), doctest::Contains("truncation overflow"),
                       TruncationError);
}

TEST_CASE("chain arithmetic and dump format") {
  auto A = FrobeniusAlgebra::load_file(fixture("ext2.json"));
  Scalar one = Scalar::one(A.field());
  Word w = make_word(A, 0, {1, 2});
  auto d = hochschild_differential(A, unit_chain(A, w));
  CHECK(chain_str(A, d) == "1 1 [e12]\n1 e1 [e2]\n-1 e2 [e1]");

  Chain z = chain_add(d, chain_scale(d, -one));
  CHECK(z.empty());
  Chain merged = make_chain({{w, one}, {w, one}, {w, -one - one}});
  CHECK(merged.empty());

  auto s = shift(d, A.m());
  CHECK(s.shift_m == 2);
  CHECK(unshift(s) == d);
}

TEST_CASE("checked 64-bit rationals agree with big rationals and flag overflow") {
  using detail::Rat64;
  using detail::Rat64Overflow;
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<int64_t> num(-40, 40);
  std::uniform_int_distribution<int64_t> den(1, 12);
  Field Q = Field::Q();
  for (int round = 0; round < 200; ++round) {
    Rat64 a(num(rng), den(rng)), b(num(rng), den(rng));
    BigRat qa(a.num, a.den), qb(b.num, b.den);
    CHECK(detail::scalar_of_rat64(a + b, Q) == Scalar::of_rational(qa + qb, Q));
    CHECK(detail::scalar_of_rat64(a - b, Q) == Scalar::of_rational(qa - qb, Q));
    CHECK(detail::scalar_of_rat64(a * b, Q) == Scalar::of_rational(qa * qb, Q));
  }
  Rat64 huge(INT64_MAX - 1, 1);
  CHECK_THROWS_AS(huge * huge, Rat64Overflow);
  CHECK_THROWS_AS(huge + huge, Rat64Overflow);

  using detail::FpK;
  FpK x{5, 13}, y{11, 13};
  CHECK((x * y).v == 3);
  CHECK((x + y).v == 3);
  CHECK((x - y).v == 7);
  CHECK((-y).v == 2);
}
