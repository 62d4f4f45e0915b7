#include <doctest.h>

#include <random>

#include "hochbv/exactlinalg.hpp"
#include "oracle/dense_rank.hpp"

using namespace hochbv;

namespace {

Scalar q(long long n, long long d = 1) {
  return Scalar::of_rational(BigRat(n, d), Field::Q());
}

SparseMatrix from_dense(const std::vector<std::vector<long long>>& a, Field f = Field::Q()) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  SparseMatrix M(rows, cols, f);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (a[r][c]) M.set(r, c, Scalar::of_int(a[r][c], f));
  return M;
}

}  // namespace

TEST_CASE("scalar arithmetic stays reduced") {
  Field f = Field::Q();
  Scalar a = Scalar::parse("2/4", f);
  CHECK(a.str() == "1/2");
  CHECK((a + a).str() == "1");
  CHECK((a - a).is_zero());
  CHECK((q(1, 3) * q(3, 5)).str() == "1/5");
  CHECK((q(1) / q(-2)).str() == "-1/2");

  Field f7 = Field::Fp(7);
  Scalar b = Scalar::parse("1/2", f7);
  CHECK(b.str() == "4");  // inverse of 2 mod 7
  CHECK((b * Scalar::of_int(2, f7)).is_one());
  CHECK_THROWS(Field::Fp(6));
}

TEST_CASE("rank_kernel on the pinned examples") {
  // 0x0
  SparseMatrix empty(0, 0, Field::Q());
  auto rk0 = rank_kernel(empty);
  CHECK(rk0.rank == 0);
  CHECK(rk0.kernel.empty());

  // identity
  auto rk1 = rank_kernel(from_dense({{1, 0}, {0, 1}}));
  CHECK(rk1.rank == 2);
  CHECK(rk1.kernel.empty());

  // [[1,2],[2,4]]: rank 1, kernel spanned by (-2, 1)
  auto rk2 = rank_kernel(from_dense({{1, 2}, {2, 4}}));
  CHECK(rk2.rank == 1);
  REQUIRE(rk2.kernel.size() == 1);
  SparseVector expect;
  expect.add(0, q(-2));
  expect.add(1, q(1));
  CHECK(rk2.kernel[0] == expect);
}

TEST_CASE("solve on the pinned examples") {
  SparseVector b;
  b.add(0, q(3));
  b.add(1, q(-1));
  auto x = solve(from_dense({{1, 0}, {0, 1}}), b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  SparseVector one;
  one.add(0, q(1));
  CHECK_FALSE(solve(from_dense({{0}}), one).has_value());

  auto half = solve(from_dense({{2}}), one);
  REQUIRE(half.has_value());
  CHECK(half->entries.at(0).str() == "1/2");
}

TEST_CASE("homology_dims on the pinned examples") {
  SparseMatrix z3(3, 3, Field::Q());
  CHECK(homology_dims(z3, z3) == 3);

  CHECK(homology_dims(from_dense({{0}, {0}, {0}}).multiply(SparseMatrix(1, 1, Field::Q())),
                      from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 0);

  // middle of 0 -> k --1--> k: ker(1) = 0
  SparseMatrix d_in(1, 0, Field::Q());
  CHECK(homology_dims(d_in, from_dense({{1}})) == 0);

  // composite nonzero must be rejected
  CHECK_THROWS_AS(homology_dims(from_dense({{1}}), from_dense({{1}})), ComplexError);
}

TEST_CASE("rank(M) == rank(M^T) and solve/rank consistency on random matrices") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<int> dim(1, 7), val(-3, 3);
  for (int round = 0; round < 60; ++round) {
    int rows = dim(rng), cols = dim(rng);
    std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols));
    std::vector<std::vector<oracle::Q>> d(rows, std::vector<oracle::Q>(cols));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        a[r][c] = val(rng);
        d[r][c] = a[r][c];
      }
    SparseMatrix M = from_dense(a);
    auto rk = rank_kernel(M);
    CHECK(rk.rank == oracle::dense_rank(d));
    CHECK(rk.rank == rank_kernel(M.transpose()).rank);
    CHECK(rk.rank + static_cast<int>(rk.kernel.size()) == cols);
    for (const auto& v : rk.kernel) CHECK(M.apply(v).is_zero());

    // Mx = b solvable iff rank[M|b] == rank M
    SparseVector b;
    for (int r = 0; r < rows; ++r) b.add(r, q(val(rng)));
    auto x = solve(M, b);
    SparseMatrix aug(rows, cols + 1, Field::Q());
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c)
        if (a[r][c]) aug.set(r, c, q(a[r][c]));
      auto it = b.entries.find(r);
      if (it != b.entries.end()) aug.set(r, cols, it->second);
    }
    bool solvable = rank_kernel(aug).rank == rk.rank;
    CHECK(x.has_value() == solvable);
    if (x) CHECK(M.apply(*x) == b);
  }
}

TEST_CASE("rank over F_p matches the dense oracle") {
  std::mt19937_64 rng(7);
  Field f = Field::Fp(13);
  std::uniform_int_distribution<int> dim(1, 6), val(0, 12);
  for (int round = 0; round < 40; ++round) {
    int rows = dim(rng), cols = dim(rng);
    SparseMatrix M(rows, cols, f);
    std::vector<std::vector<std::uint64_t>> d(rows, std::vector<std::uint64_t>(cols));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        int v = val(rng);
        d[r][c] = static_cast<std::uint64_t>(v);
        if (v) M.set(r, c, Scalar::of_int(v, f));
      }
    CHECK(rank_kernel(M).rank == oracle::dense_rank_fp(d, 13));
  }
}

TEST_CASE("matrix text round trip") {
  SparseMatrix M = from_dense({{1, 0, -2}, {0, 3, 0}});
  M.set(0, 2, q(-2, 3));
  std::string text = M.export_text();
  CHECK(text.substr(0, text.find('\n')) == "2 3 3 Q");
  SparseMatrix back = SparseMatrix::import_text(text);
  CHECK(back.export_text() == text);
}
