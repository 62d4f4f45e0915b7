#include <doctest.h>

#include <hochbv/frobenius.hpp>

#include <string>

using namespace hochbv;

namespace {

std::string fixture(const std::string& name) {
  return std::string(HOCHBV_FIXTURE_DIR) + "/" + name;
}

const AxiomResult& row(const ValidationReport& rep, const std::string& axiom) {
  for (const auto& r : rep.results)
    if (r.axiom == axiom) return r;
  static AxiomResult missing{"<missing>", false, ""};
  return missing;
}

// Coproduct tables agree entry for entry (both sorted by construction).
bool same_coproduct(const FrobeniusAlgebra& A, const FrobeniusAlgebra& B) {
  if (A.dim() != B.dim()) return false;
  for (int i = 0; i < A.dim(); ++i) {
    const auto& a = A.coproduct(i);
    const auto& b = B.coproduct(i);
    if (a.size() != b.size()) return false;
    for (size_t t = 0; t < a.size(); ++t) {
      if (std::get<0>(a[t]) != std::get<0>(b[t])) return false;
      if (std::get<1>(a[t]) != std::get<1>(b[t])) return false;
      if (!(std::get<2>(a[t]) == std::get<2>(b[t]))) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("ground field passes every level") {
  auto A = FrobeniusAlgebra::load_file(fixture("k.json"));
  auto rep = validate(A, ValidationLevel::commutative);
  CHECK(rep.pass());
  for (const auto& r : rep.results) CHECK(r.pass);
}

TEST_CASE("truncated polynomial algebra is a commutative symmetric open structure") {
  auto A = FrobeniusAlgebra::load_file(fixture("q_x3_deg2.json"));
  CHECK(A.m() == 4);
  CHECK(A.is_commutative());
  auto rep = validate(A, ValidationLevel::commutative);
  CHECK(rep.pass());
  CHECK(row(rep, "coassociativity").pass);
  CHECK(row(rep, "frobenius-left").pass);
  CHECK(row(rep, "frobenius-right").pass);
  CHECK(row(rep, "symmetry").pass);
}

TEST_CASE("all shipped good fixtures validate at their level") {
  for (const char* name : {"q_x2_deg1.json", "q_x2_deg2.json", "ext2.json"}) {
    auto A = FrobeniusAlgebra::load_file(fixture(name));
    auto rep = validate(A, ValidationLevel::commutative);
    INFO(name);
    CHECK(rep.pass());
  }
  auto M = FrobeniusAlgebra::load_file(fixture("broken_noncomm.json"));
  CHECK(validate(M, ValidationLevel::symmetric_open).pass());
  CHECK_FALSE(M.is_commutative());
  auto rep = validate(M, ValidationLevel::commutative);
  CHECK_FALSE(rep.pass());
  CHECK_FALSE(row(rep, "commutativity").pass);
  CHECK(row(rep, "symmetry").pass);
}

TEST_CASE("dropping coproduct terms breaks compatibility with a localized witness") {
  auto j = nlohmann::json::parse(R"({
    "name": "doctored", "field": "Q", "m": 4,
    "basis": [{"name": "1", "degree": 0}, {"name": "x", "degree": 2},
              {"name": "x2", "degree": 4}],
    "product": [[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"],[0,2,2,"1"],[2,0,2,"1"],[1,1,2,"1"]],
    "coproduct": [[0,0,2,"1"],[1,1,2,"1"],[1,2,1,"1"],[2,2,2,"1"]]
  })");
  auto A = FrobeniusAlgebra::from_json(j);
  auto rep = validate(A, ValidationLevel::open);
  CHECK_FALSE(rep.pass());
  const auto& r = row(rep, "frobenius-right");
  CHECK_FALSE(r.pass);
  CHECK(r.counterexample.substr(0, 5) == "(x,1)");
  CHECK_FALSE(row(rep, "frobenius-left").pass);
}

TEST_CASE("broken symmetry fixture fails exactly where expected") {
  auto A = FrobeniusAlgebra::load_file(fixture("broken_nonsym.json"));
  auto rep = validate(A, ValidationLevel::symmetric_open);
  CHECK_FALSE(rep.pass());
  CHECK_FALSE(row(rep, "symmetry").pass);
}

TEST_CASE("coproduct derived from the pairing matches the frozen tables") {
  struct Case {
    const char* closed;
    const char* open;
  };
  for (auto [closed, open] : {Case{"closed_q_x2_deg1.json", "q_x2_deg1.json"},
                              Case{"closed_q_x3_deg2.json", "q_x3_deg2.json"},
                              Case{"closed_ext2.json", "ext2.json"},
                              Case{"closed_m2.json", "broken_noncomm.json"}}) {
    INFO(closed);
    auto C = FrobeniusAlgebra::load_file(fixture(closed));
    CHECK_FALSE(C.has_counit());
    auto D = derive_open_from_closed(C);
    auto E = FrobeniusAlgebra::load_file(fixture(open));
    CHECK(same_coproduct(D, E));
    CHECK(D.has_counit());
    for (int i = 0; i < D.dim(); ++i) CHECK(D.counit(i) == E.counit(i));
    CHECK(validate(D, ValidationLevel::symmetric_open).pass());
  }
}

TEST_CASE("odd generator square-zero derivation pins the signs") {
  auto C = FrobeniusAlgebra::load_file(fixture("closed_q_x2_deg1.json"));
  auto D = derive_open_from_closed(C);
  const auto& d1 = D.coproduct(0);
  REQUIRE(d1.size() == 2);
  CHECK(std::get<0>(d1[0]) == 0);
  CHECK(std::get<1>(d1[0]) == 1);
  CHECK(std::get<2>(d1[0]).str() == "1");
  CHECK(std::get<0>(d1[1]) == 1);
  CHECK(std::get<1>(d1[1]) == 0);
  CHECK(std::get<2>(d1[1]).str() == "-1");
  const auto& dx = D.coproduct(1);
  REQUIRE(dx.size() == 1);
  CHECK(std::get<2>(dx[0]).str() == "-1");
}

TEST_CASE("degenerate and non-invariant pairings are rejected") {
  auto base = nlohmann::json::parse(R"({
    "name": "degenerate", "field": "Q", "m": 1,
    "basis": [{"name": "1", "degree": 0}, {"name": "x", "degree": 1}],
    "product": [[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"]],
    "pairing": [[0,1,"0"]]
  })");
  auto A = FrobeniusAlgebra::from_json(base);
  CHECK_THROWS_WITH_AS(derive_open_from_closed(A), doctest::Contains("degenerate pairing"),
                       FrobeniusError);

  auto bad = nlohmann::json::parse(R"({
    "name": "noninvariant", "field": "Q", "m": 4,
    "basis": [{"name": "1", "degree": 0}, {"name": "x", "degree": 2},
              {"name": "x2", "degree": 4}],
    "product": [[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"],[0,2,2,"1"],[2,0,2,"1"],[1,1,2,"1"]],
    "pairing": [[0,2,"1"],[2,0,"1"],[1,1,"2"]]
  })");
  auto B = FrobeniusAlgebra::from_json(bad);
  CHECK_THROWS_WITH_AS(derive_open_from_closed(B), doctest::Contains("pairing not invariant"),
                       FrobeniusError);
}

TEST_CASE("structural consequences hold on every valid fixture") {
  for (const char* name : {"q_x2_deg1.json", "q_x2_deg2.json", "q_x3_deg2.json", "ext2.json",
                           "broken_noncomm.json"}) {
    auto A = FrobeniusAlgebra::load_file(fixture(name));
    auto rep = check_propositions(A);
    INFO(name);
    CHECK(rep.pass());
    CHECK(row(rep, "centrality").pass);
    CHECK(row(rep, "counit-recovery-direct").pass);
    CHECK(row(rep, "counit-recovery-unit-m").pass);
    CHECK(row(rep, "counit-recovery-unit-deg").pass);
    CHECK(row(rep, "pairing-counit-round-trip").pass);
    if (A.is_commutative()) CHECK(row(rep, "cocommutativity").pass);
  }
}

TEST_CASE("json round trip preserves the structure and is deterministic") {
  auto A = FrobeniusAlgebra::load_file(fixture("q_x3_deg2.json"));
  auto j1 = A.to_json();
  auto B = FrobeniusAlgebra::from_json(j1);
  CHECK(same_coproduct(A, B));
  CHECK(validate(B, ValidationLevel::commutative).pass());
  CHECK(j1.dump() == B.to_json().dump());
}

TEST_CASE("prime field override reduces the tables mod p") {
  auto A = FrobeniusAlgebra::load_file(fixture("broken_noncomm.json"), Field::Fp(13));
  CHECK(A.field().str() == "Fp:13");
  CHECK(validate(A, ValidationLevel::symmetric_open).pass());
  // 1/2 reduces to the residue 7 mod 13
  CHECK(A.product(1, 2).at(0).second.str() == "7");
}

TEST_CASE("table setters reject degree mismatches") {
  FrobeniusAlgebra A("t", Field::Q(), 2, {{"1", 0}, {"x", 2}});
  CHECK_THROWS_AS(A.set_coproduct(0, 1, 1, Scalar::one(Field::Q())), FrobeniusError);
  CHECK_THROWS_AS(A.set_pairing(1, 1, Scalar::one(Field::Q())), FrobeniusError);
  CHECK_THROWS_AS(A.set_counit(0, Scalar::one(Field::Q())), FrobeniusError);
}
