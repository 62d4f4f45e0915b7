#pragma once

#include <variant>

#include "hochbv/hochschild.hpp"

// Chain-level coproduct theta, product bullet, the named homotopies, and the
// bracket on C_*(A,A). Callers are expected to work with algebras that pass
// validate(symmetric_open); the CLI enforces this once per run, the raw
// operations do not re-validate.

namespace hochbv {

using detail::Word2;
using detail::Word3;

// 2- and 3-tensor chains; same normalization contract as Chain (sorted words,
// merged coefficients, no zeros).
using Chain2 = std::vector<std::pair<Word2, Scalar>>;
using Chain3 = std::vector<std::pair<Word3, Scalar>>;

enum class HomotopyName {
  h_cocom,      // cocommutativity homotopy h
  H_thetaB,     // homotopy between h and the rotation-coproduct bucket 2
  G_coLeibniz,  // co-Leibniz homotopy, triple-tensor valued
  K_com,        // commutativity homotopy for the product
  H_bullet,     // bracket/BV deviation homotopy
  H_frobR,      // right-module compatibility homotopy, inputs with slots
  G_frobR,      // right-module compatibility homotopy, slot-free left input
  S_cobracket,  // symmetrized cobracket h + (-1)^m tau h
};

std::string homotopy_str(HomotopyName name);
HomotopyName parse_homotopy(const std::string& name);  // throws std::invalid_argument
int homotopy_arity(HomotopyName name);                 // 1 or 2

Chain2 theta(const FrobeniusAlgebra& A, const Chain& c);
Chain bullet(const FrobeniusAlgebra& A, const Chain& x, const Chain& y);
// pullback of bullet through the degree shift; strictly associative
Chain bullet_shifted(const FrobeniusAlgebra& A, const Chain& x, const Chain& y);
Chain gers_bracket(const FrobeniusAlgebra& A, const Chain& x, const Chain& y);

using HomotopyValue = std::variant<Chain, Chain2, Chain3>;
// inputs.size() must equal homotopy_arity(name)
HomotopyValue apply_homotopy(const FrobeniusAlgebra& A, HomotopyName name,
                             const std::vector<Chain>& inputs);

Chain2 chain2_add(const Chain2& a, const Chain2& b);
Chain3 chain3_add(const Chain3& a, const Chain3& b);
std::string word2_str(const FrobeniusAlgebra& A, const Word2& w);
std::string word3_str(const FrobeniusAlgebra& A, const Word3& w);
std::string chain2_str(const FrobeniusAlgebra& A, const Chain2& c);
std::string chain3_str(const FrobeniusAlgebra& A, const Chain3& c);

}  // namespace hochbv
