#pragma once

#include "hochbv/identity_check.hpp"

// Operations on the relative complex C_*(A,A)/A for commutative symmetric open
// Frobenius algebras: the suspended product star, its commutator homotopy T,
// the relative bracket, and the R-identity checks.

namespace hochbv {

// star/T/bracket on representatives; callers must pass commutative algebras,
// which the public entry points verify once per call.
Chain star(const FrobeniusAlgebra& A, const Chain& x, const Chain& y);
Chain star_shifted(const FrobeniusAlgebra& A, const Chain& x, const Chain& y);
Chain T_homotopy(const FrobeniusAlgebra& A, const Chain& x, const Chain& y);
Chain relative_bracket(const FrobeniusAlgebra& A, const Chain& x, const Chain& y);

IdentityReport check_relative_identity(const FrobeniusAlgebra& A, IdentityName id,
                                       const Truncation& t);

}  // namespace hochbv
