#include "hochbv/relative_bv.hpp"

#include <stdexcept>

namespace hochbv {

Chain star(const FrobeniusAlgebra&, const Chain&, const Chain&) {
  throw std::logic_error("star: pending");
}
Chain star_shifted(const FrobeniusAlgebra&, const Chain&, const Chain&) {
  throw std::logic_error("star_shifted: pending");
}
Chain T_homotopy(const FrobeniusAlgebra&, const Chain&, const Chain&) {
  throw std::logic_error("T_homotopy: pending");
}
Chain relative_bracket(const FrobeniusAlgebra&, const Chain&, const Chain&) {
  throw std::logic_error("relative_bracket: pending");
}
IdentityReport check_relative_identity(const FrobeniusAlgebra&, IdentityName,
                                       const Truncation&) {
  throw std::logic_error("check_relative_identity: pending");
}

}  // namespace hochbv
