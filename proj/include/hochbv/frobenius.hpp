#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hochbv/scalar.hpp"

namespace hochbv {

struct FrobeniusError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BasisElement {
  std::string name;
  int degree = 0;
};

// Sparse combination of basis elements: sorted by index, coefficients nonzero.
using Combo = std::vector<std::pair<int, Scalar>>;
// Sparse tensors over the basis (Sweedler data lives here).
using Tensor2 = std::map<std::pair<int, int>, Scalar>;
using Tensor3 = std::map<std::tuple<int, int, int>, Scalar>;

void tensor2_add(Tensor2& t, int j, int k, const Scalar& c);
void tensor3_add(Tensor3& t, int i, int j, int k, const Scalar& c);
std::string combo_str(const Combo& c, const std::vector<BasisElement>& basis);
std::string tensor2_str(const Tensor2& t, const std::vector<BasisElement>& basis);

// Graded algebra with product, differential, degree-m coproduct, and optionally a
// degree-m pairing and a counit, all as structure-constant tables over a fixed basis.
// Basis index 0 is the unit (degree 0); the non-unit elements span the augmentation
// ideal used by the normalized chain complex.
class FrobeniusAlgebra {
 public:
  FrobeniusAlgebra(std::string name, Field field, int m, std::vector<BasisElement> basis);

  static FrobeniusAlgebra from_json(const nlohmann::json& j,
                                    std::optional<Field> field_override = std::nullopt);
  static FrobeniusAlgebra load_file(const std::string& path,
                                    std::optional<Field> field_override = std::nullopt);
  nlohmann::ordered_json to_json() const;

  const std::string& name() const { return name_; }
  const Field& field() const { return field_; }
  int m() const { return m_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  int degree(int i) const { return basis_[i].degree; }

  // table setters (degree-checked; used by the loader and by derive_open_from_closed)
  void set_product(int i, int j, int k, const Scalar& c);
  void set_differential(int i, int k, const Scalar& c);
  void set_coproduct(int i, int j, int k, const Scalar& c);
  void set_pairing(int i, int j, const Scalar& c);
  void set_counit(int i, const Scalar& c);

  const Combo& product(int i, int j) const { return product_[i * dim() + j]; }
  const Combo& differential(int i) const { return differential_[i]; }
  const std::vector<std::tuple<int, int, Scalar>>& coproduct(int i) const {
    return coproduct_[i];
  }
  bool has_pairing() const { return has_pairing_; }
  bool has_counit() const { return has_counit_; }
  Scalar pairing(int i, int j) const;
  Scalar counit(int i) const;

  // combination arithmetic over this algebra
  Combo mul(const Combo& a, const Combo& b) const;
  Combo dif(const Combo& a) const;
  Tensor2 cop(int i) const;
  Scalar eval_counit(const Combo& a) const;
  bool is_commutative() const;  // graded commutativity of the product table

 private:
  std::string name_;
  Field field_;
  int m_;
  std::vector<BasisElement> basis_;
  std::vector<Combo> product_;       // (i * dim + j) -> combo
  std::vector<Combo> differential_;  // i -> combo
  std::vector<std::vector<std::tuple<int, int, Scalar>>> coproduct_;
  bool has_pairing_ = false;
  bool has_counit_ = false;
  std::vector<Scalar> pairing_;  // dense dim*dim when present
  std::vector<Scalar> counit_;   // dense dim when present
};

enum class ValidationLevel { dga, open, symmetric_open, commutative };
ValidationLevel parse_level(const std::string& s);
std::string level_str(ValidationLevel);

struct AxiomResult {
  std::string axiom;
  bool pass = true;
  std::string counterexample;  // empty when pass
};

struct ValidationReport {
  std::string subject;
  std::string level;
  std::vector<AxiomResult> results;
  bool pass() const;
  nlohmann::ordered_json to_json() const;
};

// Checks every axiom up to the requested level on every basis tuple.
ValidationReport validate(const FrobeniusAlgebra& A, ValidationLevel level);

// Solves for the coproduct determined by a nondegenerate invariant pairing and
// returns the resulting open structure (with a counit filled in from the pairing).
// Throws FrobeniusError("degenerate pairing") / ("pairing not invariant").
FrobeniusAlgebra derive_open_from_closed(const FrobeniusAlgebra& closed);

// Structural consequences checked element by element: cocommutativity (commutative
// case), centrality of c(z) = Σ ± z''z', counit recovery identities, and the
// pairing/counit round trip when both are present.
ValidationReport check_propositions(const FrobeniusAlgebra& A);

}  // namespace hochbv
