#include "hochbv/frobenius.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hochbv/exactlinalg.hpp"

namespace hochbv {

namespace {

Scalar sign(int exp, const Field& f) {
  return (exp % 2 + 2) % 2 ? Scalar::of_int(-1, f) : Scalar::one(f);
}

bool at_least(ValidationLevel have, ValidationLevel want) {
  return static_cast<int>(have) >= static_cast<int>(want);
}

void combo_add(Combo& c, int k, const Scalar& v) {
  if (v.is_zero()) return;
  auto it = std::lower_bound(c.begin(), c.end(), k,
                             [](const auto& t, int key) { return t.first < key; });
  if (it != c.end() && it->first == k) {
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
  } else {
    c.insert(it, {k, v});
  }
}

}  // namespace

void tensor2_add(Tensor2& t, int j, int k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t.try_emplace({j, k}, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

void tensor3_add(Tensor3& t, int i, int j, int k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t.try_emplace({i, j, k}, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

std::string combo_str(const Combo& c, const std::vector<BasisElement>& basis) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : c) {
    if (!first) os << " + ";
    first = false;
    if (!v.is_one()) os << v.str() << "*";
    os << basis[k].name;
  }
  return os.str();
}

std::string tensor2_str(const Tensor2& t, const std::vector<BasisElement>& basis) {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [jk, v] : t) {
    if (!first) os << " + ";
    first = false;
    if (!v.is_one()) os << v.str() << "*";
    os << basis[jk.first].name << "⊗" << basis[jk.second].name;
  }
  return os.str();
}

static std::string tensor3_str(const Tensor3& t, const std::vector<BasisElement>& basis) {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [ijk, v] : t) {
    if (!first) os << " + ";
    first = false;
    if (!v.is_one()) os << v.str() << "*";
    os << basis[std::get<0>(ijk)].name << "⊗" << basis[std::get<1>(ijk)].name << "⊗"
       << basis[std::get<2>(ijk)].name;
  }
  return os.str();
}

FrobeniusAlgebra::FrobeniusAlgebra(std::string name, Field field, int m,
                                   std::vector<BasisElement> basis)
    : name_(std::move(name)), field_(field), m_(m), basis_(std::move(basis)) {
  if (basis_.empty()) throw FrobeniusError("empty basis");
  if (basis_.size() > 255) throw FrobeniusError("basis too large (limit 255)");
  if (basis_[0].degree != 0) throw FrobeniusError("basis element 0 must be the unit, degree 0");
  for (const auto& b : basis_)
    if (b.degree < 0) throw FrobeniusError("negative basis degree");
  product_.assign(basis_.size() * basis_.size(), {});
  differential_.assign(basis_.size(), {});
  coproduct_.assign(basis_.size(), {});
}

void FrobeniusAlgebra::set_product(int i, int j, int k, const Scalar& c) {
  if (degree(k) != degree(i) + degree(j))
    throw FrobeniusError("product table degree mismatch at (" + basis_[i].name + "," +
                         basis_[j].name + ")");
  combo_add(product_[i * dim() + j], k, c);
}

void FrobeniusAlgebra::set_differential(int i, int k, const Scalar& c) {
  if (degree(k) != degree(i) + 1)
    throw FrobeniusError("differential table degree mismatch at " + basis_[i].name);
  combo_add(differential_[i], k, c);
}

void FrobeniusAlgebra::set_coproduct(int i, int j, int k, const Scalar& c) {
  if (degree(j) + degree(k) != m_ + degree(i))
    throw FrobeniusError("coproduct table degree mismatch at " + basis_[i].name);
  if (c.is_zero()) return;
  auto& lst = coproduct_[i];
  auto it = std::find_if(lst.begin(), lst.end(), [&](const auto& t) {
    return std::get<0>(t) == j && std::get<1>(t) == k;
  });
  if (it == lst.end()) {
    lst.emplace_back(j, k, c);
    std::sort(lst.begin(), lst.end(), [](const auto& a, const auto& b) {
      return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
  } else {
    std::get<2>(*it) += c;
    if (std::get<2>(*it).is_zero()) lst.erase(it);
  }
}

void FrobeniusAlgebra::set_pairing(int i, int j, const Scalar& c) {
  if (!c.is_zero() && degree(i) + degree(j) != m_)
    throw FrobeniusError("pairing nonzero off degree m at (" + basis_[i].name + "," +
                         basis_[j].name + ")");
  if (!has_pairing_) {
    pairing_.assign(dim() * dim(), Scalar::zero(field_));
    has_pairing_ = true;
  }
  pairing_[i * dim() + j] = c;
}

void FrobeniusAlgebra::set_counit(int i, const Scalar& c) {
  if (!c.is_zero() && degree(i) != m_)
    throw FrobeniusError("counit nonzero off degree m at " + basis_[i].name);
  if (!has_counit_) {
    counit_.assign(dim(), Scalar::zero(field_));
    has_counit_ = true;
  }
  counit_[i] = c;
}

Scalar FrobeniusAlgebra::pairing(int i, int j) const {
  if (!has_pairing_) throw FrobeniusError("algebra has no pairing");
  return pairing_[i * dim() + j];
}

Scalar FrobeniusAlgebra::counit(int i) const {
  if (!has_counit_) throw FrobeniusError("algebra has no counit");
  return counit_[i];
}

Combo FrobeniusAlgebra::mul(const Combo& a, const Combo& b) const {
  Combo out;
  for (const auto& [i, ci] : a)
    for (const auto& [j, cj] : b)
      for (const auto& [k, ck] : product(i, j)) combo_add(out, k, ci * cj * ck);
  return out;
}

Combo FrobeniusAlgebra::dif(const Combo& a) const {
  Combo out;
  for (const auto& [i, ci] : a)
    for (const auto& [k, ck] : differential_[i]) combo_add(out, k, ci * ck);
  return out;
}

Tensor2 FrobeniusAlgebra::cop(int i) const {
  Tensor2 t;
  for (const auto& [j, k, c] : coproduct_[i]) tensor2_add(t, j, k, c);
  return t;
}

Scalar FrobeniusAlgebra::eval_counit(const Combo& a) const {
  Scalar acc = Scalar::zero(field_);
  for (const auto& [i, ci] : a) acc += ci * counit(i);
  return acc;
}

bool FrobeniusAlgebra::is_commutative() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      Combo rhs = product(j, i);
      for (auto& [k, v] : rhs) v *= sign(degree(i) * degree(j), field_);
      if (product(i, j) != rhs) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// JSON I/O

FrobeniusAlgebra FrobeniusAlgebra::from_json(const nlohmann::json& j,
                                             std::optional<Field> field_override) {
  Field f = Field::Q();
  if (j.contains("field")) {
    if (j["field"].is_string())
      f = Field::parse(j["field"].get<std::string>());
    else if (j["field"].is_object() && j["field"].contains("Fp"))
      f = Field::Fp(j["field"]["Fp"].get<std::uint64_t>());
    else
      throw FrobeniusError("bad 'field' entry");
  }
  if (field_override) f = *field_override;
  std::vector<BasisElement> basis;
  for (const auto& b : j.at("basis"))
    basis.push_back({b.at("name").get<std::string>(), b.at("degree").get<int>()});
  FrobeniusAlgebra A(j.value("name", std::string("unnamed")), f, j.at("m").get<int>(),
                     std::move(basis));
  auto scalar_of = [&](const nlohmann::json& v) {
    return v.is_string() ? Scalar::parse(v.get<std::string>(), f)
                         : Scalar::of_int(v.get<long long>(), f);
  };
  for (const auto& e : j.value("product", nlohmann::json::array()))
    A.set_product(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>(), scalar_of(e.at(3)));
  for (const auto& e : j.value("differential", nlohmann::json::array()))
    A.set_differential(e.at(0).get<int>(), e.at(1).get<int>(), scalar_of(e.at(2)));
  for (const auto& e : j.value("coproduct", nlohmann::json::array()))
    A.set_coproduct(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>(),
                    scalar_of(e.at(3)));
  for (const auto& e : j.value("pairing", nlohmann::json::array()))
    A.set_pairing(e.at(0).get<int>(), e.at(1).get<int>(), scalar_of(e.at(2)));
  for (const auto& e : j.value("counit", nlohmann::json::array()))
    A.set_counit(e.at(0).get<int>(), scalar_of(e.at(1)));
  return A;
}

FrobeniusAlgebra FrobeniusAlgebra::load_file(const std::string& path,
                                             std::optional<Field> field_override) {
  std::ifstream in(path);
  if (!in) throw FrobeniusError("cannot open algebra file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw FrobeniusError("cannot parse " + path + ": " + e.what());
  }
  return from_json(j, field_override);
}

nlohmann::ordered_json FrobeniusAlgebra::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name_;
  if (field_.is_rational())
    j["field"] = "Q";
  else
    j["field"] = {{"Fp", field_.p}};
  j["m"] = m_;
  j["basis"] = nlohmann::ordered_json::array();
  for (const auto& b : basis_) j["basis"].push_back({{"name", b.name}, {"degree", b.degree}});
  auto arr = nlohmann::ordered_json::array();
  for (int i = 0; i < dim(); ++i)
    for (int jj = 0; jj < dim(); ++jj)
      for (const auto& [k, c] : product(i, jj)) arr.push_back({i, jj, k, c.str()});
  j["product"] = arr;
  arr = nlohmann::ordered_json::array();
  for (int i = 0; i < dim(); ++i)
    for (const auto& [k, c] : differential_[i]) arr.push_back({i, k, c.str()});
  j["differential"] = arr;
  arr = nlohmann::ordered_json::array();
  for (int i = 0; i < dim(); ++i)
    for (const auto& [a, b, c] : coproduct_[i]) arr.push_back({i, a, b, c.str()});
  j["coproduct"] = arr;
  if (has_pairing_) {
    arr = nlohmann::ordered_json::array();
    for (int i = 0; i < dim(); ++i)
      for (int jj = 0; jj < dim(); ++jj)
        if (!pairing_[i * dim() + jj].is_zero())
          arr.push_back({i, jj, pairing_[i * dim() + jj].str()});
    j["pairing"] = arr;
  }
  if (has_counit_) {
    arr = nlohmann::ordered_json::array();
    for (int i = 0; i < dim(); ++i)
      if (!counit_[i].is_zero()) arr.push_back({i, counit_[i].str()});
    j["counit"] = arr;
  }
  return j;
}

// ---------------------------------------------------------------------------
// validate

ValidationLevel parse_level(const std::string& s) {
  if (s == "dga") return ValidationLevel::dga;
  if (s == "open") return ValidationLevel::open;
  if (s == "symmetric_open") return ValidationLevel::symmetric_open;
  if (s == "commutative") return ValidationLevel::commutative;
  throw FrobeniusError("unknown validation level '" + s + "'");
}

std::string level_str(ValidationLevel l) {
  switch (l) {
    case ValidationLevel::dga: return "dga";
    case ValidationLevel::open: return "open";
    case ValidationLevel::symmetric_open: return "symmetric_open";
    case ValidationLevel::commutative: return "commutative";
  }
  return "?";
}

bool ValidationReport::pass() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

nlohmann::ordered_json ValidationReport::to_json() const {
  nlohmann::ordered_json j;
  j["subject"] = subject;
  j["level"] = level;
  j["pass"] = pass();
  j["axioms"] = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json a;
    a["axiom"] = r.axiom;
    a["pass"] = r.pass;
    if (!r.counterexample.empty()) a["counterexample"] = r.counterexample;
    j["axioms"].push_back(a);
  }
  return j;
}

ValidationReport validate(const FrobeniusAlgebra& A, ValidationLevel level) {
  ValidationReport rep;
  rep.subject = A.name();
  rep.level = level_str(level);
  const auto& basis = A.basis();
  const int n = A.dim();
  const Field& f = A.field();
  const int m = A.m();

  auto check = [&](const std::string& axiom, bool ok, const std::string& cex) {
    auto it = std::find_if(rep.results.begin(), rep.results.end(),
                           [&](const AxiomResult& r) { return r.axiom == axiom; });
    if (it == rep.results.end()) {
      rep.results.push_back({axiom, ok, ok ? "" : cex});
    } else if (it->pass && !ok) {
      it->pass = false;
      it->counterexample = cex;
    }
  };
  auto unit = [&](int i) { return Combo{{i, Scalar::one(f)}}; };

  // dga axioms
  for (int i = 0; i < n; ++i) {
    check("unitality", A.product(0, i) == unit(i) && A.product(i, 0) == unit(i),
          "(" + basis[i].name + ")");
    check("differential-squares-to-zero", A.dif(A.differential(i)).empty(),
          "(" + basis[i].name + ")");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // leibniz: d(ab) = (da)b + (-1)^{|a|} a(db)
      Combo lhs = A.dif(A.product(i, j));
      Combo rhs = A.mul(A.differential(i), unit(j));
      Combo t = A.mul(unit(i), A.differential(j));
      for (auto& [k, v] : t) v *= sign(A.degree(i), f);
      for (const auto& [k, v] : t) combo_add(rhs, k, v);
      check("leibniz", lhs == rhs,
            "(" + basis[i].name + "," + basis[j].name + "): d(ab)=" + combo_str(lhs, basis) +
                " vs " + combo_str(rhs, basis));
      for (int k = 0; k < n; ++k) {
        Combo l = A.mul(A.product(i, j), unit(k));
        Combo r = A.mul(unit(i), A.product(j, k));
        check("associativity", l == r,
              "(" + basis[i].name + "," + basis[j].name + "," + basis[k].name + ")");
      }
    }

  if (at_least(level, ValidationLevel::open)) {
    for (int i = 0; i < n; ++i) {
      // coassociativity: (δ⊗1)δ = (-1)^m (1⊗δ)δ
      Tensor3 lhs, rhs;
      for (const auto& [j, k, c] : A.coproduct(i)) {
        for (const auto& [a, b, c2] : A.coproduct(j)) tensor3_add(lhs, a, b, k, c * c2);
        for (const auto& [a, b, c2] : A.coproduct(k))
          tensor3_add(rhs, j, a, b, c * c2 * sign(m + m * A.degree(j), f));
      }
      check("coassociativity", lhs == rhs,
            "(" + basis[i].name + "): " + tensor3_str(lhs, basis) + " vs " +
                tensor3_str(rhs, basis));

      // chain map: δd = (-1)^m (d⊗1 + 1⊗d) δ
      Tensor2 cl, cr;
      for (const auto& [k, c] : A.differential(i))
        for (const auto& [a, b, c2] : A.coproduct(k)) tensor2_add(cl, a, b, c * c2);
      for (const auto& [j, k, c] : A.coproduct(i)) {
        for (const auto& [a, ca] : A.differential(j)) tensor2_add(cr, a, k, c * ca * sign(m, f));
        for (const auto& [b, cb] : A.differential(k))
          tensor2_add(cr, j, b, c * cb * sign(m + A.degree(j), f));
      }
      check("coproduct-chain-map", cl == cr,
            "(" + basis[i].name + "): " + tensor2_str(cl, basis) + " vs " +
                tensor2_str(cr, basis));
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Tensor2 dxy;
        for (const auto& [k, c] : A.product(i, j))
          for (const auto& [a, b, c2] : A.coproduct(k)) tensor2_add(dxy, a, b, c * c2);
        // left module map: δ(xy) = Σ x' ⊗ x''y
        Tensor2 lm;
        for (const auto& [a, b, c] : A.coproduct(i))
          for (const auto& [k, ck] : A.product(b, j)) tensor2_add(lm, a, k, c * ck);
        check("frobenius-left", dxy == lm,
              "(" + basis[i].name + "," + basis[j].name + "): δ(xy)=" + tensor2_str(dxy, basis) +
                  " vs Σx'⊗x''y=" + tensor2_str(lm, basis));
        // right module map: δ(xy) = Σ (-1)^{m|x|} xy' ⊗ y''
        Tensor2 rm;
        for (const auto& [a, b, c] : A.coproduct(j))
          for (const auto& [k, ck] : A.product(i, a))
            tensor2_add(rm, k, b, c * ck * sign(m * A.degree(i), f));
        check("frobenius-right", dxy == rm,
              "(" + basis[i].name + "," + basis[j].name + "): δ(xy)=" + tensor2_str(dxy, basis) +
                  " vs Σ±xy'⊗y''=" + tensor2_str(rm, basis));
      }
  }

  if (at_least(level, ValidationLevel::symmetric_open)) {
    Tensor2 lhs = A.cop(0), rhs;
    for (const auto& [j, k, c] : A.coproduct(0))
      tensor2_add(rhs, k, j, c * sign(A.degree(j) * A.degree(k) + m, f));
    check("symmetry", lhs == rhs,
          "δ(1)=" + tensor2_str(lhs, basis) + " vs ±τδ(1)=" + tensor2_str(rhs, basis));
  }

  if (at_least(level, ValidationLevel::commutative)) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Combo rhs = A.product(j, i);
        for (auto& [k, v] : rhs) v *= sign(A.degree(i) * A.degree(j), f);
        check("commutativity", A.product(i, j) == rhs,
              "(" + basis[i].name + "," + basis[j].name + ")");
      }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// derive_open_from_closed

FrobeniusAlgebra derive_open_from_closed(const FrobeniusAlgebra& closed) {
  if (!closed.has_pairing()) throw FrobeniusError("no pairing supplied");
  const int n = closed.dim();
  const Field& f = closed.field();
  const int m = closed.m();
  auto unit = [&](int i) { return Combo{{i, Scalar::one(f)}}; };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!(closed.pairing(i, j) ==
            closed.pairing(j, i) * sign(closed.degree(i) * closed.degree(j), f)))
        throw FrobeniusError("pairing not invariant (graded symmetry fails at (" +
                             closed.basis()[i].name + "," + closed.basis()[j].name + "))");
      // d-compatibility: <dx,y> = -(-1)^{|x|} <x,dy>
      Scalar l = Scalar::zero(f), r = Scalar::zero(f);
      for (const auto& [k, c] : closed.differential(i)) l += c * closed.pairing(k, j);
      for (const auto& [k, c] : closed.differential(j)) r += c * closed.pairing(i, k);
      if (!(l == -(r * sign(closed.degree(i), f))))
        throw FrobeniusError("pairing not invariant (differential compatibility fails at (" +
                             closed.basis()[i].name + "," + closed.basis()[j].name + "))");
      for (int k = 0; k < n; ++k) {
        Scalar a = Scalar::zero(f), b = Scalar::zero(f);
        for (const auto& [t, c] : closed.product(i, j)) a += c * closed.pairing(t, k);
        for (const auto& [t, c] : closed.product(j, k)) b += c * closed.pairing(i, t);
        if (!(a == b))
          throw FrobeniusError("pairing not invariant (associativity of the pairing fails at (" +
                               closed.basis()[i].name + "," + closed.basis()[j].name + "," +
                               closed.basis()[k].name + "))");
      }
    }

  // per-degree Gram blocks must be square and invertible
  std::map<int, std::vector<int>> by_degree;
  for (int i = 0; i < n; ++i) by_degree[closed.degree(i)].push_back(i);
  for (const auto& [d, idx] : by_degree) {
    auto it = by_degree.find(m - d);
    if (it == by_degree.end() || it->second.size() != idx.size())
      throw FrobeniusError("degenerate pairing (degree " + std::to_string(d) +
                           " has no matching dual block)");
    SparseMatrix gram(static_cast<int>(idx.size()), static_cast<int>(idx.size()), f);
    for (size_t r = 0; r < idx.size(); ++r)
      for (size_t c = 0; c < it->second.size(); ++c)
        gram.set(static_cast<int>(r), static_cast<int>(c),
                 closed.pairing(idx[r], it->second[c]));
    if (rank_kernel(gram).rank != static_cast<int>(idx.size()))
      throw FrobeniusError("degenerate pairing (singular Gram block in degree " +
                           std::to_string(d) + ")");
  }

  FrobeniusAlgebra out(closed.name(), f, m, closed.basis());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : closed.product(i, j)) out.set_product(i, j, k, c);
    for (const auto& [k, c] : closed.differential(i)) out.set_differential(i, k, c);
  }

  // per element x: solve <x,ab> = Σ (-1)^{m|x'|} <x'',a><x',b> for δ(x) = Σ x'⊗x''
  for (int x = 0; x < n; ++x) {
    std::vector<std::pair<int, int>> unknowns;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (closed.degree(j) + closed.degree(k) == m + closed.degree(x))
          unknowns.emplace_back(j, k);
    SparseMatrix sys(n * n, static_cast<int>(unknowns.size()), f);
    SparseVector rhs;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int row = a * n + b;
        for (size_t u = 0; u < unknowns.size(); ++u) {
          auto [j, k] = unknowns[u];
          Scalar coef =
              closed.pairing(k, a) * closed.pairing(j, b) * sign(m * closed.degree(j), f);
          if (!coef.is_zero()) sys.set(row, static_cast<int>(u), coef);
        }
        Scalar target = Scalar::zero(f);
        for (const auto& [t, c] : closed.mul(unit(a), unit(b)))
          target += c * closed.pairing(x, t);
        if (!target.is_zero()) rhs.add(row, target);
      }
    if (rank_kernel(sys).rank != static_cast<int>(unknowns.size()))
      throw FrobeniusError("degenerate pairing (coproduct of " + closed.basis()[x].name +
                           " underdetermined)");
    auto sol = solve(sys, rhs);
    if (!sol) throw FrobeniusError("pairing not invariant (no coproduct solves " +
                                   closed.basis()[x].name + ")");
    for (const auto& [u, c] : sol->entries)
      out.set_coproduct(x, unknowns[u].first, unknowns[u].second, c);
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.set_pairing(i, j, closed.pairing(i, j));
  for (int i = 0; i < n; ++i) out.set_counit(i, closed.pairing(i, 0));
  if (closed.has_counit())
    for (int i = 0; i < n; ++i)
      if (!(closed.counit(i) == out.counit(i)))
        throw FrobeniusError("supplied counit disagrees with <x,1>");
  return out;
}

// ---------------------------------------------------------------------------
// check_propositions

ValidationReport check_propositions(const FrobeniusAlgebra& A) {
  ValidationReport rep;
  rep.subject = A.name();
  rep.level = "propositions";
  const auto& basis = A.basis();
  const int n = A.dim();
  const Field& f = A.field();
  const int m = A.m();
  auto unit = [&](int i) { return Combo{{i, Scalar::one(f)}}; };
  auto check = [&](const std::string& item, bool ok, const std::string& cex) {
    auto it = std::find_if(rep.results.begin(), rep.results.end(),
                           [&](const AxiomResult& r) { return r.axiom == item; });
    if (it == rep.results.end())
      rep.results.push_back({item, ok, ok ? "" : cex});
    else if (it->pass && !ok) {
      it->pass = false;
      it->counterexample = cex;
    }
  };

  if (A.is_commutative()) {
    for (int i = 0; i < n; ++i) {
      Tensor2 lhs = A.cop(i), rhs;
      for (const auto& [j, k, c] : A.coproduct(i))
        tensor2_add(rhs, k, j, c * sign(A.degree(j) * A.degree(k) + m, f));
      check("cocommutativity", lhs == rhs,
            "(" + basis[i].name + "): δ=" + tensor2_str(lhs, basis) + " vs ±τδ=" +
                tensor2_str(rhs, basis));
    }
  } else {
    rep.results.push_back({"cocommutativity", true, "not applicable (product not commutative)"});
  }

  // c(z) = Σ (-1)^{|z''||z'|} z''z' commutes with every x up to (-1)^{(m+|z|)|x|}
  for (int z = 0; z < n; ++z) {
    Combo cz;
    for (const auto& [j, k, c] : A.coproduct(z)) {
      Combo t = A.mul(unit(k), unit(j));
      for (auto& [idx, v] : t) v *= c * sign(A.degree(j) * A.degree(k), f);
      for (const auto& [idx, v] : t) combo_add(cz, idx, v);
    }
    for (int x = 0; x < n; ++x) {
      Combo lhs = A.mul(unit(x), cz);
      Combo rhs = A.mul(cz, unit(x));
      for (auto& [idx, v] : rhs) v *= sign((m + A.degree(z)) * A.degree(x), f);
      check("centrality", lhs == rhs,
            "(z=" + basis[z].name + ", x=" + basis[x].name + "): x·c(z)=" +
                combo_str(lhs, basis) + " vs ±c(z)·x=" + combo_str(rhs, basis));
    }
  }

  if (A.has_counit()) {
    for (int x = 0; x < n; ++x) {
      // direct recovery through δ(x)
      Combo r1, r2;
      for (const auto& [j, k, c] : A.coproduct(x)) {
        combo_add(r1, k, c * A.counit(j) * sign(m * A.degree(j), f));
        combo_add(r2, j, c * A.counit(k) * sign(m * A.degree(j), f));
      }
      check("counit-recovery-direct", r1 == unit(x) && r2 == unit(x),
            "(" + basis[x].name + "): got " + combo_str(r1, basis) + " / " +
                combo_str(r2, basis));
      // recovery through δ(1), m-weighted
      Combo r4;
      for (const auto& [j, k, c] : A.coproduct(0)) {
        Scalar w = Scalar::zero(f);
        for (const auto& [t, v] : A.mul(unit(x), unit(j))) w += v * A.counit(t);
        combo_add(r4, k, c * w * sign(m * A.degree(j), f));
      }
      Combo r5;
      for (const auto& [j, k, c] : A.coproduct(0)) {
        Scalar w = Scalar::zero(f);
        for (const auto& [t, v] : A.mul(unit(k), unit(x))) w += v * A.counit(t);
        combo_add(r5, j, c * w * sign(m * A.degree(j), f));
      }
      check("counit-recovery-unit-m", r4 == unit(x) && r5 == unit(x),
            "(" + basis[x].name + "): got " + combo_str(r4, basis) + " / " +
                combo_str(r5, basis));
      // recovery through δ(1), |1'|-weighted
      Combo r6, r7;
      for (const auto& [j, k, c] : A.coproduct(0)) {
        Scalar w = Scalar::zero(f);
        for (const auto& [t, v] : A.mul(unit(j), unit(x))) w += v * A.counit(t);
        combo_add(r6, k, c * w * sign(A.degree(j), f));
        Scalar w2 = Scalar::zero(f);
        for (const auto& [t, v] : A.mul(unit(x), unit(k))) w2 += v * A.counit(t);
        combo_add(r7, j, c * w2 * sign(A.degree(j), f));
      }
      check("counit-recovery-unit-deg", r6 == unit(x) && r7 == unit(x),
            "(" + basis[x].name + "): got " + combo_str(r6, basis) + " / " +
                combo_str(r7, basis));
    }
  } else {
    rep.results.push_back({"counit-recovery-direct", true, "not applicable (no counit)"});
  }

  if (A.has_counit() && A.has_pairing()) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Scalar viaprod = Scalar::zero(f);
        for (const auto& [t, c] : A.product(i, j)) viaprod += c * A.counit(t);
        check("pairing-counit-round-trip", A.pairing(i, j) == viaprod,
              "(" + basis[i].name + "," + basis[j].name + "): <x,y>=" + A.pairing(i, j).str() +
                  " vs η(xy)=" + viaprod.str());
      }
  }
  return rep;
}

}  // namespace hochbv
