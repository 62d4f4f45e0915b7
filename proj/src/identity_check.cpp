#include "hochbv/identity_check.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "hochbv/bv_chain_ops.hpp"
#include "hochbv/detail/bv_identities.hpp"
#include "hochbv/detail/smallrat.hpp"
#include "hochbv/relative_bv.hpp"

namespace hochbv {

using namespace detail;

std::string identity_str(IdentityName id) {
  switch (id) {
    case IdentityName::I1: return "I1";
    case IdentityName::I2: return "I2";
    case IdentityName::I3: return "I3";
    case IdentityName::I4: return "I4";
    case IdentityName::I5: return "I5";
    case IdentityName::I6: return "I6";
    case IdentityName::I7: return "I7";
    case IdentityName::I8: return "I8";
    case IdentityName::I9: return "I9";
    case IdentityName::I10: return "I10";
    case IdentityName::R1: return "R1";
    case IdentityName::R2: return "R2";
    case IdentityName::R3: return "R3";
    case IdentityName::R4: return "R4";
    case IdentityName::R5: return "R5";
  }
  throw std::logic_error("unreachable identity name");
}

IdentityName parse_identity(const std::string& id) {
  for (IdentityName n : all_identities())
    if (identity_str(n) == id) return n;
  throw std::invalid_argument("unknown identity: " + id);
}

std::vector<IdentityName> bv_identities() {
  return {IdentityName::I1, IdentityName::I2, IdentityName::I3, IdentityName::I4,
          IdentityName::I5, IdentityName::I6, IdentityName::I7, IdentityName::I8,
          IdentityName::I9, IdentityName::I10};
}

std::vector<IdentityName> relative_identities() {
  return {IdentityName::R1, IdentityName::R2, IdentityName::R3, IdentityName::R4,
          IdentityName::R5};
}

std::vector<IdentityName> all_identities() {
  auto v = bv_identities();
  for (IdentityName n : relative_identities()) v.push_back(n);
  return v;
}

nlohmann::ordered_json IdentityReport::to_json() const {
  nlohmann::ordered_json j;
  j["identity"] = identity;
  j["subject"] = subject;
  nlohmann::ordered_json w;
  w["max_length"] = max_length;
  if (max_degree)
    w["max_degree"] = *max_degree;
  else
    w["max_degree"] = nullptr;
  j["window"] = w;
  j["status"] = status;
  j["tuples_checked"] = tuples_checked;
  if (counterexample) j["counterexample"] = *counterexample;
  return j;
}

namespace {

struct Phase {
  int arity;
  int phase;
  const char* label;  // empty when the identity has a single phase
};

std::vector<Phase> plan_for(IdentityName id) {
  switch (id) {
    case IdentityName::I1:
    case IdentityName::I2:
    case IdentityName::I3: return {{1, 0, ""}};
    case IdentityName::I4: return {{1, 0, "homotopy"}, {1, 1, "strict"}};
    case IdentityName::I5: return {{2, 0, "chain-map"}, {3, 1, "associativity"}};
    case IdentityName::I6:
    case IdentityName::I7: return {{2, 0, ""}};
    case IdentityName::I8: return {{3, 0, "K-left"}, {3, 1, "K-right"}, {3, 2, "bracket"}};
    case IdentityName::I9:
    case IdentityName::I10: return {{2, 0, ""}};
    default: throw std::logic_error("plan_for: relative identity");
  }
}

template <class W, class K>
bool eq_terms(Terms<W, K>& L, Terms<W, K>& R) {
  normalize_terms(L);
  normalize_terms(R);
  return L == R;
}

template <class K>
bool run_tuple(const CompiledAlg<K>& C, IdentityName id, int phase, const Word* t) {
  switch (id) {
    case IdentityName::I1: {
      T2<K> L, R;
      eval_I1(C, t[0], L, R);
      return eq_terms(L, R);
    }
    case IdentityName::I2: {
      T2<K> L, R;
      eval_I2(C, t[0], L, R);
      return eq_terms(L, R);
    }
    case IdentityName::I3: {
      T2<K> L, R;
      eval_I3(C, t[0], L, R);
      return eq_terms(L, R);
    }
    case IdentityName::I4: {
      T3<K> L, R;
      if (phase == 0)
        eval_I4(C, t[0], L, R);
      else
        eval_I4_strict(C, t[0], L, R);
      return eq_terms(L, R);
    }
    case IdentityName::I5: {
      T1<K> L, R;
      if (phase == 0)
        eval_I5_chain(C, t[0], t[1], L, R);
      else
        eval_I5_assoc(C, t[0], t[1], t[2], L, R);
      return eq_terms(L, R);
    }
    case IdentityName::I6: {
      T1<K> L, R;
      eval_I6(C, t[0], t[1], L, R);
      return eq_terms(L, R);
    }
    case IdentityName::I7: {
      T1<K> L, R;
      eval_I7(C, t[0], t[1], L, R);
      return eq_terms(L, R);
    }
    case IdentityName::I8: {
      T1<K> L, R;
      if (phase == 0)
        eval_I8a(C, t[0], t[1], t[2], L, R);
      else if (phase == 1)
        eval_I8b(C, t[0], t[1], t[2], L, R);
      else
        eval_I8c(C, t[0], t[1], t[2], L, R);
      return eq_terms(L, R);
    }
    case IdentityName::I9: {
      T2<K> L, R;
      eval_I9(C, t[0], t[1], L, R);
      return eq_terms(L, R);
    }
    case IdentityName::I10: {
      T2<K> L, R;
      eval_I10(C, t[0], t[1], L, R);
      return eq_terms(L, R);
    }
    default: throw std::logic_error("run_tuple: relative identity");
  }
}

template <class W>
std::string short_terms(const FrobeniusAlgebra& A, Terms<W, Scalar>& v) {
  normalize_terms(v);
  if (v.empty()) return "0";
  std::ostringstream os;
  const size_t shown = v.size() < 8 ? v.size() : 8;
  for (size_t i = 0; i < shown; ++i) {
    if (i) os << " ; ";
    os << v[i].second.str() << " ";
    if constexpr (std::is_same_v<W, Word>)
      os << word_str(A, v[i].first);
    else if constexpr (std::is_same_v<W, Word2>)
      os << word2_str(A, v[i].first);
    else
      os << word3_str(A, v[i].first);
  }
  if (v.size() > shown) os << " ; ... (" << v.size() << " terms)";
  return os.str();
}

std::pair<std::string, std::string> render_sides(const FrobeniusAlgebra& A,
                                                 const CompiledAlg<Scalar>& C,
                                                 IdentityName id, int phase,
                                                 const Word* t) {
  switch (id) {
    case IdentityName::I1:
    case IdentityName::I2:
    case IdentityName::I3: {
      T2<Scalar> L, R;
      if (id == IdentityName::I1)
        eval_I1(C, t[0], L, R);
      else if (id == IdentityName::I2)
        eval_I2(C, t[0], L, R);
      else
        eval_I3(C, t[0], L, R);
      return {short_terms(A, L), short_terms(A, R)};
    }
    case IdentityName::I4: {
      T3<Scalar> L, R;
      if (phase == 0)
        eval_I4(C, t[0], L, R);
      else
        eval_I4_strict(C, t[0], L, R);
      return {short_terms(A, L), short_terms(A, R)};
    }
    case IdentityName::I5: {
      T1<Scalar> L, R;
      if (phase == 0)
        eval_I5_chain(C, t[0], t[1], L, R);
      else
        eval_I5_assoc(C, t[0], t[1], t[2], L, R);
      return {short_terms(A, L), short_terms(A, R)};
    }
    case IdentityName::I6:
    case IdentityName::I7: {
      T1<Scalar> L, R;
      if (id == IdentityName::I6)
        eval_I6(C, t[0], t[1], L, R);
      else
        eval_I7(C, t[0], t[1], L, R);
      return {short_terms(A, L), short_terms(A, R)};
    }
    case IdentityName::I8: {
      T1<Scalar> L, R;
      if (phase == 0)
        eval_I8a(C, t[0], t[1], t[2], L, R);
      else if (phase == 1)
        eval_I8b(C, t[0], t[1], t[2], L, R);
      else
        eval_I8c(C, t[0], t[1], t[2], L, R);
      return {short_terms(A, L), short_terms(A, R)};
    }
    case IdentityName::I9:
    case IdentityName::I10: {
      T2<Scalar> L, R;
      if (id == IdentityName::I9)
        eval_I9(C, t[0], t[1], L, R);
      else
        eval_I10(C, t[0], t[1], L, R);
      return {short_terms(A, L), short_terms(A, R)};
    }
    default: throw std::logic_error("render_sides: relative identity");
  }
}

struct FoundFail {
  int phase_index;
  std::array<Word, 3> tuple;
};

template <class Check>
std::optional<FoundFail> scan_window(IdentityName id, const std::vector<Word>& words,
                                     Check&& check1, long long& tuples) {
  const auto phases = plan_for(id);
  std::array<Word, 3> t{};
  for (size_t pi = 0; pi < phases.size(); ++pi) {
    const Phase& ph = phases[pi];
    if (ph.arity == 1) {
      for (const Word& w : words) {
        t[0] = w;
        ++tuples;
        if (!check1(ph.phase, t.data())) return FoundFail{static_cast<int>(pi), t};
      }
    } else if (ph.arity == 2) {
      for (const Word& x : words)
        for (const Word& y : words) {
          t[0] = x;
          t[1] = y;
          ++tuples;
          if (!check1(ph.phase, t.data())) return FoundFail{static_cast<int>(pi), t};
        }
    } else {
      for (const Word& x : words)
        for (const Word& y : words)
          for (const Word& z : words) {
            t[0] = x;
            t[1] = y;
            t[2] = z;
            ++tuples;
            if (!check1(ph.phase, t.data()))
              return FoundFail{static_cast<int>(pi), t};
          }
    }
  }
  return std::nullopt;
}

}  // namespace

IdentityReport check_identity(const FrobeniusAlgebra& A, IdentityName id,
                              const Truncation& t) {
  // A closed description (pairing, no coproduct table) is checked against the
  // open structure its pairing determines.
  if (A.has_pairing()) {
    bool no_cop = true;
    for (int i = 0; i < A.dim() && no_cop; ++i) no_cop = A.coproduct(i).empty();
    if (no_cop) return check_identity(derive_open_from_closed(A), id, t);
  }
  switch (id) {
    case IdentityName::R1:
    case IdentityName::R2:
    case IdentityName::R3:
    case IdentityName::R4:
    case IdentityName::R5: return check_relative_identity(A, id, t);
    default: break;
  }
  IdentityReport rep;
  rep.identity = identity_str(id);
  rep.subject = A.name();
  rep.max_length = t.max_len;
  rep.max_degree = t.max_degree;
  rep.status = "pass";

  const auto words = enumerate_words(A, t);
  std::optional<FoundFail> fail;
  try {
    if (A.field().kind == Field::Kind::rational) {
      const auto CR = compile_rat64(A);
      std::optional<CompiledAlg<Scalar>> CS;
      fail = scan_window(
          id, words,
          [&](int phase, const Word* tu) {
            try {
              return run_tuple(CR, id, phase, tu);
            } catch (const Rat64Overflow&) {
              if (!CS) CS = compile_scalar(A);
              return run_tuple(*CS, id, phase, tu);
            }
          },
          rep.tuples_checked);
    } else {
      const auto CF = compile_fpk(A);
      fail = scan_window(
          id, words,
          [&](int phase, const Word* tu) { return run_tuple(CF, id, phase, tu); },
          rep.tuples_checked);
    }
  } catch (const TruncationError&) {
    rep.status = "needs-larger-window";
    return rep;
  }
  if (fail) {
    rep.status = "fail";
    const auto phases = plan_for(id);
    const Phase& ph = phases[static_cast<size_t>(fail->phase_index)];
    const auto CS = compile_scalar(A);
    auto [lhs, rhs] = render_sides(A, CS, id, ph.phase, fail->tuple.data());
    std::ostringstream os;
    if (ph.label[0] != '\0') os << "[" << ph.label << "] ";
    static constexpr const char* kNames[3] = {"x", "y", "z"};
    for (int i = 0; i < ph.arity; ++i) {
      if (i) os << ", ";
      os << kNames[i] << " = " << word_str(A, fail->tuple[static_cast<size_t>(i)]);
    }
    os << " : lhs = " << lhs << " ; rhs = " << rhs;
    rep.counterexample = os.str();
  }
  return rep;
}

}  // namespace hochbv
