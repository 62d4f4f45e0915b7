#include "hochbv/bv_chain_ops.hpp"

#include <sstream>
#include <stdexcept>

#include "hochbv/detail/bv_identities.hpp"

namespace hochbv {

using namespace detail;

std::string homotopy_str(HomotopyName name) {
  switch (name) {
    case HomotopyName::h_cocom: return "h_cocom";
    case HomotopyName::H_thetaB: return "H_thetaB";
    case HomotopyName::G_coLeibniz: return "G_coLeibniz";
    case HomotopyName::K_com: return "K_com";
    case HomotopyName::H_bullet: return "H_bullet";
    case HomotopyName::H_frobR: return "H_frobR";
    case HomotopyName::G_frobR: return "G_frobR";
    case HomotopyName::S_cobracket: return "S_cobracket";
  }
  throw std::logic_error("unreachable homotopy name");
}

HomotopyName parse_homotopy(const std::string& name) {
  for (HomotopyName h :
       {HomotopyName::h_cocom, HomotopyName::H_thetaB, HomotopyName::G_coLeibniz,
        HomotopyName::K_com, HomotopyName::H_bullet, HomotopyName::H_frobR,
        HomotopyName::G_frobR, HomotopyName::S_cobracket})
    if (homotopy_str(h) == name) return h;
  throw std::invalid_argument("unknown homotopy: " + name);
}

int homotopy_arity(HomotopyName name) {
  switch (name) {
    case HomotopyName::h_cocom:
    case HomotopyName::H_thetaB:
    case HomotopyName::G_coLeibniz:
    case HomotopyName::S_cobracket: return 1;
    default: return 2;
  }
}

namespace {

template <class W>
std::vector<std::pair<W, Scalar>> normalized(Terms<W, Scalar>&& t) {
  normalize_terms(t);
  return std::move(t);
}

}  // namespace

Chain2 theta(const FrobeniusAlgebra& A, const Chain& c) {
  const auto C = compile_scalar(A);
  T2<Scalar> out;
  T2<Scalar> tmp;
  for (const auto& [w, v] : c) {
    tmp.clear();
    op_theta(C, w, tmp);
    for (const auto& [t, s] : tmp) out.emplace_back(t, v * s);
  }
  return normalized(std::move(out));
}

Chain bullet(const FrobeniusAlgebra& A, const Chain& x, const Chain& y) {
  const auto C = compile_scalar(A);
  T1<Scalar> out, tmp;
  for (const auto& [wx, vx] : x)
    for (const auto& [wy, vy] : y) {
      tmp.clear();
      op_bullet(C, wx, wy, tmp);
      const Scalar v = vx * vy;
      for (const auto& [t, s] : tmp) out.emplace_back(t, v * s);
    }
  return normalized(std::move(out));
}

Chain bullet_shifted(const FrobeniusAlgebra& A, const Chain& x, const Chain& y) {
  const auto C = compile_scalar(A);
  T1<Scalar> out, tmp;
  for (const auto& [wx, vx] : x)
    for (const auto& [wy, vy] : y) {
      tmp.clear();
      op_bullet(C, wx, wy, tmp);
      const Scalar v = signed_by(vx * vy, static_cast<long long>(C.m) * C.wdeg(wx));
      for (const auto& [t, s] : tmp) out.emplace_back(t, v * s);
    }
  return normalized(std::move(out));
}

Chain gers_bracket(const FrobeniusAlgebra& A, const Chain& x, const Chain& y) {
  const auto C = compile_scalar(A);
  T1<Scalar> out;
  for (const auto& [wx, vx] : x)
    for (const auto& [wy, vy] : y) eval_gers(C, wx, wy, vx * vy, out);
  return normalized(std::move(out));
}

HomotopyValue apply_homotopy(const FrobeniusAlgebra& A, HomotopyName name,
                             const std::vector<Chain>& inputs) {
  if (static_cast<int>(inputs.size()) != homotopy_arity(name))
    throw std::invalid_argument("homotopy " + homotopy_str(name) + " expects " +
                                std::to_string(homotopy_arity(name)) + " input(s)");
  const auto C = compile_scalar(A);
  if (homotopy_arity(name) == 1) {
    const Chain& c = inputs[0];
    if (name == HomotopyName::G_coLeibniz) {
      T3<Scalar> out, tmp;
      for (const auto& [w, v] : c) {
        tmp.clear();
        op_G_coLeibniz(C, w, tmp);
        for (const auto& [t, s] : tmp) out.emplace_back(t, v * s);
      }
      return normalized(std::move(out));
    }
    T2<Scalar> out, tmp;
    for (const auto& [w, v] : c) {
      tmp.clear();
      switch (name) {
        case HomotopyName::h_cocom: op_h(C, w, tmp); break;
        case HomotopyName::H_thetaB: op_H_thetaB(C, w, tmp); break;
        case HomotopyName::S_cobracket: op_S(C, w, tmp); break;
        default: throw std::logic_error("unreachable");
      }
      for (const auto& [t, s] : tmp) out.emplace_back(t, v * s);
    }
    return normalized(std::move(out));
  }
  const Chain& x = inputs[0];
  const Chain& y = inputs[1];
  if (name == HomotopyName::K_com || name == HomotopyName::H_bullet) {
    T1<Scalar> out, tmp;
    for (const auto& [wx, vx] : x)
      for (const auto& [wy, vy] : y) {
        tmp.clear();
        if (name == HomotopyName::K_com)
          op_K_com(C, wx, wy, tmp);
        else
          op_H_bullet(C, wx, wy, tmp);
        const Scalar v = vx * vy;
        for (const auto& [t, s] : tmp) out.emplace_back(t, v * s);
      }
    return normalized(std::move(out));
  }
  T2<Scalar> out, tmp;
  for (const auto& [wx, vx] : x)
    for (const auto& [wy, vy] : y) {
      tmp.clear();
      if (name == HomotopyName::H_frobR)
        op_H_frobR(C, wx, wy, tmp);
      else
        op_G_frobR(C, wx, wy, tmp);
      const Scalar v = vx * vy;
      for (const auto& [t, s] : tmp) out.emplace_back(t, v * s);
    }
  return normalized(std::move(out));
}

Chain2 chain2_add(const Chain2& a, const Chain2& b) {
  T2<Scalar> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return normalized(std::move(out));
}

Chain3 chain3_add(const Chain3& a, const Chain3& b) {
  T3<Scalar> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return normalized(std::move(out));
}

std::string word2_str(const FrobeniusAlgebra& A, const Word2& w) {
  return word_str(A, w.a) + " (x) " + word_str(A, w.b);
}

std::string word3_str(const FrobeniusAlgebra& A, const Word3& w) {
  return word_str(A, w.a) + " (x) " + word_str(A, w.b) + " (x) " + word_str(A, w.c);
}

namespace {

template <class W, class Str>
std::string tensor_chain_str(const FrobeniusAlgebra& A,
                             const std::vector<std::pair<W, Scalar>>& c, Str str) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, v] : c) {
    if (!first) os << "\n";
    first = false;
    os << v.str() << " " << str(A, w);
  }
  return os.str();
}

}  // namespace

std::string chain2_str(const FrobeniusAlgebra& A, const Chain2& c) {
  return tensor_chain_str(A, c, word2_str);
}

std::string chain3_str(const FrobeniusAlgebra& A, const Chain3& c) {
  return tensor_chain_str(A, c, word3_str);
}

}  // namespace hochbv
