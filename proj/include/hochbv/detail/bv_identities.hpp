#pragma once

#include "hochbv/detail/bv_kernels.hpp"

// Per-tuple evaluators for the chain-level identities. Each fills raw
// (unnormalized) left/right term lists; the caller normalizes and compares.
// All of them are exact on the given words, so a mismatch pinpoints a
// counterexample without enumerating the codomain.

namespace hochbv::detail {

// common composition helpers -------------------------------------------------

// accumulate op(w) scaled by c
template <class K, class Op, class Out>
void acc(const CompiledAlg<K>& A, Op op, const Word& w, const K& c, Out& out) {
  Out tmp;
  op(A, w, tmp);
  for (auto& [t, v] : tmp) out.emplace_back(t, c * v);
}

// (theta (x) 1): apply theta to the first factor of each 2-tensor term
template <class K>
void theta_first(const CompiledAlg<K>& A, const T2<K>& in, T3<K>& out) {
  T2<K> tmp;
  for (const auto& [t, c] : in) {
    tmp.clear();
    op_theta(A, t.a, tmp);
    for (const auto& [u, v] : tmp) out.emplace_back(Word3{u.a, u.b, t.b}, c * v);
  }
}

// (1 (x) tau) on 3-tensors: (p,q,v) -> (p,v,q) with (-1)^{|q||v|}
template <class K>
void tau23(const CompiledAlg<K>& A, const T3<K>& in, T3<K>& out) {
  for (const auto& [t, c] : in)
    out.emplace_back(Word3{t.a, t.c, t.b},
                     signed_by(c, static_cast<long long>(A.wdeg(t.b)) * A.wdeg(t.c)));
}

// (f (x) 1) for a 2-tensor-valued f applied to the first factor (no Koszul sign)
template <class K, class Op>
void op2_first(const CompiledAlg<K>& A, Op op, const T2<K>& in, T3<K>& out) {
  T2<K> tmp;
  for (const auto& [t, c] : in) {
    tmp.clear();
    op(A, t.a, tmp);
    for (const auto& [u, v] : tmp) out.emplace_back(Word3{u.a, u.b, t.b}, c * v);
  }
}

// (1 (x) f) for a 2-tensor-valued f of odd/even degree fdeg
template <class K, class Op>
void op2_second(const CompiledAlg<K>& A, Op op, int fdeg, const T2<K>& in,
                T3<K>& out) {
  T2<K> tmp;
  for (const auto& [t, c] : in) {
    tmp.clear();
    op(A, t.b, tmp);
    const K cs = signed_by(c, static_cast<long long>(fdeg) * A.wdeg(t.a));
    for (const auto& [u, v] : tmp) out.emplace_back(Word3{t.a, u.a, u.b}, cs * v);
  }
}

template <class K>
void tau_h(const CompiledAlg<K>& A, const Word& w, T2<K>& out) {
  T2<K> tmp;
  op_h(A, w, tmp);
  op_tau(A, tmp, out);
}

// identities -----------------------------------------------------------------

// theta D = (-1)^m (D (x) 1 + 1 (x) D) theta
template <class K>
void eval_I1(const CompiledAlg<K>& A, const Word& w, T2<K>& L, T2<K>& R) {
  T1<K> dw;
  op_D(A, w, dw);
  for (const auto& [u, c] : dw) acc(A, op_theta<K>, u, c, L);
  T2<K> tw;
  op_theta(A, w, tw);
  op_D2(A, tw, R);
  scale_terms(R, A.m);
}

// (D (x) 1 + 1 (x) D) h - (-1)^{m+1} h D = (-1)^m tau theta - theta
template <class K>
void eval_I2(const CompiledAlg<K>& A, const Word& w, T2<K>& L, T2<K>& R) {
  T2<K> hw;
  op_h(A, w, hw);
  op_D2(A, hw, L);
  T1<K> dw;
  op_D(A, w, dw);
  for (const auto& [u, c] : dw)
    acc(A, op_h<K>, u, signed_by(c, static_cast<long long>(A.m)), L);
  T2<K> tw;
  op_theta(A, w, tw);
  op_tau(A, tw, R);
  scale_terms(R, A.m);
  for (const auto& [t, c] : tw) R.emplace_back(t, -c);
}

// D(Hw) + eps (-1)^m H(Dw) = h(w) - thetaB_2(w) + (-1)^m (B (x) 1) theta(w)
template <class K>
void eval_I3(const CompiledAlg<K>& A, const Word& w, T2<K>& L, T2<K>& R) {
  T2<K> Hw;
  op_H_thetaB(A, w, Hw);
  op_D2(A, Hw, L);
  T1<K> dw;
  op_D(A, w, dw);
  const long long e = A.m + (kI3DSign < 0 ? 1 : 0);
  for (const auto& [u, c] : dw) acc(A, op_H_thetaB<K>, u, signed_by(c, e), L);

  // parity codes: 0 -> +, 1 -> -, 2 -> (-1)^m, 3 -> (-1)^{m+1}
  const auto parity = [&](int code) -> long long {
    return code == 0 ? 0 : code == 1 ? 1 : code == 2 ? A.m : A.m + 1;
  };
  op_h(A, w, R);
  T2<K> b1, b2;
  op_thetaB_split(A, w, b1, b2);
  const long long b2e = parity(kI3B2Exp);
  for (const auto& [t, c] : b2) R.emplace_back(t, signed_by(c, b2e));
  T2<K> tw;
  op_theta(A, w, tw);
  T1<K> tmp;
  const long long be = parity(kI3BExp);
  for (const auto& [t, c] : tw) {
    tmp.clear();
    op_B(A, t.a, tmp);
    const K cs = signed_by(c, be);
    for (const auto& [u, v] : tmp) R.emplace_back(Word2{u, t.b}, cs * v);
  }
}

// G(Dw) + eps (-1)^m D_3(Gw)
//   = (theta (x) 1) tau h - (1 (x) tau)(tau h (x) 1) theta - (1 (x) tau h) theta
template <class K>
void eval_I4(const CompiledAlg<K>& A, const Word& w, T3<K>& L, T3<K>& R) {
  T1<K> dw;
  op_D(A, w, dw);
  for (const auto& [u, c] : dw) acc(A, op_G_coLeibniz<K>, u, c, L);
  T3<K> Gw;
  op_G_coLeibniz(A, w, Gw);
  T3<K> dG;
  op_D3(A, Gw, dG);
  const long long e = A.m + (kI4DSign < 0 ? 1 : 0);
  for (const auto& [t, c] : dG) L.emplace_back(t, signed_by(c, e));

  T2<K> th;
  tau_h(A, w, th);
  theta_first(A, th, R);
  T2<K> tw;
  op_theta(A, w, tw);
  T3<K> t3;
  op2_first(A, tau_h<K>, tw, t3);
  T3<K> t3b;
  tau23(A, t3, t3b);
  for (const auto& [t, c] : t3b) R.emplace_back(t, -c);
  t3.clear();
  op2_second(A, tau_h<K>, A.m - 1, tw, t3);
  for (const auto& [t, c] : t3) R.emplace_back(t, -c);
}

// strict form: (theta (x) 1) h = (1 (x) tau)(h (x) 1) theta + (1 (x) h) theta
template <class K>
void eval_I4_strict(const CompiledAlg<K>& A, const Word& w, T3<K>& L, T3<K>& R) {
  T2<K> hw;
  op_h(A, w, hw);
  theta_first(A, hw, L);
  T2<K> tw;
  op_theta(A, w, tw);
  T3<K> t3;
  op2_first(A, op_h<K>, tw, t3);
  tau23(A, t3, R);
  op2_second(A, op_h<K>, A.m - 1, tw, R);
}

// chain map: D(x . y) = (-1)^m ((Dx) . y + (-1)^{|x|} x . Dy)
template <class K>
void eval_I5_chain(const CompiledAlg<K>& A, const Word& x, const Word& y, T1<K>& L,
                   T1<K>& R) {
  T1<K> xy;
  op_bullet(A, x, y, xy);
  for (const auto& [u, c] : xy) acc(A, op_D<K>, u, c, L);
  T1<K> d;
  op_D(A, x, d);
  T1<K> tmp;
  for (const auto& [u, c] : d) {
    tmp.clear();
    op_bullet(A, u, y, tmp);
    const K cs = signed_by(c, static_cast<long long>(A.m));
    for (const auto& [t, v] : tmp) R.emplace_back(t, cs * v);
  }
  d.clear();
  op_D(A, y, d);
  for (const auto& [u, c] : d) {
    tmp.clear();
    op_bullet(A, x, u, tmp);
    const K cs = signed_by(c, static_cast<long long>(A.m) + A.wdeg(x));
    for (const auto& [t, v] : tmp) R.emplace_back(t, cs * v);
  }
  if (kI5RhsSign < 0) scale_terms1(R, 1);
}

// associativity: x . (y . z) = (-1)^{m|x| + m} (x . y) . z
template <class K>
void eval_I5_assoc(const CompiledAlg<K>& A, const Word& x, const Word& y,
                   const Word& z, T1<K>& L, T1<K>& R) {
  T1<K> yz;
  op_bullet(A, y, z, yz);
  T1<K> tmp;
  for (const auto& [u, c] : yz) {
    tmp.clear();
    op_bullet(A, x, u, tmp);
    for (const auto& [t, v] : tmp) L.emplace_back(t, c * v);
  }
  T1<K> xy;
  op_bullet(A, x, y, xy);
  const long long e = static_cast<long long>(A.m) * A.wdeg(x) + A.m;
  for (const auto& [u, c] : xy) {
    tmp.clear();
    op_bullet(A, u, z, tmp);
    const K cs = signed_by(c, e);
    for (const auto& [t, v] : tmp) R.emplace_back(t, cs * v);
  }
}

// D K(x,y) - (-1)^{m-1}(K(Dx,y) + (-1)^{|x|} K(x,Dy))
//   = x . y - (-1)^{|x||y| + m} y . x
template <class K>
void eval_I6(const CompiledAlg<K>& A, const Word& x, const Word& y, T1<K>& L,
             T1<K>& R) {
  T1<K> kxy;
  op_K_com(A, x, y, kxy);
  for (const auto& [u, c] : kxy) acc(A, op_D<K>, u, c, L);
  T1<K> d, tmp;
  op_D(A, x, d);
  for (const auto& [u, c] : d) {
    tmp.clear();
    op_K_com(A, u, y, tmp);
    const K cs = signed_by(c, static_cast<long long>(A.m));  // -(-1)^{m-1}
    for (const auto& [t, v] : tmp) L.emplace_back(t, cs * v);
  }
  d.clear();
  op_D(A, y, d);
  for (const auto& [u, c] : d) {
    tmp.clear();
    op_K_com(A, x, u, tmp);
    const K cs = signed_by(c, static_cast<long long>(A.m) + A.wdeg(x));
    for (const auto& [t, v] : tmp) L.emplace_back(t, cs * v);
  }
  op_bullet(A, x, y, R);
  tmp.clear();
  op_bullet(A, y, x, tmp);
  const long long e = static_cast<long long>(A.wdeg(x)) * A.wdeg(y) + A.m + 1;
  for (const auto& [t, v] : tmp) R.emplace_back(t, signed_by(v, e));
}

// homotopy P = H_bullet + (-1)^{1+m} K(1 (x) B); bracket deviation:
// D P - eps (-1)^m P D_tensor = {x,y} - B(x . y) - (-1)^{m+|x|} x . By
template <class K>
void eval_P(const CompiledAlg<K>& A, const Word& x, const Word& y, const K& c,
            T1<K>& out) {
  T1<K> tmp;
  op_H_bullet(A, x, y, tmp);
  for (const auto& [t, v] : tmp) out.emplace_back(t, c * v);
  tmp.clear();
  op_B(A, y, tmp);
  T1<K> tmp2;
  const K cs = signed_by(c, static_cast<long long>(1 + A.m) + A.wdeg(x));
  for (const auto& [u, v] : tmp) {
    tmp2.clear();
    op_K_com(A, x, u, tmp2);
    for (const auto& [t, v2] : tmp2) out.emplace_back(t, cs * v * v2);
  }
}

template <class K>
void eval_gers(const CompiledAlg<K>& A, const Word& x, const Word& y, const K& c,
               T1<K>& out) {
  T1<K> tmp;
  op_K_com(A, x, y, tmp);
  for (const auto& [t, v] : tmp) out.emplace_back(t, c * v);
  tmp.clear();
  op_K_com(A, y, x, tmp);
  const K cs =
      signed_by(c, static_cast<long long>(A.wdeg(x)) * A.wdeg(y) + A.m);
  for (const auto& [t, v] : tmp) out.emplace_back(t, cs * v);
}

template <class K>
void eval_I7(const CompiledAlg<K>& A, const Word& x, const Word& y, T1<K>& L,
             T1<K>& R) {
  T1<K> p;
  eval_P(A, x, y, A.one, p);
  for (const auto& [u, c] : p) acc(A, op_D<K>, u, c, L);
  T1<K> d;
  op_D(A, x, d);
  const long long e = A.m + (kI7DSign < 0 ? 0 : 1);  // -eps(-1)^m
  for (const auto& [u, c] : d) eval_P(A, u, y, signed_by(c, e), L);
  d.clear();
  op_D(A, y, d);
  for (const auto& [u, c] : d)
    eval_P(A, x, u, signed_by(c, e + A.wdeg(x)), L);

  eval_gers(A, x, y, A.one, R);
  T1<K> xy;
  op_bullet(A, x, y, xy);
  T1<K> tmp;
  for (const auto& [u, c] : xy) {
    tmp.clear();
    op_B(A, u, tmp);
    for (const auto& [t, v] : tmp) R.emplace_back(t, -(c * v));
  }
  d.clear();
  op_B(A, y, d);
  const K cs = signed_by(A.one, static_cast<long long>(A.m) + A.wdeg(x) + 1);
  for (const auto& [u, c] : d) {
    tmp.clear();
    op_bullet(A, x, u, tmp);
    for (const auto& [t, v] : tmp) R.emplace_back(t, cs * c * v);
  }
  if (kI7RhsSign < 0) scale_terms1(R, 1);
}

// K(x, y . z) = (-1)^{(m-1+|x|)|y|} y . K(x,z)
template <class K>
void eval_I8a(const CompiledAlg<K>& A, const Word& x, const Word& y, const Word& z,
              T1<K>& L, T1<K>& R) {
  T1<K> yz;
  op_bullet(A, y, z, yz);
  T1<K> tmp;
  for (const auto& [u, c] : yz) {
    tmp.clear();
    op_K_com(A, x, u, tmp);
    for (const auto& [t, v] : tmp) L.emplace_back(t, c * v);
  }
  T1<K> kxz;
  op_K_com(A, x, z, kxz);
  const long long e =
      static_cast<long long>(A.m - 1 + A.wdeg(x)) * A.wdeg(y);
  for (const auto& [u, c] : kxz) {
    tmp.clear();
    op_bullet(A, y, u, tmp);
    const K cs = signed_by(c, e);
    for (const auto& [t, v] : tmp) R.emplace_back(t, cs * v);
  }
}

// K(y . z, x) = (-1)^{(m-1+|x|)|y| + |x||y| + m} y . K(z,x)
template <class K>
void eval_I8b(const CompiledAlg<K>& A, const Word& x, const Word& y, const Word& z,
              T1<K>& L, T1<K>& R) {
  T1<K> yz;
  op_bullet(A, y, z, yz);
  T1<K> tmp;
  for (const auto& [u, c] : yz) {
    tmp.clear();
    op_K_com(A, u, x, tmp);
    for (const auto& [t, v] : tmp) L.emplace_back(t, c * v);
  }
  T1<K> kzx;
  op_K_com(A, z, x, kzx);
  const long long e =
      static_cast<long long>(A.m - 1 + A.wdeg(x)) * A.wdeg(y) +
      static_cast<long long>(A.wdeg(x)) * A.wdeg(y) + A.m;
  for (const auto& [u, c] : kzx) {
    tmp.clear();
    op_bullet(A, y, u, tmp);
    const K cs = signed_by(c, e);
    for (const auto& [t, v] : tmp) R.emplace_back(t, cs * v);
  }
}

// {x, y . z} = {x,y} . z + (-1)^{(m-1+|x|)|y|} y . {x,z}
template <class K>
void eval_I8c(const CompiledAlg<K>& A, const Word& x, const Word& y, const Word& z,
              T1<K>& L, T1<K>& R) {
  T1<K> yz;
  op_bullet(A, y, z, yz);
  for (const auto& [u, c] : yz) eval_gers(A, x, u, c, L);
  T1<K> br;
  eval_gers(A, x, y, A.one, br);
  T1<K> tmp;
  for (const auto& [u, c] : br) {
    tmp.clear();
    op_bullet(A, u, z, tmp);
    for (const auto& [t, v] : tmp) R.emplace_back(t, c * v);
  }
  br.clear();
  eval_gers(A, x, z, A.one, br);
  const long long e =
      static_cast<long long>(A.m - 1 + A.wdeg(x)) * A.wdeg(y);
  for (const auto& [u, c] : br) {
    tmp.clear();
    op_bullet(A, y, u, tmp);
    const K cs = signed_by(c, e);
    for (const auto& [t, v] : tmp) R.emplace_back(t, cs * v);
  }
}

// right-module deviation: with H = H_frobR (x has slots) or G_frobR (slot-free x),
// D_2 H(x,y) - eps (H(Dx,y) + (-1)^{|x|} H(x,Dy))
//   = (-1)^m (1 (x) .)(theta (x) 1)(x,y) - theta(x . y)
template <class K>
void eval_I9(const CompiledAlg<K>& A, const Word& x, const Word& y, T2<K>& L,
             T2<K>& R) {
  const bool slotfree = x.len == 0;
  auto H = [&](const Word& u, const Word& v, const K& c, T2<K>& out) {
    T2<K> tmp;
    if (slotfree) {
      op_G_frobR(A, u, v, tmp);
    } else {
      op_H_frobR(A, u, v, tmp);
      op_H_frobR_tail(A, u, v, tmp);
    }
    for (const auto& [t, cv] : tmp) out.emplace_back(t, c * cv);
  };
  T2<K> hxy;
  H(x, y, A.one, hxy);
  op_D2(A, hxy, L);
  T1<K> d;
  op_D(A, x, d);
  const long long e = kI9DSign < 0 ? 0 : 1;  // -eps
  for (const auto& [u, c] : d) H(u, y, signed_by(c, e), L);
  d.clear();
  op_D(A, y, d);
  for (const auto& [u, c] : d) H(x, u, signed_by(c, e + A.wdeg(x)), L);

  T2<K> tx;
  op_theta(A, x, tx);
  T1<K> tmp;
  for (const auto& [t, c] : tx) {
    tmp.clear();
    op_bullet(A, t.b, y, tmp);
    const K cs =
        signed_by(c, static_cast<long long>(A.m) * (1 + A.wdeg(t.a)));
    for (const auto& [u, v] : tmp) R.emplace_back(Word2{t.a, u}, cs * v);
  }
  if (kI9RhsSign < 0) scale_terms(R, 1);
  tmp.clear();
  op_bullet(A, x, y, tmp);
  T2<K> t2;
  for (const auto& [u, c] : tmp) {
    t2.clear();
    op_theta(A, u, t2);
    const K cs = signed_by(A.one, kI9RhsSign < 0 ? 1 : 0);
    for (const auto& [t, v] : t2) L.emplace_back(t, cs * c * v);  // -theta(x.y) on L
  }
}

// strict left-module law: (-1)^m theta(x . y) = (. (x) 1)(1 (x) theta)(x,y)
template <class K>
void eval_I10(const CompiledAlg<K>& A, const Word& x, const Word& y, T2<K>& L,
              T2<K>& R) {
  T1<K> xy;
  op_bullet(A, x, y, xy);
  T2<K> t2;
  for (const auto& [u, c] : xy) {
    t2.clear();
    op_theta(A, u, t2);
    const K cs = signed_by(c, static_cast<long long>(A.m));
    for (const auto& [t, v] : t2) L.emplace_back(t, cs * v);
  }
  T2<K> ty;
  op_theta(A, y, ty);
  T1<K> tmp;
  const long long e =
      static_cast<long long>(A.m) * A.wdeg(x) + (kI10RhsSign < 0 ? 1 : 0);
  for (const auto& [t, c] : ty) {
    tmp.clear();
    op_bullet(A, x, t.a, tmp);
    const K cs = signed_by(c, e);
    for (const auto& [u, v] : tmp) R.emplace_back(Word2{u, t.b}, cs * v);
  }
}

}  // namespace hochbv::detail
