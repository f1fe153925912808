#pragma once

// Defining equation systems of every inverse kind, written once against a
// minimal ring interface so the matrix engine and the finite-ring oracle
// check exactly the same equations.

#include <concepts>

#include "ginv/error.hpp"
#include "ginv/inverse_kind.hpp"

namespace ginv {

template <class A>
concept InvolutiveRing = requires(const A& alg, const typename A::Value& x, unsigned e) {
  { alg.add(x, x) } -> std::convertible_to<typename A::Value>;
  { alg.sub(x, x) } -> std::convertible_to<typename A::Value>;
  { alg.mul(x, x) } -> std::convertible_to<typename A::Value>;
  { alg.star(x) } -> std::convertible_to<typename A::Value>;
  { alg.pow(x, e) } -> std::convertible_to<typename A::Value>;
  { alg.equal(x, x) } -> std::convertible_to<bool>;
};

/// Auxiliary inverses referenced inside a system: a^d and a† for DMP,
/// a† and the chosen a^{WD} for WDMP.
template <class V>
struct SystemAux {
  const V* drazin = nullptr;
  const V* mp = nullptr;
  const V* wd = nullptr;
};

/// Exponent actually used by a kind's system: group and core are pinned to 1.
constexpr unsigned system_exponent(InverseKind kind, unsigned k) {
  if (kind == InverseKind::GROUP || kind == InverseKind::CORE) return 1;
  return k == 0 ? 1 : k;
}

template <InvolutiveRing A>
bool satisfies_system(const A& alg, InverseKind kind, const typename A::Value& a, const typename A::Value& x,
                      unsigned k, const SystemAux<typename A::Value>& aux = {}) {
  using V = typename A::Value;
  const unsigned e = system_exponent(kind, k);
  auto eq = [&](const V& l, const V& r) { return alg.equal(l, r); };
  auto hermitian = [&](const V& v) { return eq(alg.star(v), v); };

  switch (kind) {
    case InverseKind::INNER:
      return eq(alg.mul(alg.mul(a, x), a), a);
    case InverseKind::MP: {
      const V ax = alg.mul(a, x);
      const V xa = alg.mul(x, a);
      return eq(alg.mul(ax, a), a) && eq(alg.mul(xa, x), x) && hermitian(ax) && hermitian(xa);
    }
    case InverseKind::DRAZIN:
    case InverseKind::GROUP: {
      const V ak = alg.pow(a, e);
      const V ax = alg.mul(a, x);
      if (!eq(alg.mul(x, alg.mul(ak, a)), ak)) return false;
      if (!eq(ax, alg.mul(x, a))) return false;
      if (!eq(alg.mul(ax, x), x)) return false;
      return kind != InverseKind::GROUP || eq(alg.mul(ax, a), a);
    }
    case InverseKind::CORE:
    case InverseKind::PSEUDO_CORE: {
      const V ak = alg.pow(a, e);
      const V ax = alg.mul(a, x);
      return hermitian(ax) && eq(alg.mul(ax, x), x) && eq(alg.mul(x, alg.mul(ak, a)), ak);
    }
    case InverseKind::RIGHT_PSEUDO_CORE: {
      const V ak = alg.pow(a, e);
      const V ax = alg.mul(a, x);
      return eq(alg.mul(ax, ak), ak) && eq(alg.mul(ax, x), x) && hermitian(ax);
    }
    case InverseKind::DMP: {
      if (!aux.drazin || !aux.mp) throw Error(ErrorCode::MissingWitness, "DMP system needs a^d and a^mp");
      const V ak = alg.pow(a, e);
      const V xa = alg.mul(x, a);
      return eq(alg.mul(xa, x), x) && eq(xa, alg.mul(*aux.drazin, a)) &&
             eq(alg.mul(ak, x), alg.mul(ak, *aux.mp));
    }
    case InverseKind::WD: {
      const V ak = alg.pow(a, e);
      const V ak1 = alg.mul(ak, a);
      return eq(alg.mul(alg.mul(a, x), a), a) && eq(alg.mul(ak1, x), ak) && eq(alg.mul(x, ak1), ak);
    }
    case InverseKind::WDMP: {
      if (!aux.wd || !aux.mp) throw Error(ErrorCode::MissingWitness, "WDMP system needs a WD witness and a^mp");
      const V ak = alg.pow(a, e);
      const V ay = alg.mul(a, x);
      return eq(alg.mul(x, ay), x) && eq(ay, alg.mul(a, *aux.mp)) && eq(alg.mul(x, ak), alg.mul(*aux.wd, ak));
    }
  }
  return false;
}

}  // namespace ginv
