#include "ginv/inverses.hpp"

#include <random>
#include <string>

#include "ginv/error.hpp"
#include "ginv/systems.hpp"

namespace ginv {

namespace {

void require_square(const Matrix& a) {
  if (!a.square()) throw Error(ErrorCode::DimensionMismatch, "generalized inverses need a square matrix");
}

// Every construction below is untrusted; this is the only way a value leaves
// the engine.
InverseResult gate(InverseKind kind, const Matrix& a, Matrix value, unsigned k, const Matrix* witness = nullptr) {
  if (!verify_definition(kind, a, value, k, witness)) {
    throw Error(ErrorCode::VerificationFailed,
                std::string(kind_tag(kind)) + " construction failed its system for " + a.to_string());
  }
  value.set_field(a.field());
  InverseResult r;
  r.kind = kind;
  r.value = std::move(value);
  r.k_used = k;
  if (witness) r.witness_wd = *witness;
  r.verified = true;
  return r;
}

Matrix mp_value(const Matrix& a) {
  if (a.is_zero()) return Matrix::zero(a.n(), a.field());
  RankFactorization fg = rank_factorization(a);
  const Matrix fs = fg.f.conj_transpose();
  const Matrix gs = fg.g.conj_transpose();
  return gs * inverse(fs * a * gs) * fs;
}

Matrix drazin_value(const Matrix& a, unsigned k) {
  const Matrix ak = a.pow(k);
  return ak * mp_value(a.pow(2 * k + 1)) * ak;
}

Matrix wd_from_inner(const Matrix& a, const Matrix& d, const Matrix& inner_of_nilpotent) {
  const Matrix one = Matrix::identity(a.n(), a.field());
  return d + (one - a * d) * inner_of_nilpotent * (one - d * a);
}

}  // namespace

bool verify_definition(InverseKind kind, const Matrix& a, const Matrix& x, unsigned k, const Matrix* witness) {
  require_square(a);
  if (x.rows() != a.n() || x.cols() != a.n()) throw Error(ErrorCode::DimensionMismatch, "candidate inverse shape");
  MatrixAlgebra alg;
  SystemAux<Matrix> aux;
  Matrix d;
  Matrix mp;
  if (kind == InverseKind::DMP) {
    d = drazin_value(a, positive_index(a));
    mp = mp_value(a);
    aux.drazin = &d;
    aux.mp = &mp;
  } else if (kind == InverseKind::WDMP) {
    if (!witness) throw Error(ErrorCode::MissingWitness, "WDMP verification needs the WD witness");
    if (witness->rows() != a.n() || witness->cols() != a.n()) {
      throw Error(ErrorCode::DimensionMismatch, "WD witness shape");
    }
    mp = mp_value(a);
    aux.mp = &mp;
    aux.wd = witness;
  }
  return satisfies_system(alg, kind, a, x, k, aux);
}

InverseResult mp_inverse(const Matrix& a) {
  require_square(a);
  return gate(InverseKind::MP, a, mp_value(a), positive_index(a));
}

InverseResult inner_inverse(const Matrix& a) {
  require_square(a);
  return gate(InverseKind::INNER, a, mp_value(a), positive_index(a));
}

InverseResult drazin_inverse(const Matrix& a) {
  require_square(a);
  const unsigned k = positive_index(a);
  return gate(InverseKind::DRAZIN, a, drazin_value(a, k), k);
}

InverseResult group_inverse(const Matrix& a) {
  require_square(a);
  const unsigned index = drazin_index(a).index;
  if (index > 1) throw Error(ErrorCode::IndexTooLarge, "group inverse needs index <= 1, got " + std::to_string(index));
  return gate(InverseKind::GROUP, a, drazin_value(a, 1), 1);
}

InverseResult core_inverse(const Matrix& a) {
  require_square(a);
  const unsigned index = drazin_index(a).index;
  if (index > 1) throw Error(ErrorCode::IndexTooLarge, "core inverse needs index <= 1, got " + std::to_string(index));
  return gate(InverseKind::CORE, a, drazin_value(a, 1) * a * mp_value(a), 1);
}

InverseResult pseudo_core_inverse(const Matrix& a) {
  require_square(a);
  const unsigned k = positive_index(a);
  const Matrix ak = a.pow(k);
  return gate(InverseKind::PSEUDO_CORE, a, drazin_value(a, k) * ak * mp_value(ak), k);
}

InverseResult right_pseudo_core_inverse(const Matrix& a) {
  require_square(a);
  const unsigned k = positive_index(a);
  const Matrix ak = a.pow(k);
  return gate(InverseKind::RIGHT_PSEUDO_CORE, a, drazin_value(a, k) * ak * mp_value(ak), k);
}

InverseResult dmp_inverse(const Matrix& a) {
  require_square(a);
  const unsigned k = positive_index(a);
  return gate(InverseKind::DMP, a, drazin_value(a, k) * a * mp_value(a), k);
}

InverseResult wd_canonical(const Matrix& a) {
  require_square(a);
  const unsigned k = positive_index(a);
  const Matrix d = drazin_value(a, k);
  const Matrix nil = a - a * a * d;
  return gate(InverseKind::WD, a, wd_from_inner(a, d, mp_value(nil)), k);
}

std::vector<InverseResult> wd_family_sample(const Matrix& a, std::uint64_t seed, std::size_t count) {
  require_square(a);
  const std::size_t n = a.n();
  const unsigned k = positive_index(a);
  const Matrix d = drazin_value(a, k);
  const Matrix nil = a - a * a * d;
  const Matrix nil_mp = mp_value(nil);
  const Matrix left = nil_mp * nil;
  const Matrix right = nil * nil_mp;

  std::mt19937_64 rng(seed);
  std::vector<InverseResult> out;
  const std::size_t max_draws = 8 * count + 8;
  for (std::size_t draw = 0; draw < max_draws && out.size() < count; ++draw) {
    Matrix z(n, n, a.field());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) z(i, j) = Scalar(static_cast<std::int64_t>(rng() % 5) - 2);
    }
    Matrix x = wd_from_inner(a, d, nil_mp + z - left * z * right);
    bool seen = false;
    for (const auto& r : out) seen = seen || r.value == x;
    if (!seen) out.push_back(gate(InverseKind::WD, a, std::move(x), k));
  }
  // The family collapses to one point when N = 0; repeat it.
  while (out.size() < count) out.push_back(out.empty() ? wd_canonical(a) : out.front());
  return out;
}

InverseResult wdmp_inverse(const Matrix& a, const Matrix* witness) {
  require_square(a);
  const unsigned k = positive_index(a);
  Matrix w;
  if (witness) {
    if (!verify_definition(InverseKind::WD, a, *witness, k)) {
      throw Error(ErrorCode::InvalidWitness, "supplied matrix is not a WD inverse of " + a.to_string());
    }
    w = *witness;
  } else {
    w = wd_canonical(a).value;
  }
  return gate(InverseKind::WDMP, a, w * a * mp_value(a), k, &w);
}

InverseResult compute_inverse(InverseKind kind, const Matrix& a, const Matrix* witness) {
  switch (kind) {
    case InverseKind::MP: return mp_inverse(a);
    case InverseKind::DRAZIN: return drazin_inverse(a);
    case InverseKind::GROUP: return group_inverse(a);
    case InverseKind::CORE: return core_inverse(a);
    case InverseKind::PSEUDO_CORE: return pseudo_core_inverse(a);
    case InverseKind::RIGHT_PSEUDO_CORE: return right_pseudo_core_inverse(a);
    case InverseKind::DMP: return dmp_inverse(a);
    case InverseKind::WD: return wd_canonical(a);
    case InverseKind::WDMP: return wdmp_inverse(a, witness);
    case InverseKind::INNER: return inner_inverse(a);
  }
  throw Error(ErrorCode::UnknownKind, "unhandled kind");
}

bool is_ep(const Matrix& a) {
  const Matrix mp = mp_inverse(a).value;
  return a * mp == mp * a;
}

bool hirano_invertible(const Matrix& a) { return is_nilpotent(a - a.pow(3)); }

}  // namespace ginv
