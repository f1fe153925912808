#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ginv/inverse_kind.hpp"
#include "ginv/linalg.hpp"
#include "ginv/matrix.hpp"

namespace ginv {

/// The matrix ring M_n(F) with conjugate transpose, in the shape the generic
/// defining systems expect.
struct MatrixAlgebra {
  using Value = Matrix;
  Matrix add(const Matrix& a, const Matrix& b) const { return a + b; }
  Matrix sub(const Matrix& a, const Matrix& b) const { return a - b; }
  Matrix mul(const Matrix& a, const Matrix& b) const { return a * b; }
  Matrix star(const Matrix& a) const { return a.conj_transpose(); }
  Matrix pow(const Matrix& a, unsigned e) const { return a.pow(e); }
  bool equal(const Matrix& a, const Matrix& b) const { return a == b; }
};

struct InverseResult {
  InverseKind kind = InverseKind::MP;
  Matrix value;
  unsigned k_used = 1;
  /// WD witness a WDMP value was built from.
  std::optional<Matrix> witness_wd;
  bool verified = false;
};

/// True iff x satisfies every equation of kind's system at exponent k.
/// DMP looks up a^d and a† itself; WDMP needs the WD witness.
/// Throws Error(MissingWitness) for WDMP without a witness and
/// Error(DimensionMismatch) on shape disagreement.
bool verify_definition(InverseKind kind, const Matrix& a, const Matrix& x, unsigned k,
                       const Matrix* witness = nullptr);

InverseResult mp_inverse(const Matrix& a);
InverseResult drazin_inverse(const Matrix& a);
/// Throws Error(IndexTooLarge) when the index exceeds 1.
InverseResult group_inverse(const Matrix& a);
/// Throws Error(IndexTooLarge) when the index exceeds 1.
InverseResult core_inverse(const Matrix& a);
InverseResult pseudo_core_inverse(const Matrix& a);
InverseResult right_pseudo_core_inverse(const Matrix& a);
InverseResult dmp_inverse(const Matrix& a);

/// Canonical WD inverse d + (1 - ad)·N†·(1 - da), with d the Drazin inverse
/// and N = a - a²d the nilpotent part of the core-nilpotent decomposition.
InverseResult wd_canonical(const Matrix& a);

/// Further WD inverses obtained by replacing N† with inner inverses
/// N† + Z - N†NZNN† for seeded integer matrices Z. Distinct where the family
/// allows it; every sample is verified.
std::vector<InverseResult> wd_family_sample(const Matrix& a, std::uint64_t seed, std::size_t count);

/// w·a·a† with w = witness (checked to be a WD inverse) or the canonical one.
/// Throws Error(InvalidWitness) if the given witness is not a WD inverse.
InverseResult wdmp_inverse(const Matrix& a, const Matrix* witness = nullptr);

/// Any {1}-inverse; a† is used.
InverseResult inner_inverse(const Matrix& a);

/// Dispatch over every kind.
InverseResult compute_inverse(InverseKind kind, const Matrix& a, const Matrix* witness = nullptr);

bool is_ep(const Matrix& a);
/// a - a³ nilpotent.
bool hirano_invertible(const Matrix& a);

}  // namespace ginv
