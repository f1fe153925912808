#pragma once

#include <cstddef>
#include <vector>

#include "ginv/matrix.hpp"

namespace ginv {

struct RrefResult {
  Matrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row-echelon form by Gauss-Jordan elimination. The pivot in each
/// column is the first nonzero entry at or below the current row.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

struct RankFactorization {
  Matrix f;  // rows x r, the pivot columns of m
  Matrix g;  // r x cols, the nonzero rows of rref(m)
};

/// m = F·G with F of full column rank and G of full row rank.
/// Throws Error(ZeroMatrix) when rank(m) = 0.
RankFactorization rank_factorization(const Matrix& m);

/// Inverse of a nonsingular square matrix. Throws Error(Singular).
Matrix inverse(const Matrix& m);

struct IndexResult {
  unsigned index = 0;
  /// rank(m^0), rank(m^1), ..., rank(m^{index+1}).
  std::vector<std::size_t> rank_sequence;
};

/// Smallest k >= 0 with rank(m^k) = rank(m^{k+1}). Invertible matrices get 0.
IndexResult drazin_index(const Matrix& m);

/// max(drazin_index, 1): the exponent every defining system of a
/// k-dependent inverse is evaluated at.
unsigned positive_index(const Matrix& m);

/// m^n = 0 where n is the dimension.
bool is_nilpotent(const Matrix& m);

/// Row spaces coincide (Ra = Rb in the matrix ring).
bool row_space_equal(const Matrix& a, const Matrix& b);
/// Row space of a contained in that of b (Ra ⊆ Rb).
bool row_space_included(const Matrix& a, const Matrix& b);
/// Column space of a contained in that of b (aR ⊆ bR).
bool range_included(const Matrix& a, const Matrix& b);
bool range_equal(const Matrix& a, const Matrix& b);

/// Left annihilator inclusion °a ⊆ °b, i.e. col(b) ⊆ col(a).
inline bool left_annihilator_included(const Matrix& a, const Matrix& b) { return range_included(b, a); }
/// Right annihilator inclusion a° ⊆ b°, i.e. row(b) ⊆ row(a).
inline bool right_annihilator_included(const Matrix& a, const Matrix& b) { return row_space_included(b, a); }

}  // namespace ginv
