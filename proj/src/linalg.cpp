#include "ginv/linalg.hpp"

#include <utility>

#include "ginv/error.hpp"

namespace ginv {

RrefResult rref(const Matrix& m) {
  RrefResult out{m, 0, {}};
  Matrix& r = out.rref;
  const std::size_t rows = r.rows();
  const std::size_t cols = r.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && r(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(r(pivot, j), r(row, j));
    }
    const Scalar inv = Scalar(1) / r(row, col);
    for (std::size_t j = col; j < cols; ++j) r(row, j) = r(row, j) * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || r(i, col).is_zero()) continue;
      const Scalar factor = r(i, col);
      for (std::size_t j = col; j < cols; ++j) {
        if (!r(row, j).is_zero()) r(i, j) -= factor * r(row, j);
      }
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

RankFactorization rank_factorization(const Matrix& m) {
  RrefResult rr = rref(m);
  if (rr.rank == 0) throw Error(ErrorCode::ZeroMatrix, "rank factorization of the zero matrix");
  RankFactorization out{Matrix(m.rows(), rr.rank, m.field()), Matrix(rr.rank, m.cols(), m.field())};
  for (std::size_t c = 0; c < rr.rank; ++c) {
    for (std::size_t i = 0; i < m.rows(); ++i) out.f(i, c) = m(i, rr.pivot_cols[c]);
  }
  for (std::size_t i = 0; i < rr.rank; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.g(i, j) = rr.rref(i, j);
  }
  return out;
}

Matrix inverse(const Matrix& m) {
  if (!m.square()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.n();
  RrefResult rr = rref(hstack(m, Matrix::identity(n, m.field())));
  for (std::size_t i = 0; i < n; ++i) {
    if (!(rr.rref(i, i) == Scalar(1)) || (i < rr.pivot_cols.size() && rr.pivot_cols[i] != i)) {
      throw Error(ErrorCode::Singular, "matrix is singular");
    }
  }
  Matrix inv(n, n, m.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.rref(i, n + j);
  }
  return inv;
}

IndexResult drazin_index(const Matrix& m) {
  if (!m.square()) throw Error(ErrorCode::DimensionMismatch, "index of a non-square matrix");
  IndexResult out;
  Matrix power = Matrix::identity(m.n(), m.field());
  out.rank_sequence.push_back(m.n());
  for (unsigned k = 0;; ++k) {
    power = power * m;
    out.rank_sequence.push_back(rank(power));
    if (out.rank_sequence[k + 1] == out.rank_sequence[k]) {
      out.index = k;
      return out;
    }
  }
}

unsigned positive_index(const Matrix& m) {
  unsigned k = drazin_index(m).index;
  return k == 0 ? 1 : k;
}

bool is_nilpotent(const Matrix& m) { return m.pow(static_cast<unsigned>(m.n())).is_zero(); }

bool row_space_included(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "row space inclusion");
  return rank(vstack(b, a)) == rank(b);
}

bool row_space_equal(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "row space comparison");
  RrefResult ra = rref(a);
  RrefResult rb = rref(b);
  if (ra.rank != rb.rank) return false;
  for (std::size_t i = 0; i < ra.rank; ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!(ra.rref(i, j) == rb.rref(i, j))) return false;
    }
  }
  return true;
}

bool range_included(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "range inclusion");
  return rank(hstack(b, a)) == rank(b);
}

bool range_equal(const Matrix& a, const Matrix& b) { return range_included(a, b) && range_included(b, a); }

}  // namespace ginv
