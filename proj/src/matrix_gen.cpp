#include "ginv/matrix_gen.hpp"

#include <vector>

#include "ginv/linalg.hpp"

namespace ginv {

namespace {

Matrix jordan_nilpotent(std::size_t n, const std::vector<std::size_t>& blocks, Field field) {
  Matrix m(n, n, field);
  std::size_t start = 0;
  for (std::size_t s : blocks) {
    for (std::size_t i = 0; i + 1 < s; ++i) m(start + i, start + i + 1) = Scalar(1);
    start += s;
  }
  return m;
}

}  // namespace

Scalar MatrixGenerator::small_scalar(Field field, std::int64_t bound) {
  Rational re(between(-bound, bound));
  if (field == Field::QI && coin()) return {re, Rational(between(-bound, bound))};
  return Scalar(re);
}

Matrix MatrixGenerator::dense(std::size_t n, Field field, std::int64_t bound) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = small_scalar(field, bound);
  }
  return m;
}

std::pair<Matrix, Matrix> MatrixGenerator::unimodular(std::size_t n, Field field) {
  Matrix p = Matrix::identity(n, field);
  Matrix pinv = Matrix::identity(n, field);
  if (n < 2) return {p, pinv};
  const std::size_t ops = 2 * n;
  for (std::size_t t = 0; t < ops; ++t) {
    const std::size_t i = below(n);
    std::size_t j = below(n - 1);
    if (j >= i) ++j;
    Scalar c = small_scalar(field, 1);
    if (c.is_zero()) c = Scalar(1);
    Matrix e = Matrix::identity(n, field);
    e(i, j) = c;
    Matrix einv = Matrix::identity(n, field);
    einv(i, j) = -c;
    p = e * p;
    pinv = pinv * einv;
  }
  // A random transposition keeps P away from triangular shapes.
  const std::size_t i = below(n);
  const std::size_t j = below(n);
  if (i != j) {
    Matrix s = Matrix::identity(n, field);
    s(i, i) = Scalar(0);
    s(j, j) = Scalar(0);
    s(i, j) = Scalar(1);
    s(j, i) = Scalar(1);
    p = s * p;
    pinv = pinv * s;
  }
  return {p, pinv};
}

Matrix MatrixGenerator::block_diag(const Matrix& a, const Matrix& b) const {
  const std::size_t n = a.n() + b.n();
  Matrix m(n, n, Matrix::join(a.field(), b.field()));
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = 0; j < a.n(); ++j) m(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.n(); ++i) {
    for (std::size_t j = 0; j < b.n(); ++j) m(a.n() + i, a.n() + j) = b(i, j);
  }
  return m;
}

Matrix MatrixGenerator::invertible(std::size_t n, Field field) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    Matrix m = dense(n, field, 2);
    if (rank(m) == n) return m;
  }
  auto [p, pinv] = unimodular(n, field);
  Matrix d = Matrix::identity(n, field);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = Scalar(between(1, 3) * (coin() ? 1 : -1));
  return p * d * pinv;
}

Matrix MatrixGenerator::mixed_index(std::size_t n, Field field) {
  const std::size_t core = below(n + 1);
  std::vector<std::size_t> blocks;
  for (std::size_t left = n - core; left > 0;) {
    const std::size_t s = static_cast<std::size_t>(between(1, static_cast<std::int64_t>(left)));
    blocks.push_back(s);
    left -= s;
  }
  Matrix j = jordan_nilpotent(n - core, blocks, field);
  Matrix m = core == 0 ? j : (core == n ? invertible(n, field) : block_diag(invertible(core, field), j));
  auto [p, pinv] = unimodular(n, field);
  return p * m * pinv;
}

Matrix MatrixGenerator::nilpotent(std::size_t n, Field field) {
  std::vector<std::size_t> blocks;
  for (std::size_t left = n; left > 0;) {
    const std::size_t s = static_cast<std::size_t>(between(1, static_cast<std::int64_t>(left)));
    blocks.push_back(s);
    left -= s;
  }
  auto [p, pinv] = unimodular(n, field);
  return p * jordan_nilpotent(n, blocks, field) * pinv;
}

Matrix MatrixGenerator::low_rank(std::size_t n, Field field) {
  const std::size_t r = below(n + 1);
  if (r == 0) return Matrix::zero(n, field);
  Matrix f(n, r, field);
  Matrix g(r, n, field);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < r; ++c) {
      f(i, c) = small_scalar(field, 2);
      g(c, i) = small_scalar(field, 2);
    }
  }
  return f * g;
}

Matrix MatrixGenerator::hermitian(std::size_t n, Field field) {
  Matrix b = coin() ? dense(n, field, 2) : low_rank(n, field);
  return b + b.conj_transpose();
}

Matrix MatrixGenerator::idempotent(std::size_t n, Field field) {
  Matrix d(n, n, field);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = Scalar(coin() ? 1 : 0);
  auto [p, pinv] = unimodular(n, field);
  return p * d * pinv;
}

Matrix MatrixGenerator::hermitian_projector(std::size_t n, Field field) {
  const std::size_t r = below(n + 1);
  if (r == 0) return Matrix::zero(n, field);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Matrix f(n, r, field);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < r; ++c) f(i, c) = small_scalar(field, 2);
    }
    if (rank(f) != r) continue;
    const Matrix fs = f.conj_transpose();
    return f * inverse(fs * f) * fs;
  }
  return Matrix::identity(n, field);
}

Matrix MatrixGenerator::signed_permutation(std::size_t n, Field field) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[below(i)]);
  Matrix u(n, n, field);
  for (std::size_t i = 0; i < n; ++i) {
    Scalar s(coin() ? 1 : -1);
    if (field == Field::QI && coin()) s = s * Scalar::i();
    u(i, perm[i]) = s;
  }
  return u;
}

Matrix MatrixGenerator::ep(std::size_t n, Field field) {
  const std::size_t r = below(n + 1);
  Matrix m = r == 0 ? Matrix::zero(n, field)
                    : (r == n ? invertible(n, field) : block_diag(invertible(r, field), Matrix::zero(n - r, field)));
  const Matrix u = signed_permutation(n, field);
  return u * m * u.conj_transpose();
}

Matrix MatrixGenerator::any(std::size_t n, Field field) {
  switch (below(10)) {
    case 0:
    case 1:
    case 2:
    case 3: return mixed_index(n, field);
    case 4: return dense(n, field, 2);
    case 5: return low_rank(n, field);
    case 6: return hermitian(n, field);
    case 7: return idempotent(n, field);
    case 8: return nilpotent(n, field);
    default: return ep(n, field);
  }
}

}  // namespace ginv
