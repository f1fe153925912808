#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "ginv/matrix.hpp"

namespace ginv {

/// Seeded generator of small exact test matrices with controlled rank and
/// index. Uses only mt19937_64 output and modular reduction, so the stream
/// is identical on every platform.
class MatrixGenerator {
 public:
  explicit MatrixGenerator(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next() { return rng_(); }
  /// Uniform-ish integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : rng_() % bound; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool coin() { return (rng_() & 1U) != 0; }

  Scalar small_scalar(Field field, std::int64_t bound = 2);

  /// Dense matrix with entries in [-bound, bound] (plus imaginary parts over Q(i)).
  Matrix dense(std::size_t n, Field field, std::int64_t bound = 2);
  /// Integer matrix with integer inverse; returns (P, P^{-1}).
  std::pair<Matrix, Matrix> unimodular(std::size_t n, Field field);
  /// P (C ⊕ N) P^{-1} with C invertible and N a random nilpotent Jordan
  /// structure: the usual way to get every index from 0 to n.
  Matrix mixed_index(std::size_t n, Field field);
  /// F·G with F n×r and G r×n, r chosen at random.
  Matrix low_rank(std::size_t n, Field field);
  Matrix hermitian(std::size_t n, Field field);
  /// P diag(1..1, 0..0) P^{-1}.
  Matrix idempotent(std::size_t n, Field field);
  /// Orthogonal projector onto a random column space.
  Matrix hermitian_projector(std::size_t n, Field field);
  Matrix nilpotent(std::size_t n, Field field);
  /// Invertible matrix.
  Matrix invertible(std::size_t n, Field field);
  /// EP matrix U (C ⊕ 0) U* with C invertible and U a signed permutation.
  Matrix ep(std::size_t n, Field field);
  /// Signed permutation matrix (unitary over Q and Q(i)).
  Matrix signed_permutation(std::size_t n, Field field);

  /// Mixture of all of the above.
  Matrix any(std::size_t n, Field field);

 private:
  Matrix block_diag(const Matrix& a, const Matrix& b) const;

  std::mt19937_64 rng_;
};

}  // namespace ginv
