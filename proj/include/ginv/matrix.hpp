#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ginv/scalar.hpp"

namespace ginv {

/// Dense exact matrix over Q or Q(i). Ring elements are always square; the
/// rectangular shape only appears for rank-factorization factors and stacked
/// blocks used in rank tests.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field = Field::Q);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows, Field field = Field::Q);

  static Matrix zero(std::size_t n, Field field = Field::Q) { return Matrix(n, n, field); }
  static Matrix identity(std::size_t n, Field field = Field::Q);
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j, Field field = Field::Q);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  /// Dimension of a square matrix.
  std::size_t n() const { return rows_; }
  bool square() const { return rows_ == cols_; }
  Field field() const { return field_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_identity() const;

  /// Conjugate transpose: the involution * of the matrix ring.
  Matrix conj_transpose() const;
  Matrix transpose() const;

  /// m^e for e >= 0 (m^0 = identity).
  Matrix pow(unsigned e) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  Matrix operator-() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Human-readable "[[a,b],[c,d]]".
  std::string to_string() const;

  /// Joins fields: Q(i) wins.
  static Field join(Field a, Field b) { return (a == Field::QI || b == Field::QI) ? Field::QI : Field::Q; }

  /// Q(i) matrices whose entries are all real still carry the Q(i) tag.
  void set_field(Field f) { field_ = f; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_ = Field::Q;
  std::vector<Scalar> data_;
};

/// Horizontal block [a | b].
Matrix hstack(const Matrix& a, const Matrix& b);
/// Vertical block [a ; b].
Matrix vstack(const Matrix& a, const Matrix& b);

}  // namespace ginv
