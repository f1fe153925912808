#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace ginv {

/// Exact rational number backed by GMP. Always kept in canonical form
/// (gcd(num, den) = 1, den > 0).
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses INT ["/" POSINT]. Throws Error(ParseError).
  static Rational parse(std::string_view text);

  std::string to_string() const;

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  const mpq_class& raw() const { return q_; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_), Canonical{}); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_), Canonical{}); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_), Canonical{}); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-q_), Canonical{}); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

 private:
  // GMP arithmetic results are already canonical.
  struct Canonical {};
  Rational(mpq_class q, Canonical) : q_(std::move(q)) {}

  mpq_class q_{0};
};

enum class Field { Q, QI };

std::string_view field_name(Field f);
Field parse_field(std::string_view name);

/// Element of Q(i). Also used for plain Q entries, where im stays zero.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return {Rational(0), Rational(1)}; }

  /// Parses a scalar for the given field. Q accepts INT ["/" POSINT];
  /// Q(i) additionally accepts "<re>+<im>*i" and "<re>-<im>*i".
  static Scalar parse(std::string_view text, Field field);

  /// Q(i) scalars always print in the two-part form "re+im*i".
  std::string to_string(Field field) const;

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  Scalar conj() const { return {re_, -im_}; }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const { return {-re_, -im_}; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace ginv
