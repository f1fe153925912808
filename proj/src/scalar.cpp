#include "ginv/scalar.hpp"

#include <cctype>

#include "ginv/error.hpp"

namespace ginv {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroMatrix: return "ZeroMatrix";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::IndexTooLarge: return "IndexTooLarge";
    case ErrorCode::MissingWitness: return "MissingWitness";
    case ErrorCode::InvalidWitness: return "InvalidWitness";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidRing: return "InvalidRing";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownKind: return "UnknownKind";
    case ErrorCode::UnknownTheorem: return "UnknownTheorem";
    case ErrorCode::InapplicableCarrier: return "InapplicableCarrier";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

Rational::Rational(std::int64_t num, std::int64_t den) : q_(static_cast<long>(num), static_cast<long>(den)) {
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  q_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(ErrorCode::Singular, "division by zero");
  return Rational(mpq_class(a.q_ / b.q_), Rational::Canonical{});
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool valid_int(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return all_digits(s);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!valid_int(num)) throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
  std::string num_s(num.front() == '+' ? num.substr(1) : num);
  mpz_class n(num_s, 10);
  mpz_class d(1);
  if (slash != std::string_view::npos) {
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(den)) throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
    d = mpz_class(std::string(den), 10);
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::string_view field_name(Field f) { return f == Field::Q ? "Q" : "Q(i)"; }

Field parse_field(std::string_view name) {
  if (name == "Q") return Field::Q;
  if (name == "Q(i)") return Field::QI;
  throw Error(ErrorCode::ParseError, "unknown field '" + std::string(name) + "'");
}

Scalar Scalar::parse(std::string_view text, Field field) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  std::string_view s = compact;
  if (s.size() >= 2 && s.substr(s.size() - 2) == "*i") {
    if (field != Field::QI) throw Error(ErrorCode::ParseError, "imaginary scalar over Q: '" + compact + "'");
    std::string_view body = s.substr(0, s.size() - 2);
    // Split at the last '+'/'-' that is not a leading sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
      if ((body[i] == '+' || body[i] == '-') && body[i - 1] != '+' && body[i - 1] != '-') {
        split = i;
        break;
      }
    }
    if (split == std::string_view::npos) throw Error(ErrorCode::ParseError, "bad Q(i) scalar '" + compact + "'");
    Rational re = Rational::parse(body.substr(0, split));
    Rational im = Rational::parse(body.substr(split + 1));
    if (body[split] == '-') im = -im;
    return {re, im};
  }
  return {Rational::parse(s), Rational(0)};
}

std::string Scalar::to_string(Field field) const {
  if (field == Field::Q) return re_.to_string();
  std::string out = re_.to_string();
  if (im_.sign() < 0) {
    out += "-" + (-im_).to_string();
  } else {
    out += "+" + im_.to_string();
  }
  return out + "*i";
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_real() && b.is_real()) return Scalar(a.re_ + b.re_);
  return {a.re_ + b.re_, a.im_ + b.im_};
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.is_real() && b.is_real()) return Scalar(a.re_ - b.re_);
  return {a.re_ - b.re_, a.im_ - b.im_};
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_real() && b.is_real()) return Scalar(a.re_ * b.re_);
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw Error(ErrorCode::Singular, "division by zero");
  if (b.is_real()) return {a.re_ / b.re_, a.im_ / b.re_};
  Rational norm = b.re_ * b.re_ + b.im_ * b.im_;
  Scalar num = a * b.conj();
  return {num.re_ / norm, num.im_ / norm};
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (!o.im_.is_zero()) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (!o.im_.is_zero()) im_ -= o.im_;
  return *this;
}

}  // namespace ginv
