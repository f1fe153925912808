#include "ginv/finite_ring.hpp"

#include <charconv>
#include <sstream>

#include "ginv/error.hpp"

namespace ginv {

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

unsigned parse_unsigned(std::string_view s, std::string_view whole) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::InvalidRing, "bad ring spec '" + std::string(whole) + "'");
  }
  return v;
}

std::vector<unsigned> decode_matrix(Code code, unsigned k, unsigned p) {
  std::vector<unsigned> e(static_cast<std::size_t>(k) * k);
  unsigned c = code;
  for (auto& v : e) {
    v = c % p;
    c /= p;
  }
  return e;
}

Code encode_matrix(const std::vector<unsigned>& e, unsigned p) {
  unsigned c = 0;
  for (std::size_t i = e.size(); i-- > 0;) c = c * p + e[i];
  return static_cast<Code>(c);
}

}  // namespace

FiniteRingSpec FiniteRingSpec::parse(std::string_view text) {
  FiniteRingSpec s;
  if (text.rfind("Zn:", 0) == 0) {
    s.family = Family::Zn;
    s.n = parse_unsigned(text.substr(3), text);
    s.involution = Involution::Identity;
    return s;
  }
  if (text.size() > 1 && text[0] == 'M') {
    auto colon = text.find(":Z");
    if (colon == std::string_view::npos) throw Error(ErrorCode::InvalidRing, "bad ring spec '" + std::string(text) + "'");
    s.family = Family::MatZp;
    s.k = parse_unsigned(text.substr(1, colon - 1), text);
    s.p = parse_unsigned(text.substr(colon + 2), text);
    s.involution = Involution::Transpose;
    return s;
  }
  throw Error(ErrorCode::InvalidRing, "bad ring spec '" + std::string(text) + "' (expected Zn:<n> or M<k>:Z<p>)");
}

std::string FiniteRingSpec::to_string() const {
  switch (family) {
    case Family::Zn: return "Zn:" + std::to_string(n);
    case Family::MatZp: return "M" + std::to_string(k) + ":Z" + std::to_string(p);
    case Family::Custom: return name.empty() ? "custom" : name;
  }
  return "?";
}

std::size_t FiniteRingSpec::element_count() const {
  switch (family) {
    case Family::Zn: return n;
    case Family::MatZp: {
      std::size_t count = 1;
      for (unsigned i = 0; i < k * k; ++i) {
        count *= p;
        if (count > (1U << 20)) return count;
      }
      return count;
    }
    case Family::Custom: return 0;
  }
  return 0;
}

Code FiniteRing::pow(Code a, unsigned e) const {
  Code result = one_;
  Code base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

std::vector<Code> FiniteRing::units() const {
  std::vector<Code> out;
  for (std::size_t a = 0; a < size_; ++a) {
    if (unit_[a]) out.push_back(static_cast<Code>(a));
  }
  return out;
}

void FiniteRing::finish() {
  unit_.assign(size_, 0);
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) {
      if (mul_[idx(static_cast<Code>(a), static_cast<Code>(b))] == one_ &&
          mul_[idx(static_cast<Code>(b), static_cast<Code>(a))] == one_) {
        unit_[a] = 1;
        break;
      }
    }
  }
  commutative_ = true;
  for (std::size_t a = 0; a < size_ && commutative_; ++a) {
    for (std::size_t b = a + 1; b < size_; ++b) {
      if (mul_[idx(static_cast<Code>(a), static_cast<Code>(b))] != mul_[idx(static_cast<Code>(b), static_cast<Code>(a))]) {
        commutative_ = false;
        break;
      }
    }
  }
}

FiniteRing FiniteRing::build(std::string_view spec_text, std::size_t cap) {
  return build(FiniteRingSpec::parse(spec_text), cap);
}

FiniteRing FiniteRing::build(const FiniteRingSpec& spec, std::size_t cap) {
  if (spec.family == FiniteRingSpec::Family::Custom) {
    throw Error(ErrorCode::InvalidRing, "custom rings are built from table files");
  }
  if (spec.family == FiniteRingSpec::Family::Zn && spec.n < 2) {
    throw Error(ErrorCode::InvalidRing, "Zn needs n >= 2 (unity must differ from zero)");
  }
  if (spec.family == FiniteRingSpec::Family::MatZp) {
    if (spec.k < 1) throw Error(ErrorCode::InvalidRing, "matrix size must be >= 1");
    if (!is_prime(spec.p)) throw Error(ErrorCode::InvalidRing, "Z" + std::to_string(spec.p) + " is not a prime field");
  }
  const std::size_t count = spec.element_count();
  if (count > cap || count > 65536) {
    throw Error(ErrorCode::TooLarge, spec.to_string() + " has " + std::to_string(count) + " elements (cap " +
                                         std::to_string(cap) + ")");
  }

  FiniteRing r;
  r.spec_ = spec;
  r.size_ = count;
  r.add_.resize(count * count);
  r.mul_.resize(count * count);
  r.neg_.resize(count);
  r.star_.resize(count);

  if (spec.family == FiniteRingSpec::Family::Zn) {
    const unsigned n = spec.n;
    for (unsigned a = 0; a < n; ++a) {
      for (unsigned b = 0; b < n; ++b) {
        r.add_[r.idx(a, b)] = static_cast<Code>((a + b) % n);
        r.mul_[r.idx(a, b)] = static_cast<Code>((a * b) % n);
      }
      r.neg_[a] = static_cast<Code>((n - a) % n);
      r.star_[a] = static_cast<Code>(a);
    }
    r.zero_ = 0;
    r.one_ = 1;
  } else {
    const unsigned k = spec.k;
    const unsigned p = spec.p;
    std::vector<std::vector<unsigned>> dec(count);
    for (std::size_t c = 0; c < count; ++c) dec[c] = decode_matrix(static_cast<Code>(c), k, p);
    std::vector<unsigned> tmp(static_cast<std::size_t>(k) * k);
    for (std::size_t a = 0; a < count; ++a) {
      const auto& x = dec[a];
      for (std::size_t b = 0; b < count; ++b) {
        const auto& y = dec[b];
        for (std::size_t i = 0; i < tmp.size(); ++i) tmp[i] = (x[i] + y[i]) % p;
        r.add_[r.idx(static_cast<Code>(a), static_cast<Code>(b))] = encode_matrix(tmp, p);
        for (unsigned i = 0; i < k; ++i) {
          for (unsigned j = 0; j < k; ++j) {
            unsigned s = 0;
            for (unsigned t = 0; t < k; ++t) s += x[i * k + t] * y[t * k + j];
            tmp[i * k + j] = s % p;
          }
        }
        r.mul_[r.idx(static_cast<Code>(a), static_cast<Code>(b))] = encode_matrix(tmp, p);
      }
      for (std::size_t i = 0; i < tmp.size(); ++i) tmp[i] = (p - x[i]) % p;
      r.neg_[a] = encode_matrix(tmp, p);
      for (unsigned i = 0; i < k; ++i) {
        for (unsigned j = 0; j < k; ++j) tmp[j * k + i] = x[i * k + j];
      }
      r.star_[a] = encode_matrix(tmp, p);
    }
    std::vector<unsigned> id(static_cast<std::size_t>(k) * k, 0);
    for (unsigned i = 0; i < k; ++i) id[i * k + i] = 1;
    r.zero_ = 0;
    r.one_ = encode_matrix(id, p);
  }
  r.finish();
  return r;
}

FiniteRing FiniteRing::from_json(const nlohmann::json& j, std::size_t cap) {
  FiniteRing r;
  try {
    r.spec_.family = FiniteRingSpec::Family::Custom;
    r.spec_.involution = FiniteRingSpec::Involution::Table;
    r.spec_.name = j.value("name", std::string("custom"));
    const std::size_t n = j.at("size").get<std::size_t>();
    if (n < 2) throw Error(ErrorCode::InvalidRing, "ring needs at least two elements");
    if (n > cap || n > 65536) throw Error(ErrorCode::TooLarge, "custom ring exceeds the cap");
    r.size_ = n;
    r.add_.resize(n * n);
    r.mul_.resize(n * n);
    r.neg_.resize(n);
    r.star_.resize(n);
    auto load = [&](const char* key, std::vector<Code>& out) {
      const auto& t = j.at(key);
      if (t.size() != n) throw Error(ErrorCode::InvalidRing, std::string(key) + " table has wrong size");
      for (std::size_t a = 0; a < n; ++a) {
        if (t[a].size() != n) throw Error(ErrorCode::InvalidRing, std::string(key) + " table has wrong size");
        for (std::size_t b = 0; b < n; ++b) {
          const auto v = t[a][b].get<std::size_t>();
          if (v >= n) throw Error(ErrorCode::InvalidRing, std::string(key) + " table entry out of range");
          out[a * n + b] = static_cast<Code>(v);
        }
      }
    };
    load("add", r.add_);
    load("mul", r.mul_);
    const auto& s = j.at("star");
    if (s.size() != n) throw Error(ErrorCode::InvalidRing, "star table has wrong size");
    for (std::size_t a = 0; a < n; ++a) {
      const auto v = s[a].get<std::size_t>();
      if (v >= n) throw Error(ErrorCode::InvalidRing, "star entry out of range");
      r.star_[a] = static_cast<Code>(v);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidRing, e.what());
  }

  const std::size_t n = r.size_;
  auto find_identity = [&](const std::vector<Code>& table) -> std::size_t {
    for (std::size_t e = 0; e < n; ++e) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) ok = table[e * n + a] == a && table[a * n + e] == a;
      if (ok) return e;
    }
    return n;
  };
  const std::size_t zero = find_identity(r.add_);
  const std::size_t one = find_identity(r.mul_);
  if (zero == n) throw Error(ErrorCode::InvalidRing, "addition has no identity");
  if (one == n) throw Error(ErrorCode::InvalidRing, "multiplication has no identity");
  if (one == zero) throw Error(ErrorCode::InvalidRing, "unity equals zero");
  r.zero_ = static_cast<Code>(zero);
  r.one_ = static_cast<Code>(one);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t inv = n;
    for (std::size_t b = 0; b < n; ++b) {
      if (r.add_[a * n + b] == zero) inv = b;
    }
    if (inv == n) throw Error(ErrorCode::InvalidRing, "element without additive inverse");
    r.neg_[a] = static_cast<Code>(inv);
  }
  for (std::size_t a = 0; a < n; ++a) {
    const Code sa = r.star_[a];
    if (r.star_[sa] != a) throw Error(ErrorCode::InvalidRing, "involution is not of order two");
    for (std::size_t b = 0; b < n; ++b) {
      const Code sb = r.star_[b];
      if (r.add_[a * n + b] != r.add_[b * n + a]) throw Error(ErrorCode::InvalidRing, "addition not commutative");
      if (r.star_[r.add_[a * n + b]] != r.add_[sa * n + sb]) throw Error(ErrorCode::InvalidRing, "(a+b)* != a*+b*");
      if (r.star_[r.mul_[a * n + b]] != r.mul_[sb * n + sa]) throw Error(ErrorCode::InvalidRing, "(ab)* != b*a*");
    }
  }
  // Cubic axioms only where that stays cheap.
  if (n <= 256) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          const Code ab = r.mul_[a * n + b];
          const Code bc = r.mul_[b * n + c];
          if (r.mul_[ab * n + c] != r.mul_[a * n + bc]) throw Error(ErrorCode::InvalidRing, "multiplication not associative");
          if (r.add_[r.add_[a * n + b] * n + c] != r.add_[a * n + r.add_[b * n + c]]) {
            throw Error(ErrorCode::InvalidRing, "addition not associative");
          }
          const Code lhs = r.mul_[a * n + r.add_[b * n + c]];
          if (lhs != r.add_[ab * n + r.mul_[a * n + c]]) throw Error(ErrorCode::InvalidRing, "left distributivity fails");
          const Code rhs = r.mul_[r.add_[a * n + b] * n + c];
          if (rhs != r.add_[r.mul_[a * n + c] * n + bc]) throw Error(ErrorCode::InvalidRing, "right distributivity fails");
        }
      }
    }
  }
  r.finish();
  return r;
}

std::string FiniteRing::describe(Code a) const {
  switch (spec_.family) {
    case FiniteRingSpec::Family::Zn: return std::to_string(a);
    case FiniteRingSpec::Family::MatZp: {
      const auto e = decode_matrix(a, spec_.k, spec_.p);
      std::ostringstream os;
      os << '[';
      for (unsigned i = 0; i < spec_.k; ++i) {
        if (i) os << ',';
        os << '[';
        for (unsigned j = 0; j < spec_.k; ++j) {
          if (j) os << ',';
          os << e[i * spec_.k + j];
        }
        os << ']';
      }
      os << ']';
      return os.str();
    }
    case FiniteRingSpec::Family::Custom: return "#" + std::to_string(a);
  }
  return std::to_string(a);
}

Code FiniteRing::parse_element(std::string_view text) const {
  if (!text.empty() && text.front() == '[' && spec_.family == FiniteRingSpec::Family::MatZp) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    const unsigned k = spec_.k;
    if (!j.is_array() || j.size() != k) throw Error(ErrorCode::ParseError, "element must be a k x k array");
    std::vector<unsigned> e(static_cast<std::size_t>(k) * k);
    for (unsigned i = 0; i < k; ++i) {
      if (!j[i].is_array() || j[i].size() != k) throw Error(ErrorCode::ParseError, "element must be a k x k array");
      for (unsigned c = 0; c < k; ++c) {
        const long v = j[i][c].get<long>();
        e[i * k + c] = static_cast<unsigned>(((v % static_cast<long>(spec_.p)) + spec_.p) % spec_.p);
      }
    }
    return encode_matrix(e, spec_.p);
  }
  std::string_view t = text;
  if (!t.empty() && t.front() == '#') t.remove_prefix(1);
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty() || v >= size_) {
    throw Error(ErrorCode::ParseError, "element '" + std::string(text) + "' is not in " + label());
  }
  return static_cast<Code>(v);
}

}  // namespace ginv
