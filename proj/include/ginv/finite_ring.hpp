#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace ginv {

/// Canonical element code in [0, |R|).
using Code = std::uint16_t;

inline constexpr std::size_t kDefaultRingCap = 4096;

struct FiniteRingSpec {
  enum class Family { Zn, MatZp, Custom };
  enum class Involution { Identity, Transpose, Table };

  Family family = Family::Zn;
  unsigned n = 0;  // Zn modulus
  unsigned k = 0;  // MatZp matrix size
  unsigned p = 0;  // MatZp prime
  Involution involution = Involution::Identity;
  std::string name;  // custom rings only

  /// "Zn:<n>" or "M<k>:Z<p>". Throws Error(InvalidRing).
  static FiniteRingSpec parse(std::string_view text);
  std::string to_string() const;
  std::size_t element_count() const;
};

/// An enumerable ring with involution. All operations are table lookups;
/// tables are immutable after construction.
class FiniteRing {
 public:
  using Value = Code;

  /// Throws Error(TooLarge) above the cap and Error(InvalidRing) for
  /// degenerate specs (n < 2, non-prime p, ...).
  static FiniteRing build(const FiniteRingSpec& spec, std::size_t cap = kDefaultRingCap);
  static FiniteRing build(std::string_view spec_text, std::size_t cap = kDefaultRingCap);

  /// Custom ring: {"name", "size", "add": [[...]], "mul": [[...]], "star": [...]}.
  /// Ring axioms and involution laws are checked exhaustively.
  static FiniteRing from_json(const nlohmann::json& j, std::size_t cap = kDefaultRingCap);

  const FiniteRingSpec& spec() const { return spec_; }
  std::string label() const { return spec_.to_string(); }
  std::size_t size() const { return size_; }
  Code zero() const { return zero_; }
  Code one() const { return one_; }

  Code add(Code a, Code b) const { return add_[idx(a, b)]; }
  Code mul(Code a, Code b) const { return mul_[idx(a, b)]; }
  Code neg(Code a) const { return neg_[a]; }
  Code sub(Code a, Code b) const { return add(a, neg(b)); }
  Code star(Code a) const { return star_[a]; }
  Code pow(Code a, unsigned e) const;
  bool equal(Code a, Code b) const { return a == b; }

  bool is_unit(Code a) const { return unit_[a] != 0; }
  std::vector<Code> units() const;
  bool commutative() const { return commutative_; }

  /// "3" for Zn, "[[1,0],[1,1]]" for matrix rings, the code otherwise.
  std::string describe(Code a) const;
  /// Inverse of describe for Zn and matrix rings; plain codes are always accepted.
  Code parse_element(std::string_view text) const;

 private:
  FiniteRing() = default;
  std::size_t idx(Code a, Code b) const { return static_cast<std::size_t>(a) * size_ + b; }
  void finish();

  FiniteRingSpec spec_;
  std::size_t size_ = 0;
  Code zero_ = 0;
  Code one_ = 0;
  bool commutative_ = false;
  std::vector<Code> add_;
  std::vector<Code> mul_;
  std::vector<Code> neg_;
  std::vector<Code> star_;
  std::vector<std::uint8_t> unit_;
};

}  // namespace ginv
