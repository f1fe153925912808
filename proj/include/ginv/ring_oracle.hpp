#pragma once

#include <array>
#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ginv/finite_ring.hpp"
#include "ginv/inverse_kind.hpp"

namespace ginv {

/// Exact solution set of a defining system for one element, sorted by code.
struct WitnessSet {
  std::string kind;  // kind tag, or "HIRANO"
  Code element = 0;
  unsigned k_used = 1;
  std::vector<Code> witnesses;

  bool empty() const { return witnesses.empty(); }
  bool contains(Code x) const;
};

nlohmann::json witness_set_to_json(const WitnessSet& w);

/// Minimal k >= 1 with a^k in a^{k+1}R ∩ Ra^{k+1}. Exists in every finite ring.
unsigned ring_index(const FiniteRing& ring, Code a);

/// Brute force over every x in the ring at k = ring_index(a).
WitnessSet witness_set(const FiniteRing& ring, Code a, InverseKind kind);
/// Same, at an explicit exponent (k-independent kinds ignore it).
WitnessSet witness_set_at(const FiniteRing& ring, Code a, InverseKind kind, unsigned k);
/// WDMP solutions relative to one particular WD witness w.
std::vector<Code> wdmp_solutions_for(const FiniteRing& ring, Code a, Code w, unsigned k);

std::vector<Code> comm_set(const FiniteRing& ring, Code a);
std::vector<Code> comm2_set(const FiniteRing& ring, Code a);
/// 1 + xa is a unit for every x in comm(a).
bool is_quasinilpotent(const FiniteRing& ring, Code a);
bool is_nilpotent(const FiniteRing& ring, Code a);
bool is_idempotent(const FiniteRing& ring, Code a);

/// Every b with b = bab, b in comm²(a) and a² - ab quasinilpotent.
WitnessSet hirano_witness_set(const FiniteRing& ring, Code a);

struct Annihilators {
  std::vector<Code> left;   // {x : xa = 0}
  std::vector<Code> right;  // {x : ax = 0}
};
Annihilators annihilators(const FiniteRing& ring, Code a);

/// a*a = 0 implies a = 0.
bool proper_check(const FiniteRing& ring);

enum class Side { Right, Left };
/// Side::Right: aR ⊆ bR. Side::Left: Ra ⊆ Rb.
bool principal_inclusion(const FiniteRing& ring, Code a, Code b, Side side);

/// Witness sets of one kind for every element, in code order. The parallel
/// kernel partitions elements across OpenMP threads; the serial one is the
/// reference it is tested against.
std::vector<WitnessSet> witness_table_serial(const FiniteRing& ring, InverseKind kind);
std::vector<WitnessSet> witness_table_parallel(const FiniteRing& ring, InverseKind kind);

/// Memoized view of a ring: witness tables, indices, principal ideals and
/// annihilators. Tables are built once, on first use, and are safe to read
/// from several threads.
class RingOracle {
 public:
  explicit RingOracle(const FiniteRing& ring);

  const FiniteRing& ring() const { return ring_; }

  const WitnessSet& witnesses(InverseKind kind, Code a) const;
  const std::vector<WitnessSet>& table(InverseKind kind) const;
  unsigned index(Code a) const;
  bool hirano(Code a) const;
  bool nilpotent(Code a) const;
  bool regular(Code a) const { return !witnesses(InverseKind::INNER, a).empty(); }
  bool proper() const;

  bool right_ideal_in(Code a, Code b) const;  // aR ⊆ bR
  bool left_ideal_in(Code a, Code b) const;   // Ra ⊆ Rb
  bool left_ann_in(Code a, Code b) const;     // °a ⊆ °b
  bool right_ann_in(Code a, Code b) const;    // a° ⊆ b°

  /// Builds every witness table up front.
  void prefetch_all() const;

 private:
  struct Sets {
    std::size_t words = 0;
    std::vector<std::uint64_t> bits;
    bool subset(std::size_t i, std::size_t j) const;
  };
  enum SetKind { kRightIdeal, kLeftIdeal, kLeftAnn, kRightAnn, kSetKinds };
  const Sets& sets(SetKind which) const;

  const FiniteRing& ring_;
  mutable std::array<std::once_flag, kAllKinds.size()> table_once_;
  mutable std::array<std::vector<WitnessSet>, kAllKinds.size()> tables_;
  mutable std::once_flag misc_once_;
  mutable std::vector<unsigned> index_;
  mutable std::once_flag hirano_once_;
  mutable std::vector<std::uint8_t> hirano_;
  mutable std::vector<std::uint8_t> nilpotent_;
  mutable bool proper_ = false;
  mutable std::array<std::once_flag, kSetKinds> sets_once_;
  mutable std::array<Sets, kSetKinds> sets_;
};

}  // namespace ginv
