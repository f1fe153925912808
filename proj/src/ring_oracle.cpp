#include "ginv/ring_oracle.hpp"

#include <algorithm>

#include "ginv/systems.hpp"

namespace ginv {

bool WitnessSet::contains(Code x) const { return std::binary_search(witnesses.begin(), witnesses.end(), x); }

nlohmann::json witness_set_to_json(const WitnessSet& w) {
  return {{"kind", w.kind}, {"element", w.element}, {"k", w.k_used}, {"witnesses", w.witnesses}};
}

unsigned ring_index(const FiniteRing& ring, Code a) {
  const std::size_t n = ring.size();
  Code ak = a;
  for (unsigned k = 1; k <= n; ++k) {
    const Code ak1 = ring.mul(ak, a);
    bool right = false;
    bool left = false;
    for (std::size_t r = 0; r < n && !(right && left); ++r) {
      right = right || ring.mul(ak1, static_cast<Code>(r)) == ak;
      left = left || ring.mul(static_cast<Code>(r), ak1) == ak;
    }
    if (right && left) return k;
    ak = ak1;
  }
  // Unreachable for a finite ring: powers are eventually periodic.
  return static_cast<unsigned>(n);
}

namespace {

std::vector<Code> solve(const FiniteRing& ring, Code a, InverseKind kind, unsigned k, const SystemAux<Code>& aux) {
  std::vector<Code> out;
  for (std::size_t x = 0; x < ring.size(); ++x) {
    if (satisfies_system(ring, kind, a, static_cast<Code>(x), k, aux)) out.push_back(static_cast<Code>(x));
  }
  return out;
}

}  // namespace

std::vector<Code> wdmp_solutions_for(const FiniteRing& ring, Code a, Code w, unsigned k) {
  const auto mp = solve(ring, a, InverseKind::MP, k, {});
  if (mp.empty()) return {};
  SystemAux<Code> aux;
  aux.mp = &mp.front();
  aux.wd = &w;
  return solve(ring, a, InverseKind::WDMP, k, aux);
}

WitnessSet witness_set_at(const FiniteRing& ring, Code a, InverseKind kind, unsigned k) {
  WitnessSet out;
  out.kind = std::string(kind_tag(kind));
  out.element = a;
  out.k_used = k;
  SystemAux<Code> aux;
  std::vector<Code> d;
  std::vector<Code> mp;
  std::vector<Code> wd;
  if (kind == InverseKind::DMP) {
    d = solve(ring, a, InverseKind::DRAZIN, k, {});
    mp = solve(ring, a, InverseKind::MP, k, {});
    if (d.empty() || mp.empty()) return out;
    aux.drazin = &d.front();
    aux.mp = &mp.front();
  } else if (kind == InverseKind::WDMP) {
    // The solution set does not depend on the WD witness once k reaches the
    // index (w·a^k = a^k·a^d for every WD inverse w); the first one is used.
    wd = solve(ring, a, InverseKind::WD, k, {});
    mp = solve(ring, a, InverseKind::MP, k, {});
    if (wd.empty() || mp.empty()) return out;
    aux.wd = &wd.front();
    aux.mp = &mp.front();
  }
  out.witnesses = solve(ring, a, kind, k, aux);
  return out;
}

WitnessSet witness_set(const FiniteRing& ring, Code a, InverseKind kind) {
  return witness_set_at(ring, a, kind, ring_index(ring, a));
}

std::vector<Code> comm_set(const FiniteRing& ring, Code a) {
  std::vector<Code> out;
  for (std::size_t x = 0; x < ring.size(); ++x) {
    const Code c = static_cast<Code>(x);
    if (ring.mul(a, c) == ring.mul(c, a)) out.push_back(c);
  }
  return out;
}

std::vector<Code> comm2_set(const FiniteRing& ring, Code a) {
  const auto comm = comm_set(ring, a);
  std::vector<Code> out;
  for (std::size_t x = 0; x < ring.size(); ++x) {
    const Code c = static_cast<Code>(x);
    bool ok = true;
    for (Code y : comm) {
      if (ring.mul(c, y) != ring.mul(y, c)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(c);
  }
  return out;
}

bool is_quasinilpotent(const FiniteRing& ring, Code a) {
  for (Code x : comm_set(ring, a)) {
    if (!ring.is_unit(ring.add(ring.one(), ring.mul(x, a)))) return false;
  }
  return true;
}

bool is_nilpotent(const FiniteRing& ring, Code a) {
  return ring.pow(a, static_cast<unsigned>(ring.size())) == ring.zero();
}

bool is_idempotent(const FiniteRing& ring, Code a) { return ring.mul(a, a) == a; }

WitnessSet hirano_witness_set(const FiniteRing& ring, Code a) {
  WitnessSet out;
  out.kind = "HIRANO";
  out.element = a;
  out.k_used = ring_index(ring, a);
  const Code a2 = ring.mul(a, a);
  for (Code b : comm2_set(ring, a)) {
    if (ring.mul(ring.mul(b, a), b) != b) continue;
    if (is_quasinilpotent(ring, ring.sub(a2, ring.mul(a, b)))) out.witnesses.push_back(b);
  }
  return out;
}

Annihilators annihilators(const FiniteRing& ring, Code a) {
  Annihilators out;
  for (std::size_t x = 0; x < ring.size(); ++x) {
    const Code c = static_cast<Code>(x);
    if (ring.mul(c, a) == ring.zero()) out.left.push_back(c);
    if (ring.mul(a, c) == ring.zero()) out.right.push_back(c);
  }
  return out;
}

bool proper_check(const FiniteRing& ring) {
  for (std::size_t x = 0; x < ring.size(); ++x) {
    const Code c = static_cast<Code>(x);
    if (c != ring.zero() && ring.mul(ring.star(c), c) == ring.zero()) return false;
  }
  return true;
}

bool principal_inclusion(const FiniteRing& ring, Code a, Code b, Side side) {
  std::vector<std::uint8_t> in_b(ring.size(), 0);
  for (std::size_t r = 0; r < ring.size(); ++r) {
    const Code c = static_cast<Code>(r);
    in_b[side == Side::Right ? ring.mul(b, c) : ring.mul(c, b)] = 1;
  }
  for (std::size_t r = 0; r < ring.size(); ++r) {
    const Code c = static_cast<Code>(r);
    if (!in_b[side == Side::Right ? ring.mul(a, c) : ring.mul(c, a)]) return false;
  }
  return true;
}

std::vector<WitnessSet> witness_table_serial(const FiniteRing& ring, InverseKind kind) {
  std::vector<WitnessSet> out(ring.size());
  for (std::size_t a = 0; a < ring.size(); ++a) out[a] = witness_set(ring, static_cast<Code>(a), kind);
  return out;
}

std::vector<WitnessSet> witness_table_parallel(const FiniteRing& ring, InverseKind kind) {
  std::vector<WitnessSet> out(ring.size());
  const long n = static_cast<long>(ring.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long a = 0; a < n; ++a) out[static_cast<std::size_t>(a)] = witness_set(ring, static_cast<Code>(a), kind);
  return out;
}

RingOracle::RingOracle(const FiniteRing& ring) : ring_(ring) {}

const std::vector<WitnessSet>& RingOracle::table(InverseKind kind) const {
  const auto slot = static_cast<std::size_t>(kind);
  std::call_once(table_once_[slot], [&] { tables_[slot] = witness_table_parallel(ring_, kind); });
  return tables_[slot];
}

const WitnessSet& RingOracle::witnesses(InverseKind kind, Code a) const { return table(kind)[a]; }

void RingOracle::prefetch_all() const {
  for (auto k : kAllKinds) table(k);
  index(ring_.zero());
}

unsigned RingOracle::index(Code a) const {
  std::call_once(misc_once_, [&] {
    const std::size_t n = ring_.size();
    index_.resize(n);
    nilpotent_.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
      index_[x] = ring_index(ring_, static_cast<Code>(x));
      nilpotent_[x] = is_nilpotent(ring_, static_cast<Code>(x)) ? 1 : 0;
    }
    proper_ = proper_check(ring_);
  });
  return index_[a];
}

bool RingOracle::nilpotent(Code a) const {
  index(a);
  return nilpotent_[a] != 0;
}

bool RingOracle::proper() const {
  index(ring_.zero());
  return proper_;
}

bool RingOracle::hirano(Code a) const {
  std::call_once(hirano_once_, [&] {
    const long n = static_cast<long>(ring_.size());
    hirano_.assign(ring_.size(), 0);
#pragma omp parallel for schedule(dynamic, 4)
    for (long x = 0; x < n; ++x) {
      hirano_[static_cast<std::size_t>(x)] = hirano_witness_set(ring_, static_cast<Code>(x)).empty() ? 0 : 1;
    }
  });
  return hirano_[a] != 0;
}

bool RingOracle::Sets::subset(std::size_t i, std::size_t j) const {
  const std::uint64_t* bi = bits.data() + i * words;
  const std::uint64_t* bj = bits.data() + j * words;
  for (std::size_t w = 0; w < words; ++w) {
    if (bi[w] & ~bj[w]) return false;
  }
  return true;
}

const RingOracle::Sets& RingOracle::sets(SetKind which) const {
  std::call_once(sets_once_[which], [&] {
    const std::size_t n = ring_.size();
    Sets& s = sets_[which];
    s.words = (n + 63) / 64;
    s.bits.assign(n * s.words, 0);
    for (std::size_t a = 0; a < n; ++a) {
      std::uint64_t* row = s.bits.data() + a * s.words;
      const Code ca = static_cast<Code>(a);
      for (std::size_t r = 0; r < n; ++r) {
        const Code cr = static_cast<Code>(r);
        std::size_t member = n;
        switch (which) {
          case kRightIdeal: member = ring_.mul(ca, cr); break;
          case kLeftIdeal: member = ring_.mul(cr, ca); break;
          case kLeftAnn: member = ring_.mul(cr, ca) == ring_.zero() ? r : n; break;
          case kRightAnn: member = ring_.mul(ca, cr) == ring_.zero() ? r : n; break;
          case kSetKinds: break;
        }
        if (member < n) row[member / 64] |= std::uint64_t{1} << (member % 64);
      }
    }
  });
  return sets_[which];
}

bool RingOracle::right_ideal_in(Code a, Code b) const { return sets(kRightIdeal).subset(a, b); }
bool RingOracle::left_ideal_in(Code a, Code b) const { return sets(kLeftIdeal).subset(a, b); }
bool RingOracle::left_ann_in(Code a, Code b) const { return sets(kLeftAnn).subset(a, b); }
bool RingOracle::right_ann_in(Code a, Code b) const { return sets(kRightAnn).subset(a, b); }

}  // namespace ginv
