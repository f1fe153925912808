#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "ginv/error.hpp"
#include "ginv/ring_oracle.hpp"

using namespace ginv;

namespace {

const std::vector<std::string> kRoster = {"Zn:4", "Zn:5", "Zn:6", "Zn:8", "Zn:12", "M2:Z2"};

std::vector<Code> codes(std::initializer_list<int> xs) {
  std::vector<Code> out;
  for (int x : xs) out.push_back(static_cast<Code>(x));
  return out;
}

Code m2(const FiniteRing& r, const char* text) { return r.parse_element(text); }

class RosterTest : public ::testing::TestWithParam<std::string> {
 protected:
  FiniteRing ring = FiniteRing::build(GetParam());
  Code c(std::size_t x) const { return static_cast<Code>(x); }
};

}  // namespace

TEST(RingBuild, Examples) {
  auto z6 = FiniteRing::build("Zn:6");
  EXPECT_EQ(z6.size(), 6u);
  EXPECT_EQ(z6.units(), codes({1, 5}));
  EXPECT_TRUE(z6.commutative());

  auto m = FiniteRing::build("M2:Z2");
  EXPECT_EQ(m.size(), 16u);
  EXPECT_EQ(m.units().size(), 6u);
  EXPECT_FALSE(m.commutative());
  EXPECT_EQ(m.describe(m.one()), "[[1,0],[0,1]]");
  EXPECT_EQ(m.star(m2(m, "[[0,1],[0,0]]")), m2(m, "[[0,0],[1,0]]"));

  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code_of([] { FiniteRing::build("Zn:1"); }), ErrorCode::InvalidRing);
  EXPECT_EQ(code_of([] { FiniteRing::build("M2:Z4"); }), ErrorCode::InvalidRing);
  EXPECT_EQ(code_of([] { FiniteRing::build("M3:Z3"); }), ErrorCode::TooLarge);
  EXPECT_EQ(code_of([] { FiniteRing::build("Zn:5000"); }), ErrorCode::TooLarge);
  EXPECT_EQ(code_of([] { FiniteRing::build("Q"); }), ErrorCode::InvalidRing);
  EXPECT_NO_THROW(FiniteRing::build("Zn:5000", 8192));
}

TEST(RingBuild, CustomTables) {
  // Z2 x Z2 with the swap involution: (x, y)* = (y, x). Code = x + 2y.
  nlohmann::json j;
  j["name"] = "Z2xZ2-swap";
  j["size"] = 4;
  std::vector<std::vector<int>> add(4, std::vector<int>(4));
  std::vector<std::vector<int>> mul(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      add[a][b] = ((a & 1) ^ (b & 1)) | ((a & 2) ^ (b & 2));
      mul[a][b] = a & b;
    }
  }
  j["add"] = add;
  j["mul"] = mul;
  j["star"] = {0, 2, 1, 3};
  auto r = FiniteRing::from_json(j);
  EXPECT_EQ(r.size(), 4u);
  EXPECT_EQ(r.one(), 3);
  EXPECT_FALSE(proper_check(r));  // (1,0)*(1,0) = (0,1)(1,0) = 0

  j["star"] = {0, 1, 3, 2};  // not additive
  EXPECT_THROW(FiniteRing::from_json(j), Error);
}

TEST(WitnessSet, Examples) {
  auto z6 = FiniteRing::build("Zn:6");
  auto z4 = FiniteRing::build("Zn:4");
  auto wd = witness_set(z6, 2, InverseKind::WD);
  EXPECT_EQ(wd.k_used, 1u);
  EXPECT_EQ(wd.witnesses, codes({2, 5}));
  EXPECT_TRUE(witness_set(z4, 2, InverseKind::WD).empty());
  EXPECT_EQ(witness_set(z6, 3, InverseKind::MP).witnesses, codes({3}));
  EXPECT_EQ(witness_set(z6, 2, InverseKind::MP).witnesses, codes({2}));
  EXPECT_EQ(witness_set(z4, 2, InverseKind::DRAZIN).witnesses, codes({0}));
  EXPECT_EQ(witness_set(z4, 2, InverseKind::DRAZIN).k_used, 2u);
  EXPECT_TRUE(witness_set(z4, 2, InverseKind::GROUP).empty());
}

// Independent modular arithmetic, no tables involved.
TEST(WitnessSet, ZnMatchesDirectArithmetic) {
  for (unsigned n : {4u, 5u, 6u, 8u, 12u}) {
    auto ring = FiniteRing::build("Zn:" + std::to_string(n));
    for (unsigned a = 0; a < n; ++a) {
      std::vector<Code> mp;
      std::vector<Code> inner;
      for (unsigned x = 0; x < n; ++x) {
        const bool axa = a * x % n * a % n == a;
        const bool xax = x * a % n * x % n == x;
        if (axa) inner.push_back(static_cast<Code>(x));
        if (axa && xax) mp.push_back(static_cast<Code>(x));
      }
      EXPECT_EQ(witness_set(ring, static_cast<Code>(a), InverseKind::MP).witnesses, mp) << n << " " << a;
      EXPECT_EQ(witness_set(ring, static_cast<Code>(a), InverseKind::INNER).witnesses, inner) << n << " " << a;
    }
  }
}

TEST(Comm, Examples) {
  auto m = FiniteRing::build("M2:Z2");
  EXPECT_EQ(comm_set(m, m.one()).size(), 16u);
  // Matrices commuting with e11 over Z2 are the diagonal ones.
  auto e11 = m2(m, "[[1,0],[0,0]]");
  std::vector<Code> diag = {m2(m, "[[0,0],[0,0]]"), m2(m, "[[1,0],[0,0]]"), m2(m, "[[0,0],[0,1]]"),
                            m2(m, "[[1,0],[0,1]]")};
  std::sort(diag.begin(), diag.end());
  EXPECT_EQ(comm_set(m, e11), diag);
  EXPECT_EQ(comm2_set(m, e11), diag);
  auto z6 = FiniteRing::build("Zn:6");
  EXPECT_EQ(comm_set(z6, 4).size(), 6u);
}

TEST(Quasinilpotent, Examples) {
  EXPECT_TRUE(is_quasinilpotent(FiniteRing::build("Zn:4"), 2));
  EXPECT_FALSE(is_quasinilpotent(FiniteRing::build("Zn:6"), 2));
  for (unsigned n : {4u, 8u, 12u}) {
    auto ring = FiniteRing::build("Zn:" + std::to_string(n));
    for (std::size_t a = 0; a < n; ++a) {
      if (is_nilpotent(ring, static_cast<Code>(a))) EXPECT_TRUE(is_quasinilpotent(ring, static_cast<Code>(a)));
    }
  }
}

TEST(Hirano, Examples) {
  auto z6 = FiniteRing::build("Zn:6");
  auto z4 = FiniteRing::build("Zn:4");
  EXPECT_FALSE(hirano_witness_set(z6, 2).empty());
  EXPECT_FALSE(hirano_witness_set(z4, 2).empty());
  EXPECT_TRUE(hirano_witness_set(z6, 3).contains(3));
}

TEST(Annihilators, Examples) {
  auto z6 = FiniteRing::build("Zn:6");
  auto an = annihilators(z6, 2);
  EXPECT_EQ(an.left, codes({0, 3}));
  EXPECT_EQ(an.right, codes({0, 3}));
  EXPECT_EQ(annihilators(z6, 0).left.size(), 6u);
  EXPECT_EQ(annihilators(z6, 5).right, codes({0}));

  EXPECT_TRUE(proper_check(z6));
  auto m = FiniteRing::build("M2:Z2");
  EXPECT_FALSE(proper_check(m));
  auto ones = m2(m, "[[1,1],[1,1]]");
  EXPECT_EQ(m.mul(m.star(ones), ones), m.zero());
  for (std::size_t a = 0; a < 16; ++a) EXPECT_TRUE(principal_inclusion(m, static_cast<Code>(a), m.one(), Side::Right));
}

// WD witnesses can give different products w·a·a†, so the WDMP value is
// only determined as a solution set.
TEST(WdmpWitnessDependence, M2Z2) {
  auto m = FiniteRing::build("M2:Z2");
  const Code a = m2(m, "[[0,1],[0,0]]");
  const auto wd = witness_set(m, a, InverseKind::WD);
  const auto mp = witness_set(m, a, InverseKind::MP);
  ASSERT_EQ(mp.witnesses.size(), 1u);
  ASSERT_GE(wd.witnesses.size(), 2u);
  std::vector<Code> values;
  for (Code w : wd.witnesses) values.push_back(m.mul(m.mul(w, a), mp.witnesses[0]));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  EXPECT_GT(values.size(), 1u);
  EXPECT_EQ(witness_set(m, a, InverseKind::RIGHT_PSEUDO_CORE).witnesses, codes({0}));
}

TEST_P(RosterTest, UniquenessBound) {
  for (auto kind : kUniqueKinds) {
    for (std::size_t a = 0; a < ring.size(); ++a) {
      EXPECT_LE(witness_set(ring, c(a), kind).witnesses.size(), 1u) << kind_tag(kind) << " a=" << a;
    }
  }
}

TEST_P(RosterTest, WitnessesSatisfyTheirSystem) {
  for (auto kind : kAllKinds) {
    for (std::size_t a = 0; a < ring.size(); ++a) {
      const auto ws = witness_set(ring, c(a), kind);
      EXPECT_TRUE(std::is_sorted(ws.witnesses.begin(), ws.witnesses.end()));
      if (kind == InverseKind::INNER || kind == InverseKind::MP) {
        for (Code x : ws.witnesses) EXPECT_EQ(ring.mul(ring.mul(c(a), x), c(a)), c(a));
      }
    }
  }
}

TEST_P(RosterTest, WdMonotoneInK) {
  for (std::size_t a = 0; a < ring.size(); ++a) {
    for (unsigned k = 1; k < 5; ++k) {
      const auto lo = witness_set_at(ring, c(a), InverseKind::WD, k).witnesses;
      const auto hi = witness_set_at(ring, c(a), InverseKind::WD, k + 1).witnesses;
      EXPECT_TRUE(std::includes(hi.begin(), hi.end(), lo.begin(), lo.end())) << a << " k=" << k;
    }
  }
}

TEST_P(RosterTest, WdImpliesDrazin) {
  for (std::size_t a = 0; a < ring.size(); ++a) {
    if (!witness_set(ring, c(a), InverseKind::WD).empty()) {
      EXPECT_FALSE(witness_set(ring, c(a), InverseKind::DRAZIN).empty()) << a;
    }
  }
}

TEST_P(RosterTest, WdmpSolutionSetIndependentOfWitness) {
  for (std::size_t a = 0; a < ring.size(); ++a) {
    const auto ws = witness_set(ring, c(a), InverseKind::WD);
    const auto mp = witness_set(ring, c(a), InverseKind::MP);
    if (ws.empty() || mp.empty()) continue;
    const auto reference = witness_set(ring, c(a), InverseKind::WDMP).witnesses;
    EXPECT_FALSE(reference.empty());
    for (Code w : ws.witnesses) {
      EXPECT_EQ(wdmp_solutions_for(ring, c(a), w, ws.k_used), reference) << a << " w=" << w;
      const Code y = ring.mul(ring.mul(w, c(a)), mp.witnesses[0]);
      EXPECT_TRUE(std::binary_search(reference.begin(), reference.end(), y));
    }
  }
}

TEST_P(RosterTest, HiranoCriterion) {
  for (std::size_t a = 0; a < ring.size(); ++a) {
    const Code ca = c(a);
    const bool hirano = !hirano_witness_set(ring, ca).empty();
    const bool criterion = is_nilpotent(ring, ring.sub(ca, ring.pow(ca, 3)));
    EXPECT_EQ(hirano, criterion) << a;
    if (hirano) EXPECT_FALSE(witness_set(ring, ca, InverseKind::DRAZIN).empty()) << a;
  }
}

TEST_P(RosterTest, AnnihilatorLemma) {
  RingOracle oracle(ring);
  for (std::size_t a = 0; a < ring.size(); ++a) {
    for (std::size_t b = 0; b < ring.size(); ++b) {
      const bool right_in = principal_inclusion(ring, c(a), c(b), Side::Right);
      const bool left_in = principal_inclusion(ring, c(a), c(b), Side::Left);
      EXPECT_EQ(right_in, oracle.right_ideal_in(c(a), c(b)));
      EXPECT_EQ(left_in, oracle.left_ideal_in(c(a), c(b)));
      if (right_in) EXPECT_TRUE(oracle.left_ann_in(c(b), c(a)));
      if (left_in) EXPECT_TRUE(oracle.right_ann_in(c(b), c(a)));
      if (oracle.regular(c(b))) {
        if (oracle.left_ann_in(c(b), c(a))) EXPECT_TRUE(right_in);
        if (oracle.right_ann_in(c(b), c(a))) EXPECT_TRUE(left_in);
      }
    }
  }
}

TEST_P(RosterTest, IdempotentEquivalences) {
  RingOracle oracle(ring);
  const Code one = ring.one();
  for (std::size_t x = 0; x < ring.size(); ++x) {
    const Code cx = c(x);
    if (!is_idempotent(ring, cx)) continue;
    for (std::size_t a = 0; a < ring.size(); ++a) {
      for (std::size_t b = 0; b < ring.size(); ++b) {
        const Code ca = c(a);
        const Code cb = c(b);
        const Code diff = ring.sub(ca, cb);
        const bool lhs1 = ring.mul(ring.sub(one, cx), ca) == cb;
        const bool rhs1 = ring.mul(cx, cb) == ring.zero() && oracle.left_ann_in(cx, diff);
        EXPECT_EQ(lhs1, rhs1) << x << " " << a << " " << b;
        const bool lhs2 = ring.mul(ca, ring.sub(one, cx)) == cb;
        const bool rhs2 = ring.mul(cb, cx) == ring.zero() && oracle.right_ann_in(cx, diff);
        EXPECT_EQ(lhs2, rhs2) << x << " " << a << " " << b;
      }
    }
  }
}

TEST_P(RosterTest, ParallelTableMatchesSerial) {
  for (auto kind : kAllKinds) {
    const auto s = witness_table_serial(ring, kind);
    const auto p = witness_table_parallel(ring, kind);
    ASSERT_EQ(s.size(), p.size());
    for (std::size_t a = 0; a < s.size(); ++a) {
      EXPECT_EQ(s[a].witnesses, p[a].witnesses);
      EXPECT_EQ(s[a].k_used, p[a].k_used);
      EXPECT_EQ(witness_set_to_json(s[a]).dump(), witness_set_to_json(p[a]).dump());
    }
  }
}

TEST_P(RosterTest, IndexIsMinimal) {
  for (std::size_t a = 0; a < ring.size(); ++a) {
    const unsigned k = ring_index(ring, c(a));
    EXPECT_GE(k, 1u);
    EXPECT_FALSE(witness_set_at(ring, c(a), InverseKind::DRAZIN, k).empty());
    if (k > 1) EXPECT_TRUE(witness_set_at(ring, c(a), InverseKind::DRAZIN, k - 1).empty());
  }
}

INSTANTIATE_TEST_SUITE_P(Roster, RosterTest, ::testing::ValuesIn(kRoster),
                         [](const auto& info) {
                           std::string s = info.param;
                           std::replace(s.begin(), s.end(), ':', '_');
                           return s;
                         });
