#include <gtest/gtest.h>

#include "ginv/error.hpp"
#include "ginv/inverses.hpp"
#include "ginv/matrix_gen.hpp"

using namespace ginv;

namespace {

Scalar q(std::int64_t n, std::int64_t d = 1) { return Scalar(Rational(n, d)); }

Matrix I(std::size_t n) { return Matrix::identity(n); }

// Independent restatement of the WD equations (does not go through the
// shared system code).
bool wd_by_hand(const Matrix& a, const Matrix& x, unsigned k) {
  Matrix ak = I(a.n());
  for (unsigned i = 0; i < k; ++i) ak = ak * a;
  Matrix ak1 = ak * a;
  return a * x * a == a && ak1 * x == ak && x * ak1 == ak;
}

bool penrose_by_hand(const Matrix& a, const Matrix& x) {
  Matrix ax = a * x;
  Matrix xa = x * a;
  return ax * a == a && xa * x == x && ax.conj_transpose() == ax && xa.conj_transpose() == xa;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(VerifyDefinition, Examples) {
  Matrix p{{1, 1}, {0, 0}};
  EXPECT_TRUE(verify_definition(InverseKind::WD, p, p, 1));
  EXPECT_TRUE(verify_definition(InverseKind::MP, I(3), I(3), 1));
  EXPECT_FALSE(verify_definition(InverseKind::WD, Matrix{{0, 1}, {0, 0}}, Matrix::zero(2), 2));
  EXPECT_EQ(code_of([&] { verify_definition(InverseKind::WDMP, p, p, 1); }), ErrorCode::MissingWitness);
  EXPECT_EQ(code_of([&] { verify_definition(InverseKind::MP, p, I(3), 1); }), ErrorCode::DimensionMismatch);
}

TEST(MpInverse, Examples) {
  Matrix a{{1, 1}, {0, 0}};
  Matrix expected{{q(1, 2), 0}, {q(1, 2), 0}};
  ASSERT_TRUE(penrose_by_hand(a, expected));
  EXPECT_EQ(mp_inverse(a).value, expected);
  EXPECT_EQ(mp_inverse(I(4)).value, I(4));
  Matrix proj{{1, 0}, {0, 0}};
  EXPECT_EQ(mp_inverse(proj).value, proj);
  EXPECT_EQ(mp_inverse(Matrix::zero(3)).value, Matrix::zero(3));
  Matrix c({{Scalar::i(), 0}, {0, 0}}, Field::QI);
  EXPECT_EQ(mp_inverse(c).value, Matrix({{-Scalar::i(), 0}, {0, 0}}, Field::QI));
}

TEST(DrazinInverse, Examples) {
  EXPECT_EQ(drazin_inverse(Matrix{{0, 1}, {0, 0}}).value, Matrix::zero(2));
  EXPECT_EQ(drazin_inverse(Matrix{{0, 1}, {0, 0}}).k_used, 2u);
  Matrix inv{{2, 1}, {1, 1}};
  EXPECT_EQ(drazin_inverse(inv).value, (Matrix{{1, -1}, {-1, 2}}));
  EXPECT_EQ(drazin_inverse(inv).k_used, 1u);
  Matrix p{{1, 1}, {0, 0}};
  EXPECT_EQ(drazin_inverse(p).value, p);
}

TEST(GroupInverse, Examples) {
  Matrix p{{1, 1}, {0, 0}};
  EXPECT_EQ(group_inverse(p).value, p);
  EXPECT_EQ(group_inverse(I(3)).value, I(3));
  EXPECT_EQ(code_of([] { group_inverse(Matrix{{0, 1}, {0, 0}}); }), ErrorCode::IndexTooLarge);
  EXPECT_EQ(code_of([] { core_inverse(Matrix{{0, 1}, {0, 0}}); }), ErrorCode::IndexTooLarge);
}

TEST(IsEp, Examples) {
  EXPECT_TRUE(is_ep(Matrix{{2, 1}, {1, 0}}));
  EXPECT_FALSE(is_ep(Matrix{{1, 1}, {0, 0}}));
  EXPECT_TRUE(is_ep(Matrix{{2, 1}, {1, 1}}));
}

TEST(CorePseudoCoreDmp, Examples) {
  Matrix p{{1, 0}, {0, 0}};
  EXPECT_EQ(core_inverse(p).value, p);
  EXPECT_EQ(pseudo_core_inverse(p).value, p);
  EXPECT_EQ(dmp_inverse(p).value, p);
  Matrix inv{{2, 1}, {1, 1}};
  Matrix inv_inv{{1, -1}, {-1, 2}};
  EXPECT_EQ(core_inverse(inv).value, inv_inv);
  EXPECT_EQ(pseudo_core_inverse(inv).value, inv_inv);
  EXPECT_EQ(dmp_inverse(inv).value, inv_inv);
  // a = [[1,1],[0,0]]: a^d = a, so the DMP inverse is a·a·a† = a·a†.
  Matrix a{{1, 1}, {0, 0}};
  Matrix dmp = dmp_inverse(a).value;
  EXPECT_EQ(dmp, (Matrix{{1, 0}, {0, 0}}));
  EXPECT_TRUE(dmp * a * dmp == dmp);
  EXPECT_TRUE(dmp * a == a * a);
  EXPECT_TRUE(a * dmp == a * mp_inverse(a).value);
}

TEST(WdCanonical, Examples) {
  Matrix p{{1, 1}, {0, 0}};
  EXPECT_EQ(wd_canonical(p).value, p);

  Matrix a{{2, 0, 0}, {0, 0, 1}, {0, 0, 0}};
  Matrix expected{{q(1, 2), 0, 0}, {0, 0, 0}, {0, 1, 0}};
  ASSERT_TRUE(wd_by_hand(a, expected, 2));
  auto r = wd_canonical(a);
  EXPECT_EQ(r.value, expected);
  EXPECT_EQ(r.k_used, 2u);

  Matrix inv{{2, 1}, {1, 1}};
  EXPECT_EQ(wd_canonical(inv).value, (Matrix{{1, -1}, {-1, 2}}));
  EXPECT_EQ(wd_canonical(Matrix::zero(2)).value, Matrix::zero(2));
}

TEST(WdFamilySample, Examples) {
  Matrix inv{{2, 1}, {1, 1}};
  for (const auto& r : wd_family_sample(inv, 1, 3)) EXPECT_EQ(r.value, (Matrix{{1, -1}, {-1, 2}}));

  Matrix a{{0, 1, 0}, {0, 0, 0}, {0, 0, 1}};
  auto samples = wd_family_sample(a, 7, 3);
  ASSERT_EQ(samples.size(), 3u);
  for (const auto& s : samples) EXPECT_TRUE(wd_by_hand(a, s.value, 2));
  EXPECT_NE(samples[0].value, samples[1].value);

  auto again = wd_family_sample(a, 7, 3);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(samples[i].value, again[i].value);
}

TEST(WdmpInverse, Examples) {
  Matrix a{{1, 1}, {0, 0}};
  auto y = wdmp_inverse(a);
  EXPECT_EQ(y.value, (Matrix{{1, 0}, {0, 0}}));
  ASSERT_TRUE(y.witness_wd.has_value());
  EXPECT_EQ(*y.witness_wd, a);
  EXPECT_EQ(y.value * a * y.value, y.value);
  EXPECT_EQ(a * y.value, a * mp_inverse(a).value);
  EXPECT_EQ(y.value * a, a * a);

  Matrix inv{{2, 1}, {1, 1}};
  EXPECT_EQ(wdmp_inverse(inv).value, (Matrix{{1, -1}, {-1, 2}}));
  Matrix p{{1, 0}, {0, 0}};
  EXPECT_EQ(wdmp_inverse(p).value, p);

  Matrix bad{{0, 1}, {0, 0}};
  EXPECT_EQ(code_of([&] { wdmp_inverse(a, &bad); }), ErrorCode::InvalidWitness);
}

TEST(Hirano, Examples) {
  EXPECT_TRUE(hirano_invertible(Matrix{{1, 1}, {0, 0}}));
  EXPECT_FALSE(hirano_invertible(Matrix{{2, 0}, {0, 0}}));
  EXPECT_TRUE(hirano_invertible(Matrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
}

// The WDMP value w·a·a† moves with the WD witness w once a has a nilpotent
// part of index >= 2; only the solution set is witness-independent.
TEST(WdmpWitnessDependence, NilpotentJordanBlock) {
  Matrix a{{0, 1}, {0, 0}};
  Matrix w1{{0, 0}, {1, 0}};
  Matrix w2{{1, 0}, {1, 0}};
  ASSERT_TRUE(wd_by_hand(a, w1, 2));
  ASSERT_TRUE(wd_by_hand(a, w2, 2));
  Matrix y1 = wdmp_inverse(a, &w1).value;
  Matrix y2 = wdmp_inverse(a, &w2).value;
  EXPECT_NE(y1, y2);
  // Both solve the WDMP system relative to either witness.
  EXPECT_TRUE(verify_definition(InverseKind::WDMP, a, y1, 2, &w2));
  EXPECT_TRUE(verify_definition(InverseKind::WDMP, a, y2, 2, &w1));
  // Neither is the right pseudo core inverse of a, which is 0.
  EXPECT_EQ(right_pseudo_core_inverse(a).value, Matrix::zero(2));
  EXPECT_FALSE(verify_definition(InverseKind::RIGHT_PSEUDO_CORE, a, y1, 2));
}

class EngineFuzz : public ::testing::TestWithParam<Field> {};

TEST_P(EngineFuzz, ConstructionsVerifyAndAreUnique) {
  MatrixGenerator gen(101);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + gen.below(5);
    Matrix a = gen.any(n, GetParam());
    const unsigned idx = drazin_index(a).index;
    const unsigned k = positive_index(a);

    Matrix mp = mp_inverse(a).value;
    EXPECT_TRUE(penrose_by_hand(a, mp));
    EXPECT_EQ(mp, mp_inverse(a.conj_transpose()).value.conj_transpose());

    Matrix d = drazin_inverse(a).value;
    // Same Drazin inverse from a larger exponent.
    Matrix ak1 = a.pow(k + 1);
    EXPECT_EQ(d, ak1 * mp_inverse(a.pow(2 * k + 3)).value * ak1);

    EXPECT_EQ(pseudo_core_inverse(a).value, pseudo_core_inverse(a).value);
    EXPECT_NO_THROW(dmp_inverse(a));
    EXPECT_NO_THROW(right_pseudo_core_inverse(a));
    if (idx <= 1) {
      EXPECT_EQ(group_inverse(a).value, d);
      EXPECT_NO_THROW(core_inverse(a));
    }

    auto w = wd_canonical(a);
    EXPECT_NO_THROW(drazin_inverse(a));  // WD => Drazin
    EXPECT_TRUE(wd_by_hand(a, w.value, k));
    for (const auto& s : wd_family_sample(a, static_cast<std::uint64_t>(t), 3)) {
      EXPECT_TRUE(wd_by_hand(a, s.value, k));
      EXPECT_TRUE(wdmp_inverse(a, &s.value).verified);
    }
  }
}

TEST_P(EngineFuzz, ProjectorAndWdmpIdentities) {
  MatrixGenerator gen(202);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 1 + gen.below(5);
    Matrix a = gen.any(n, GetParam());
    const unsigned k = positive_index(a);
    const Matrix one = I(n);
    const Matrix ak = a.pow(k);
    const Matrix mp = mp_inverse(a).value;
    for (const auto& ws : wd_family_sample(a, static_cast<std::uint64_t>(t) + 1000, 2)) {
      const Matrix& x = ws.value;
      const Matrix ax = a * x;
      const Matrix xa = x * a;
      EXPECT_EQ(ax * ax, ax);
      EXPECT_EQ(xa * xa, xa);
      EXPECT_EQ(ak * (one - ax), Matrix::zero(n));
      EXPECT_EQ((one - xa) * ak, Matrix::zero(n));

      const Matrix y = wdmp_inverse(a, &x).value;
      const Matrix ay = a * y;
      const Matrix ya = y * a;
      EXPECT_EQ(a * y * ak, ak);                        // (i)
      EXPECT_EQ(ay * ay, ay);                           // (ii)
      EXPECT_EQ(ya * ya, ya);
      EXPECT_EQ((one - ya) * ak, Matrix::zero(n));      // (iii)
      EXPECT_EQ(y * ay.pow(k), y);                      // (iv)
      EXPECT_EQ(ak * a * y * a, ak * a);                // (v)
      EXPECT_EQ(y * ak * a * y, ak * mp);               // (vi)
      EXPECT_EQ(mp * a * y, mp);                        // (vii)
      EXPECT_TRUE(row_space_equal(y, a.conj_transpose()));
      EXPECT_TRUE(range_equal(a, y.conj_transpose()));
      EXPECT_TRUE(hirano_invertible(ay));
      EXPECT_TRUE(hirano_invertible(ya));
    }
  }
}

TEST_P(EngineFuzz, HermitianAndEpSuites) {
  MatrixGenerator gen(303);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 1 + gen.below(5);
    Matrix h = gen.hermitian(n, GetParam());
    const Matrix mp = mp_inverse(h).value;
    const auto y = wdmp_inverse(h);
    const Matrix& w = *y.witness_wd;
    const unsigned k = positive_index(h);
    EXPECT_TRUE(verify_definition(InverseKind::GROUP, h, mp * h * y.value, 1));
    EXPECT_EQ(h * h * y.value, h);
    EXPECT_EQ(y.value * y.value, w * mp);
    EXPECT_EQ(y.value * y.value, y.value * mp);
    const Matrix pa = mp * h;
    const Matrix wa = w * h;
    const Matrix wpa = wd_canonical(pa).value;
    EXPECT_TRUE(verify_definition(InverseKind::WDMP, pa, wa, positive_index(pa), &wpa));
    EXPECT_EQ(h * w * (h * mp).pow(k + 1), h * mp);

    Matrix e = gen.ep(n, GetParam());
    ASSERT_TRUE(is_ep(e));
    const Matrix g = group_inverse(e).value;
    EXPECT_TRUE(verify_definition(InverseKind::WD, e, g, positive_index(e)));
    EXPECT_TRUE(verify_definition(InverseKind::WDMP, e, g, positive_index(e), &g));
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, EngineFuzz, ::testing::Values(Field::Q, Field::QI));
