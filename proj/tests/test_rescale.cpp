#include <gtest/gtest.h>

#include "fourier/error.hpp"
#include "fourier/genlib.hpp"
#include "fourier/rescale.hpp"
#include "support/corpus.hpp"
#include "support/expect_error.hpp"

namespace fourier {
namespace {

using testing::E;
using testing::Q;

TEST(Rescale, RankOne) {
  const FourierTriple t = from_S(ExactMatrix{{1L}});
  EXPECT_EQ(t.s, (ExactMatrix{{1L}}));
  EXPECT_EQ(t.P, (ExactMatrix{{1L}}));
  EXPECT_EQ(t.degrees, (std::vector<Cyclotomic>{Q(1)}));
  EXPECT_EQ(t.order, Q(1));
  EXPECT_TRUE(roundtrip_check(ExactMatrix{{1L}}));
}

TEST(Rescale, Z2FromS) {
  const Cyclotomic h = sqrt_nonneg_rational(Rational(1, 2));
  const ExactMatrix S{{h, h}, {h, -h}};
  const FourierTriple t = from_S(S);
  const ExactMatrix table{{1L, 1L}, {1L, -1L}};
  EXPECT_EQ(t.s, table);
  EXPECT_EQ(t.P, table);
  EXPECT_EQ(t.degrees, (std::vector<Cyclotomic>{Q(1), Q(1)}));
  EXPECT_EQ(t.norms, (std::vector<Cyclotomic>{Q(2), Q(2)}));
  EXPECT_EQ(t.order, Q(2));
  EXPECT_EQ(t.involution, (Permutation{0, 1}));
  EXPECT_TRUE(roundtrip_check(S));
  EXPECT_EQ(from_P(table).S, S);
}

TEST(Rescale, Z5FromGeneratedTable) {
  const ExactMatrix P = abelian_character_table({{5}});
  const ExactMatrix S = sqrt_nonneg_rational(Rational(1, 5)) * P;
  const FourierTriple t = from_S(S);
  EXPECT_EQ(t.degrees, std::vector<Cyclotomic>(5, Q(1)));
  EXPECT_EQ(t.order, Q(5));
  EXPECT_EQ(t.involution, (Permutation{0, 4, 3, 2, 1}));
}

TEST(Rescale, Rank2FamilyFromP) {
  const FourierTriple t = from_P(rank2_family(4));
  EXPECT_EQ(t.s, (ExactMatrix{{1L, 2L}, {1L, Q(-1, 2)}}));
  EXPECT_EQ(t.norms, (std::vector<Cyclotomic>{Q(5), Q(5, 4)}));
  EXPECT_EQ(t.S, (sqrt_nonneg_rational(Rational(1, 5)) * ExactMatrix{{1L, 2L}, {2L, -1L}}));
}

TEST(Rescale, KleinFourFromP) {
  const ExactMatrix P = abelian_character_table({{2, 2}});
  const FourierTriple t = from_P(P);
  EXPECT_EQ(t.S, Q(1, 2) * P);
  EXPECT_EQ(t.degrees, std::vector<Cyclotomic>(4, Q(1)));
  EXPECT_EQ(t.norms, std::vector<Cyclotomic>(4, Q(4)));
}

TEST(Rescale, Errors) {
  EXPECT_ERROR_CODE(from_S(ExactMatrix{{1L, 1L}, {-1L, 1L}}), ErrorCode::NonpositiveFirstColumn);
  EXPECT_ERROR_CODE(from_S(ExactMatrix{{1L, 1L}, {E(4), 1L}}), ErrorCode::NonpositiveFirstColumn);
  try {
    from_S(ExactMatrix{{1L, 1L}, {-1L, 1L}});
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("S[1][0]"), std::string::npos) << e.what();
  }
  EXPECT_ERROR_CODE(from_S(ExactMatrix{{1L, E(5)}, {1L, 1L}}), ErrorCode::NotClosedUnderConjugation);
  EXPECT_ERROR_CODE(from_P(ExactMatrix{{1L, sqrt_nonneg_rational(2)}, {1L, -1L}}), ErrorCode::IrrationalDegree);
  EXPECT_ERROR_CODE(from_P(ExactMatrix{{1L, -2L}, {1L, -1L}}), ErrorCode::NonpositiveDegree);
  EXPECT_ERROR_CODE(from_P(ExactMatrix{{1L, 1L}, {2L, -1L}}), ErrorCode::InvalidFirstColumn);
  // |1 + E(8)|^2 = 2 + sqrt(2)
  EXPECT_ERROR_CODE(from_P(ExactMatrix{{1L, 1L}, {1L, E(8) + Q(1)}}), ErrorCode::IrrationalNorm);
}

TEST(RescaleProperty, TripleInvariantsOnCorpus) {
  for (const auto& m : testing::abelian_corpus()) {
    const FourierTriple& t = m.triple;
    const std::size_t r = t.rank();
    Cyclotomic degree_sum;
    for (std::size_t j = 0; j < r; ++j) {
      EXPECT_EQ(t.P(0, j), t.s(0, j) * t.s(0, j));
      EXPECT_TRUE(t.P(j, 0).is_one());
      EXPECT_TRUE(t.s(j, 0).is_one());
      EXPECT_EQ(t.degrees[t.involution[j]], t.degrees[j]);
      EXPECT_EQ(sign_real(t.degrees[j]), Sign::positive);
      EXPECT_EQ(t.order, t.norms[j] * t.degrees[j]) << m.spec.name();
      degree_sum += t.degrees[j];
    }
    EXPECT_EQ(degree_sum, t.order);
    ExactMatrix gram = matmul(t.s, conj_transpose(t.s));
    EXPECT_EQ(gram, ExactMatrix::diagonal(t.norms)) << m.spec.name();
  }
}

TEST(RescaleProperty, RoundTripIsExactOnCorpus) {
  for (const auto& m : testing::abelian_corpus()) {
    EXPECT_TRUE(roundtrip_check(m.triple.S)) << m.spec.name();
    EXPECT_EQ(from_S(m.triple.S).P, m.P) << m.spec.name();
  }
}

TEST(RescaleProperty, TensorProductsRoundTrip) {
  const ExactMatrix S2 = from_P(abelian_character_table({{2}})).S;
  const ExactMatrix S3 = from_P(abelian_character_table({{3}})).S;
  EXPECT_TRUE(roundtrip_check(tensor_product(S2, S3)));
  EXPECT_TRUE(roundtrip_check(tensor_product(S3, S3)));
}

}  // namespace
}  // namespace fourier
