#include <gtest/gtest.h>

#include "fourier/error.hpp"
#include "fourier/genlib.hpp"
#include "fourier/matrix.hpp"
#include "support/corpus.hpp"
#include "support/random_cyclotomic.hpp"

namespace fourier {
namespace {

using testing::E;
using testing::Q;

ExactMatrix dft2() {
  const Cyclotomic h = sqrt_nonneg_rational(Rational(1, 2));
  return ExactMatrix{{h, h}, {h, -h}};
}

ExactMatrix random_matrix(testing::RandomCyclotomic& gen, std::size_t r) {
  ExactMatrix m(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) m(i, j) = gen();
  }
  return m;
}

TEST(Matrix, ProductsAndTransforms) {
  const ExactMatrix a{{1L, E(3)}, {Q(1, 2), E(4)}};
  EXPECT_EQ(matmul(ExactMatrix::identity(2), a), a);
  const ExactMatrix rational{{1L, 2L}, {Q(3, 4), -5L}};
  EXPECT_EQ(conj_entrywise(rational), rational);
  EXPECT_EQ(matmul(dft2(), dft2()), ExactMatrix::identity(2));
  EXPECT_EQ(transpose(a)(0, 1), Q(1, 2));
  EXPECT_EQ(conj_transpose(a)(1, 0), E(3, 2));
  EXPECT_THROW(matmul(a, ExactMatrix::identity(3)), Error);
}

TEST(Matrix, RankMismatchCode) {
  try {
    ExactMatrix::from_rows({{1L, 2L}, {3L}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankMismatch);
  }
}

TEST(Matrix, UnitaryAndSymmetric) {
  EXPECT_TRUE(is_unitary(ExactMatrix::identity(3)));
  EXPECT_FALSE(is_symmetric(ExactMatrix{{1L, 2L}, {3L, 4L}}));
  // (1/sqrt(n+1)) [[1, sqrt n], [sqrt n, -1]] for n = 4
  const Cyclotomic c = sqrt_nonneg_rational(Rational(1, 5));
  const ExactMatrix m = c * ExactMatrix{{1L, 2L}, {2L, -1L}};
  EXPECT_TRUE(is_unitary(m));
  EXPECT_TRUE(is_symmetric(m));
  EXPECT_FALSE(is_unitary(ExactMatrix{{1L, 1L}, {1L, -1L}}));
}

TEST(Matrix, Determinants) {
  EXPECT_EQ(determinant(ExactMatrix::identity(4)), Q(1));
  EXPECT_EQ((determinant(ExactMatrix{{1L, 1L}, {1L, -1L}})), (Q(-2)));
  const Cyclotomic d = determinant(abelian_character_table({{3}}));
  EXPECT_EQ(abs2(d), Q(27));
  EXPECT_FALSE(d.is_rational());
  // needs a row swap
  EXPECT_EQ((determinant(ExactMatrix{{0L, 1L}, {1L, 0L}})), (Q(-1)));
  EXPECT_TRUE(determinant(ExactMatrix{{1L, 2L}, {2L, 4L}}).is_zero());
}

TEST(Matrix, DeterminantMatchesLeibnizOnRandomMatrices) {
  testing::RandomCyclotomic gen(11, {1, 3, 4, 8, 12, 24});
  for (int trial = 0; trial < 20; ++trial) {
    const ExactMatrix m = random_matrix(gen, 3);
    Cyclotomic leibniz;
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    for (int p = 0; p < 6; ++p) {
      Cyclotomic term = m(0, perms[p][0]) * m(1, perms[p][1]) * m(2, perms[p][2]);
      leibniz += p < 3 ? term : -term;
    }
    EXPECT_EQ(determinant(m), leibniz);
  }
}

TEST(Matrix, ScaledPermutation) {
  auto v = as_scaled_permutation(Q(3) * ExactMatrix::identity(3));
  ASSERT_TRUE(v.is_permutation);
  EXPECT_EQ(*v.permutation, (Permutation{0, 1, 2}));
  EXPECT_EQ(*v.scale, Q(3));

  v = as_scaled_permutation(ExactMatrix{{0L, 2L}, {2L, 0L}});
  ASSERT_TRUE(v.is_permutation);
  EXPECT_EQ(*v.permutation, (Permutation{1, 0}));
  EXPECT_EQ(*v.scale, Q(2));

  v = as_scaled_permutation(ExactMatrix{{1L, 1L}, {1L, -1L}});
  EXPECT_FALSE(v.is_permutation);
  EXPECT_FALSE(v.permutation.has_value());
  EXPECT_FALSE(as_scaled_permutation(ExactMatrix{{1L, 0L}, {0L, 2L}}).is_permutation);
}

TEST(Matrix, ConjugateColumnPairing) {
  const ExactMatrix real{{1L, 2L}, {3L, 5L}};
  EXPECT_EQ(*find_conjugate_column_pairing(real), (Permutation{0, 1}));
  EXPECT_EQ((*find_conjugate_column_pairing(abelian_character_table({{3}}))), (Permutation{0, 2, 1}));
  EXPECT_FALSE(find_conjugate_column_pairing(ExactMatrix{{1L, E(5)}, {1L, 1L}}).has_value());
  try {
    find_conjugate_column_pairing(ExactMatrix{{1L, 1L}, {2L, 2L}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AmbiguousPairing);
  }
}

TEST(MatrixProperty, MatmulIsAssociative) {
  testing::RandomCyclotomic gen(5, {1, 2, 3, 4, 5, 6, 8, 10, 12});
  for (std::size_t r = 1; r <= 4; ++r) {
    for (int trial = 0; trial < 5; ++trial) {
      const ExactMatrix a = random_matrix(gen, r), b = random_matrix(gen, r), c = random_matrix(gen, r);
      EXPECT_EQ(matmul(matmul(a, b), c), matmul(a, matmul(b, c)));
    }
  }
}

TEST(MatrixProperty, UnitaryHasUnitDeterminant) {
  for (const auto& m : testing::abelian_corpus()) {
    if (m.triple.rank() > 9) continue;
    ASSERT_TRUE(is_unitary(m.triple.S)) << m.spec.name();
    EXPECT_EQ(abs2(determinant(m.triple.S)), Q(1)) << m.spec.name();
  }
  EXPECT_EQ(abs2(determinant(dft2())), Q(1));
}

TEST(MatrixProperty, PairingIsAnInvolution) {
  for (const auto& m : testing::abelian_corpus()) {
    const auto sigma = find_conjugate_column_pairing(m.P);
    ASSERT_TRUE(sigma) << m.spec.name();
    for (std::size_t j = 0; j < sigma->size(); ++j) EXPECT_EQ((*sigma)[(*sigma)[j]], j);
  }
}

}  // namespace
}  // namespace fourier
