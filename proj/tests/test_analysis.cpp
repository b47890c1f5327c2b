#include <gtest/gtest.h>

#include "fourier/analysis.hpp"
#include "fourier/genlib.hpp"
#include "support/corpus.hpp"
#include "support/expect_error.hpp"
#include "support/fixtures.hpp"

namespace fourier {
namespace {

using testing::E;
using testing::Q;
using Index = std::vector<std::size_t>;

FourierTriple group(std::vector<std::int64_t> factors) {
  return from_P(abelian_character_table({std::move(factors)}));
}

std::vector<Cyclotomic> ints(std::initializer_list<long> xs) {
  std::vector<Cyclotomic> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

TEST(Duality, Examples) {
  const DualityReport z2 = duality_report(group({2}));
  EXPECT_EQ(z2.product, Q(2) * ExactMatrix::identity(2));
  EXPECT_TRUE(z2.is_self_dual);
  EXPECT_TRUE(z2.is_normalized);
  EXPECT_EQ(z2.multiplicities, ints({1, 1}));
  EXPECT_TRUE(z2.multiplicities_match_degrees);

  // P conj(P) for the Z3 table is 3I: rows of a character table are orthogonal
  const DualityReport z3 = duality_report(group({3}));
  EXPECT_EQ(z3.product, Q(3) * ExactMatrix::identity(3));
  EXPECT_TRUE(z3.is_self_dual);
  EXPECT_EQ(z3.multiplicities, ints({1, 1, 1}));
  // P P (no conjugate) is the conjugation swap
  EXPECT_EQ(*as_scaled_permutation(matmul(group({3}).P, group({3}).P)).permutation, (Permutation{0, 2, 1}));

  const DualityReport r2 = duality_report(from_P(rank2_family(4)));
  EXPECT_EQ(r2.multiplicities, ints({1, 4}));
  EXPECT_TRUE(r2.multiplicities_match_degrees);
  EXPECT_EQ(r2.product, Q(5) * ExactMatrix::identity(2));
  EXPECT_TRUE(r2.is_self_dual);

  const DualityReport skew = duality_report(from_P(ExactMatrix{{1L, 2L}, {1L, Q(-1, 2)}}));
  EXPECT_FALSE(skew.is_self_dual);
  EXPECT_FALSE(skew.product_matrix_verdict.is_permutation);
}

TEST(Integrality, Examples) {
  const CAlgebra v4 = build_calgebra(group({2, 2}));
  EXPECT_TRUE(integrality_condition(v4).passed);

  const auto r4 = integrality_condition(rank2_calgebra(4));
  ASSERT_FALSE(r4.passed);
  EXPECT_EQ(r4.witness, (Index{1, 1, 1}));
  EXPECT_EQ(*r4.value, Q(3, 2));

  EXPECT_TRUE(integrality_condition(rank2_calgebra(1)).passed);

  const auto r9 = integrality_condition(rank2_calgebra(9));
  ASSERT_FALSE(r9.passed);
  EXPECT_EQ(*r9.value, Q(8, 3));

  // (n - 1)/sqrt(n) at n = 3/2 is sqrt(6)/6
  const auto r32 = integrality_condition(rank2_calgebra(Rational(3, 2)));
  ASSERT_FALSE(r32.passed);
  EXPECT_EQ(r32.witness, (Index{1, 1, 1}));
  EXPECT_EQ(*r32.value * *r32.value, Q(1, 6));
  EXPECT_EQ(sign_real(*r32.value), Sign::positive);
  EXPECT_EQ(*r32.value, sqrt_nonneg_rational(Rational(1, 6)));

  CAlgebra irrational = rank2_calgebra(4);
  irrational.degrees[1] = sqrt_nonneg_rational(2);
  EXPECT_ERROR_CODE(integrality_condition(irrational), ErrorCode::IrrationalDegree);
}

TEST(Reconstruct, Examples) {
  const ExactMatrix P5 = abelian_character_table({{5}});
  const FourierTriple z5 = from_P(P5);
  EXPECT_EQ(reconstruct_fourier(build_calgebra(z5), P5), sqrt_nonneg_rational(Rational(1, 5)) * P5);

  const ExactMatrix P4 = abelian_character_table({{2, 2}});
  EXPECT_EQ(reconstruct_fourier(build_calgebra(from_P(P4)), P4), Q(1, 2) * P4);

  EXPECT_ERROR_CODE(reconstruct_fourier(rank2_calgebra(4), rank2_family(4)), ErrorCode::IntegralityFailed);
  EXPECT_ERROR_CODE(reconstruct_fourier(rank2_calgebra(2), ExactMatrix{{1L, 2L}, {1L, Q(-1, 2)}}),
                    ErrorCode::NotSelfDual);
  EXPECT_ERROR_CODE(reconstruct_fourier(rank2_calgebra(4), P5), ErrorCode::InvalidArgument);
}

TEST(SquareOrder, Examples) {
  const auto z9 = square_order_check(group({9}));
  EXPECT_EQ(z9.verdict, Verdict::holds);
  EXPECT_TRUE(z9.determinant->is_rational_integer());
  EXPECT_EQ(abs2(*z9.determinant), Q(19683) * Q(19683));

  const auto z3 = square_order_check(group({3}));
  EXPECT_EQ(z3.verdict, Verdict::vacuous);
  EXPECT_EQ(abs2(*z3.determinant), Q(27));

  EXPECT_EQ(square_order_check(group({2})).verdict, Verdict::not_applicable);
  EXPECT_EQ(square_order_check(group({3, 3})).verdict, Verdict::holds);
}

TEST(Screen, Examples) {
  EXPECT_TRUE(divisibility_screen(ints({1, 1, 1, 1})).consistent);
  const auto bad = divisibility_screen(ints({1, 2, 2}));
  EXPECT_FALSE(bad.consistent);
  EXPECT_EQ(*bad.witness, 1u);
  EXPECT_TRUE(divisibility_screen(ints({1, 2, 3})).consistent);
  const auto bad2 = divisibility_screen(ints({1, 2, 4, 4, 4}));
  EXPECT_FALSE(bad2.consistent);
  EXPECT_EQ(*bad2.witness, 1u);
  EXPECT_TRUE(divisibility_screen(ints({1})).consistent);
  EXPECT_ERROR_CODE(divisibility_screen({Q(1), Q(3, 2)}), ErrorCode::NonIntegerDegree);
  EXPECT_ERROR_CODE(divisibility_screen(ints({2, 2})), ErrorCode::InvalidArgument);
  EXPECT_ERROR_CODE(divisibility_screen(ints({1, -2})), ErrorCode::InvalidArgument);
}

TEST(Homogeneity, Examples) {
  EXPECT_EQ(*homogeneity(group({6})), Q(1));
  EXPECT_EQ(*homogeneity(from_P(rank2_family(4))), Q(4));
  EXPECT_FALSE(homogeneity(from_P(ExactMatrix{{1L, 1L, 2L}, {1L, 1L, -1L}, {1L, -1L, 0L}})).has_value());
  EXPECT_EQ(*homogeneity(from_S(ExactMatrix{{1L}})), Q(1));
}

TEST(DegreeOne, Examples) {
  const auto z5 = degree_one_check(group({5}));
  EXPECT_EQ(z5.verdict, Verdict::holds);
  EXPECT_EQ(z5.hypothesis, Hypothesis::homogeneous);
  EXPECT_TRUE(z5.unique_norm);
  EXPECT_TRUE(z5.unique_norm_agrees);

  EXPECT_ERROR_CODE(degree_one_check(from_P(rank2_family(4))), ErrorCode::HypothesisNotMet);

  // prime order 5 with integer degrees (1, 1, 3): the hypothesis is recognised,
  // but the table is not Fourier
  const FourierTriple prime = from_P(ExactMatrix{{1L, 1L, 3L}, {1L, 1L, -1L}, {1L, -1L, 0L}});
  EXPECT_EQ(hypothesis_of(prime), Hypothesis::prime_order);
  EXPECT_ERROR_CODE(degree_one_check(prime), ErrorCode::HypothesisNotMet);
}

TEST(DegreeOne, FibonacciIsAHomogeneousCounterexample) {
  // Rank 2, N_111 = 1, degrees (1, phi^2): homogeneous with t = phi^2.
  const FourierTriple fib = from_S(testing::fibonacci_S());
  ASSERT_TRUE(verify_fourier(fib.S, {.strict_nonnegative = true}).all_passed());
  const Cyclotomic phi = testing::golden_ratio();
  EXPECT_EQ(*homogeneity(fib), phi * phi);
  const auto result = degree_one_check(fib);
  EXPECT_EQ(result.hypothesis, Hypothesis::homogeneous);
  EXPECT_EQ(result.verdict, Verdict::counterexample);
  EXPECT_EQ(*result.witness, 1u);
  EXPECT_FALSE(result.unique_norm);
  EXPECT_TRUE(result.unique_norm_agrees);

  const ClassificationReport report = classify(fib);
  EXPECT_FALSE(report.unimodular_entries);
  EXPECT_EQ(report.unimodular_witness, (Index{0, 1}));
  EXPECT_FALSE(report.column_group.has_value());
}

TEST(Classify, KleinFour) {
  const auto report = classify(group({2, 2}));
  EXPECT_EQ(report.hypothesis, Hypothesis::homogeneous);
  EXPECT_TRUE(report.unimodular_entries);
  EXPECT_TRUE(report.degrees_all_one);
  ASSERT_TRUE(report.column_group);
  EXPECT_EQ(report.column_group->size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ((*report.column_group)[i][j], i ^ j);
  }
  EXPECT_EQ(*report.invariant_factors, (std::vector<std::int64_t>{2, 2}));
  EXPECT_EQ(report.is_elementary_abelian, std::optional<bool>(true));
  ASSERT_TRUE(report.cuntz);
  EXPECT_TRUE(report.cuntz->holds);
}

TEST(Classify, CyclicGroups) {
  const auto z4 = classify(group({4}));
  EXPECT_TRUE(z4.unimodular_entries);
  EXPECT_EQ(*z4.invariant_factors, std::vector<std::int64_t>{4});
  EXPECT_FALSE(z4.is_elementary_abelian.has_value());
  EXPECT_FALSE(z4.cuntz.has_value());
  EXPECT_EQ(*classify(group({2, 3})).invariant_factors, std::vector<std::int64_t>{6});
  EXPECT_EQ(*classify(group({6})).invariant_factors, std::vector<std::int64_t>{6});
  const auto z2 = classify(group({2}));
  EXPECT_EQ(z2.is_elementary_abelian, std::optional<bool>(true));
  EXPECT_TRUE(z2.cuntz->holds);
  EXPECT_EQ(*classify(from_S(ExactMatrix{{1L}})).invariant_factors, std::vector<std::int64_t>{});
}

TEST(Classify, Preconditions) {
  EXPECT_ERROR_CODE(classify(from_P(rank2_family(4))), ErrorCode::HypothesisNotMet);
  EXPECT_ERROR_CODE(classify(from_S(testing::ds3_S())), ErrorCode::HypothesisNotMet);
  // Galois conjugate of Fibonacci, reindexed: N_111 = -1, homogeneous, and
  // |s_11|^2 = phi^2 exceeds delta_1 = phi^-2.
  const Cyclotomic phi = testing::golden_ratio();
  const ExactMatrix S = (E(20) + E(20, 19)).inv() * ExactMatrix{{phi, 1L}, {1L, -phi}};
  ASSERT_TRUE(verify_fourier(S).all_passed());
  EXPECT_ERROR_CODE(classify(from_S(S)), ErrorCode::DominanceFailed);
}

TEST(InvariantFactors, FromCayleyTables) {
  // Z2 x Z4 as pairs (a, b) -> 4a + b
  std::vector<std::vector<std::size_t>> table(8, std::vector<std::size_t>(8));
  for (std::size_t x = 0; x < 8; ++x) {
    for (std::size_t y = 0; y < 8; ++y) table[x][y] = ((x / 4 + y / 4) % 2) * 4 + (x % 4 + y % 4) % 4;
  }
  EXPECT_EQ(invariant_factors_from_table(table), (std::vector<std::int64_t>{2, 4}));
}

TEST(PerfectSquares, Examples) {
  EXPECT_EQ(perfect_square_degrees_check(group({2, 2, 2})).verdict, Verdict::holds);
  EXPECT_EQ(perfect_square_degrees_check(group({3})).verdict, Verdict::not_applicable);
  const FourierTriple ds3 = from_S(testing::ds3_S());
  EXPECT_EQ(ds3.degrees, ints({1, 1, 4, 9, 9, 4, 4, 4}));
  EXPECT_EQ(perfect_square_degrees_check(ds3).verdict, Verdict::holds);
  EXPECT_EQ(degree_divisibility_check(ds3).verdict, Verdict::holds);
  EXPECT_EQ(norm_degree_identity(ds3).verdict, Verdict::holds);
  EXPECT_EQ(rational_calgebra_check(build_calgebra(ds3)).verdict, Verdict::holds);
  EXPECT_EQ(square_order_check(ds3).verdict, Verdict::not_applicable);
  EXPECT_TRUE(divisibility_screen(ds3.degrees).consistent);
}

TEST(AnalysisProperty, CorpusTheorems) {
  for (const auto& m : testing::abelian_corpus()) {
    const FourierTriple& t = m.triple;
    const DualityReport d = duality_report(t);
    EXPECT_TRUE(d.multiplicities_match_degrees) << m.spec.name();
    EXPECT_TRUE(d.is_self_dual) << m.spec.name();
    EXPECT_EQ(degree_divisibility_check(t).verdict, Verdict::holds) << m.spec.name();
    EXPECT_EQ(norm_degree_identity(t).verdict, Verdict::holds) << m.spec.name();
    EXPECT_TRUE(divisibility_screen(t.degrees).consistent) << m.spec.name();
    EXPECT_NE(square_order_check(t).verdict, Verdict::counterexample) << m.spec.name();
    EXPECT_EQ(degree_one_check(t).verdict, Verdict::holds) << m.spec.name();
    const auto report = classify(t);
    EXPECT_EQ(*report.invariant_factors, canonical_invariant_factors(m.spec.factors)) << m.spec.name();
    if (t.rank() <= 9) {
      const CAlgebra alg = build_calgebra(t);
      EXPECT_EQ(reconstruct_fourier(alg, m.P), t.S) << m.spec.name();
      EXPECT_NE(rational_calgebra_check(alg).verdict, Verdict::counterexample) << m.spec.name();
    }
  }
}

}  // namespace
}  // namespace fourier
