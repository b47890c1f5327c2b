#include <gtest/gtest.h>

#include "fourier/cli/text.hpp"
#include "fourier/error.hpp"
#include "fourier/genlib.hpp"
#include "support/corpus.hpp"
#include "support/expect_error.hpp"
#include "support/fixtures.hpp"
#include "support/random_cyclotomic.hpp"

namespace fourier::cli {
namespace {

using testing::E;
using testing::Q;

using Pos = std::pair<std::size_t, std::size_t>;

// Position of a ParseError, or (0, 0) when nothing was thrown.
std::pair<std::size_t, std::size_t> error_position(const std::string& text, Form fallback = Form::S) {
  try {
    parse_matrix(text, fallback, "t");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.source(), "t");
    return {e.line(), e.column()};
  }
  return {0, 0};
}

TEST(Text, RationalRows) {
  const MatrixDocument doc = parse_matrix("1, 1\n1, -1\n");
  EXPECT_EQ(doc.form, Form::S);
  EXPECT_EQ(doc.rank, 2u);
  EXPECT_EQ(doc.matrix(), (ExactMatrix{{1L, 1L}, {1L, -1L}}));
}

TEST(Text, RootsOfUnity) {
  const MatrixDocument doc = parse_matrix("1, E(3), E(3)^2", Form::degrees);
  ASSERT_EQ(doc.rows.size(), 1u);
  EXPECT_EQ(doc.rows[0], (std::vector<Cyclotomic>{1L, E(3), E(3, 2)}));
}

TEST(Text, Expressions) {
  EXPECT_EQ(parse_cyclotomic("1/2 + 3/2*E(8)^3"), Cyclotomic(Q(1, 2)) + Q(3, 2) * E(8, 3));
  EXPECT_EQ(parse_cyclotomic("-E(5)^2 - E(5)^3"), testing::golden_ratio());
  EXPECT_EQ(parse_cyclotomic("E(4)^-1"), -E(4));
  EXPECT_EQ(parse_cyclotomic("  -7/3  "), Cyclotomic(Q(-7, 3)));
  EXPECT_EQ(parse_cyclotomic("2*E(1)"), Cyclotomic(2L));
  EXPECT_EQ(parse_cyclotomic("E(6)^7"), E(6));
}

TEST(Text, HeaderOverridesFallback) {
  const MatrixDocument doc = parse_matrix("# comment\n\nform: P\n1, 1\n1, -1  # trailing\n", Form::S);
  EXPECT_EQ(doc.form, Form::P);
  EXPECT_EQ(doc.rank, 2u);
}

TEST(Text, LambdaTable) {
  const MatrixDocument doc = parse_matrix("form: lambda-table\nrank: 2\n1,1,1,3\n0,0,0,1\n1,1,0,4\n");
  EXPECT_EQ(doc.rank, 2u);
  ASSERT_EQ(doc.lambda.size(), 3u);
  EXPECT_EQ(doc.lambda.front().i, 0u);  // sorted
  const Tensor3 t = doc.lambda_tensor();
  EXPECT_EQ(t(1, 1, 0), Cyclotomic(4L));
  EXPECT_EQ(t(1, 1, 1), Cyclotomic(3L));
  EXPECT_TRUE(t(0, 1, 1).is_zero());
}

TEST(Text, ErrorPositions) {
  EXPECT_EQ(error_position("1, 1\n1, E(3\n"), (Pos{2, 7}));
  EXPECT_EQ(error_position("1, 1/0\n1, 1\n"), (Pos{1, 6}));
  EXPECT_EQ(error_position("1, x\n1, 1\n"), (Pos{1, 4}));
  EXPECT_EQ(error_position("1, 1\n1\n").first, 2u);
  EXPECT_EQ(error_position("1, 1\nform: P\n").first, 2u);
  EXPECT_EQ(error_position("colour: red\n1\n").first, 1u);
  EXPECT_EQ(error_position("form: Q\n1\n").first, 1u);
  EXPECT_EQ(error_position("# nothing\n").first, 2u);
  EXPECT_EQ(error_position("rank: 2\n0,0,0,1\n0,0,0,1\n", Form::lambda_table).first, 3u);
  EXPECT_EQ(error_position("rank: 2\n0,0,2,1\n", Form::lambda_table).first, 2u);
  EXPECT_EQ(error_position("1, E(0)\n1, 1\n").first, 1u);
  EXPECT_EQ(error_position("1, 2 3\n1, 1\n"), (Pos{1, 6}));
  EXPECT_ERROR_CODE(parse_cyclotomic("1 +"), ErrorCode::ParseError);
  EXPECT_ERROR_CODE(parse_cyclotomic(""), ErrorCode::ParseError);
}

TEST(Text, RandomRoundTrip500) {
  testing::RandomCyclotomic gen(20240611u, {1, 2, 3, 4, 5, 7, 8, 9, 12, 15, 16, 20, 24, 60});
  for (int trial = 0; trial < 500; ++trial) {
    const Cyclotomic x = gen();
    const std::string text = to_string(x);
    EXPECT_EQ(parse_cyclotomic(text), x) << text;
  }
}

TEST(Text, DocumentRoundTrip) {
  for (const auto& member : testing::abelian_corpus()) {
    const MatrixDocument p = matrix_document(Form::P, member.P, "x");
    EXPECT_EQ(parse_matrix(print(p), Form::S, "x"), p) << member.spec.name();
    const MatrixDocument s = matrix_document(Form::S, member.triple.S, "x");
    EXPECT_EQ(parse_matrix(print(s), Form::P, "x"), s) << member.spec.name();
  }
  const MatrixDocument lambda = lambda_document(rank2_calgebra(Rational(3, 2)).lambda, "x");
  EXPECT_EQ(parse_matrix(print(lambda), Form::S, "x"), lambda);
  const MatrixDocument degrees = degrees_document({1L, 4L, Cyclotomic(Q(9, 2))}, "x");
  EXPECT_EQ(parse_matrix(print(degrees), Form::S, "x"), degrees);
}

TEST(Text, RandomMatrixRoundTrip) {
  testing::RandomCyclotomic gen(7u);
  for (std::size_t rank = 1; rank <= 5; ++rank) {
    ExactMatrix m(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      for (std::size_t j = 0; j < rank; ++j) m(i, j) = gen();
    }
    const MatrixDocument doc = matrix_document(Form::s, m, "r");
    EXPECT_EQ(parse_matrix(print(doc), Form::S, "r"), doc);
  }
}

}  // namespace
}  // namespace fourier::cli
