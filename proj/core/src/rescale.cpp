#include "fourier/rescale.hpp"

#include "fourier/error.hpp"

namespace fourier {
namespace {

std::vector<Cyclotomic> row_norms(const ExactMatrix& s) {
  std::vector<Cyclotomic> norms(s.rank());
  for (std::size_t i = 0; i < s.rank(); ++i) {
    for (std::size_t j = 0; j < s.rank(); ++j) norms[i] += abs2(s(i, j));
  }
  return norms;
}

Permutation involution_of(const ExactMatrix& S) {
  auto sigma = find_conjugate_column_pairing(S);
  if (!sigma) {
    throw Error(ErrorCode::NotClosedUnderConjugation,
                "the entrywise conjugate of some column is not a column");
  }
  return *sigma;
}

// sqrt of a positive rational-valued cyclotomic and its inverse.
struct Root {
  Cyclotomic value;
  Cyclotomic inverse;
};

Root positive_root(const Rational& q) {
  const Cyclotomic r = sqrt_nonneg_rational(q);
  return {r, r * Cyclotomic(Rational(1) / q)};
}

}  // namespace

FourierTriple from_S(const ExactMatrix& S, unsigned max_precision_bits) {
  const std::size_t r = S.rank();
  if (r == 0) throw Error(ErrorCode::InvalidArgument, "empty matrix");
  FourierTriple t;
  t.S = S;
  t.s = ExactMatrix(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (!is_real_positive(S(i, 0), max_precision_bits)) {
      throw Error(ErrorCode::NonpositiveFirstColumn,
                  "S[" + std::to_string(i) + "][0] = " + to_string(S(i, 0)) +
                      " is not real and positive");
    }
    const Cyclotomic lead_inv = S(i, 0).inv();
    for (std::size_t j = 0; j < r; ++j) t.s(i, j) = S(i, j) * lead_inv;
  }
  t.P = ExactMatrix(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) t.P(i, j) = t.s(i, j) * t.s(0, j);
  }
  t.degrees = t.P.row(0);
  t.norms = row_norms(t.s);
  t.order = t.norms[0];
  t.involution = involution_of(S);
  return t;
}

FourierTriple from_P(const ExactMatrix& P) {
  const std::size_t r = P.rank();
  if (r == 0) throw Error(ErrorCode::InvalidArgument, "empty matrix");
  for (std::size_t i = 0; i < r; ++i) {
    if (!P(i, 0).is_one()) {
      throw Error(ErrorCode::InvalidFirstColumn,
                  "P[" + std::to_string(i) + "][0] = " + to_string(P(i, 0)) + ", expected 1");
    }
  }
  std::vector<Root> degree_roots;
  degree_roots.reserve(r);
  for (std::size_t j = 0; j < r; ++j) {
    const auto q = P(0, j).as_rational();
    if (!q) {
      throw Error(ErrorCode::IrrationalDegree,
                  "P[0][" + std::to_string(j) + "] = " + to_string(P(0, j)) + " is not rational");
    }
    if (sgn(*q) <= 0) {
      throw Error(ErrorCode::NonpositiveDegree,
                  "P[0][" + std::to_string(j) + "] = " + to_string(*q) + " is not positive");
    }
    degree_roots.push_back(positive_root(*q));
  }

  FourierTriple t;
  t.P = P;
  t.s = ExactMatrix(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) t.s(i, j) = P(i, j) * degree_roots[j].inverse;
  }
  t.norms = row_norms(t.s);
  t.S = ExactMatrix(r);
  for (std::size_t i = 0; i < r; ++i) {
    const auto d = t.norms[i].as_rational();
    if (!d) {
      throw Error(ErrorCode::IrrationalNorm,
                  "d_" + std::to_string(i) + " = " + to_string(t.norms[i]) + " is not rational");
    }
    const Cyclotomic norm_root_inv = positive_root(*d).inverse;
    for (std::size_t j = 0; j < r; ++j) t.S(i, j) = t.s(i, j) * norm_root_inv;
  }
  t.degrees = P.row(0);
  t.order = t.norms[0];
  t.involution = involution_of(t.S);
  return t;
}

FourierTriple from_s(const ExactMatrix& s) {
  ExactMatrix P(s.rank());
  for (std::size_t i = 0; i < s.rank(); ++i) {
    for (std::size_t j = 0; j < s.rank(); ++j) P(i, j) = s(i, j) * s(0, j);
  }
  return from_P(P);
}

bool roundtrip_check(const ExactMatrix& S, unsigned max_precision_bits) {
  const FourierTriple forward = from_S(S, max_precision_bits);
  return from_P(forward.P).S == S;
}

}  // namespace fourier
