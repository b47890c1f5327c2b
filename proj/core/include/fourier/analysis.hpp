#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fourier/fusion.hpp"
#include "fourier/rescale.hpp"

namespace fourier {

/// Result of a theorem checker. A theorem violation is a counterexample
/// verdict, never an exception.
enum class Verdict { not_applicable, vacuous, holds, counterexample };

const char* to_string(Verdict v);

struct DualityReport {
  ExactMatrix product;  // P conj(P)
  PermutationVerdict product_matrix_verdict;
  /// P conj(P) = d_0 Pi for a permutation matrix Pi.
  bool is_self_dual = false;
  /// Self-dual with Pi = I.
  bool is_normalized = false;
  /// m_j = d_0 / d_j.
  std::vector<Cyclotomic> multiplicities;
  bool multiplicities_match_degrees = false;
  std::optional<std::size_t> mismatch;
};

DualityReport duality_report(const FourierTriple& triple);

struct IntegralityResult {
  bool passed = true;
  std::vector<std::size_t> witness;  // (i, j, k) on failure
  std::optional<Cyclotomic> value;
};

/// lambda_ijk sqrt(delta_k / (delta_i delta_j)) in Z for all i, j, k.
/// Throws IrrationalDegree unless every degree is rational.
IntegralityResult integrality_condition(const CAlgebra& alg);

/// s = P L with L = diag(1/sqrt(delta_j)), S_ij = s_ij / sqrt(d_i), returned
/// only if S passes verify_fourier. alg must carry the degrees of P.
/// Throws NotSelfDual, IntegralityFailed or FourierAxiomsFailed.
ExactMatrix reconstruct_fourier(const CAlgebra& alg, const ExactMatrix& P,
                                const FusionOptions& options = {});

struct SquareOrderResult {
  Verdict verdict = Verdict::not_applicable;
  std::optional<Cyclotomic> determinant;
};

/// Odd rank and det(P) in Z imply d_0 is a perfect square.
SquareOrderResult square_order_check(const FourierTriple& triple);

struct ScreenResult {
  bool consistent = true;
  std::optional<std::size_t> witness;
};

/// Inconsistent iff some j >= 1 with delta_j != 1 divides every delta_i, i >= 1.
/// Throws NonIntegerDegree for a non-integer entry and InvalidArgument
/// unless degrees[0] = 1 and every degree is positive.
ScreenResult divisibility_screen(const std::vector<Cyclotomic>& degrees);

/// t when delta_1 = ... = delta_{r-1} = t; rank 1 gives t = 1.
std::optional<Cyclotomic> homogeneity(const FourierTriple& triple);

enum class Hypothesis { homogeneous, prime_order, neither };

const char* to_string(Hypothesis h);

/// homogeneous, else prime order with integer degrees, else neither.
Hypothesis hypothesis_of(const FourierTriple& triple);

struct DegreeOneResult {
  Hypothesis hypothesis = Hypothesis::neither;
  Verdict verdict = Verdict::holds;
  std::optional<std::size_t> witness;  // j with delta_j != 1
  bool unique_norm = false;            // d_0 = d_1 = ... = d_{r-1}
  /// Unique degree iff unique norm.
  bool unique_norm_agrees = false;
};

/// Throws HypothesisNotMet unless S is a Fourier matrix and the hypothesis holds.
DegreeOneResult degree_one_check(const FourierTriple& triple, const FusionOptions& options = {});

struct GroupAxioms {
  bool closed = false;
  bool identity = false;
  bool inverses = false;
  bool associative = false;
  bool commutative = false;
};

struct CuntzVerdict {
  bool holds = true;
  std::vector<std::size_t> witness;  // (i, j) with s_ij not in {1, -1}
};

struct ClassificationReport {
  Hypothesis hypothesis = Hypothesis::neither;
  std::optional<Cyclotomic> homogeneity_degree;
  bool degrees_all_one = false;
  /// |s_ij| = 1 for all i, j.
  bool unimodular_entries = false;
  std::vector<std::size_t> unimodular_witness;
  /// column_group[i][j] = k means s_i . s_j = s_k entrywise.
  std::optional<std::vector<std::vector<std::size_t>>> column_group;
  std::optional<GroupAxioms> group_axioms;
  std::optional<std::vector<std::int64_t>> element_orders;
  std::optional<std::vector<std::int64_t>> invariant_factors;
  /// Present only for real s.
  std::optional<bool> is_elementary_abelian;
  /// Present only for an integral s-matrix with unique norm.
  std::optional<CuntzVerdict> cuntz;
};

/// Throws HypothesisNotMet, DominanceFailed (|s_ij| > s_0j) or NotClosed
/// (an entrywise product of two columns is not a column).
ClassificationReport classify(const FourierTriple& triple, const FusionOptions& options = {});

/// Invariant factors of a finite abelian group given by its Cayley table,
/// from the counts |{g : g^(p^k) = e}|. Identity is element 0.
std::vector<std::int64_t> invariant_factors_from_table(const std::vector<std::vector<std::size_t>>& table);

struct CheckResult {
  Verdict verdict = Verdict::not_applicable;
  std::vector<std::size_t> witness;
};

/// For integral s: every degree is a perfect square and every lambda is rational.
CheckResult perfect_square_degrees_check(const FourierTriple& triple);

/// For rational degrees: delta_j and d_j are integers dividing d_0.
CheckResult degree_divisibility_check(const FourierTriple& triple);

/// If every lambda is rational, every degree is a rational integer.
CheckResult rational_calgebra_check(const CAlgebra& alg);

/// d_0 = d_j delta_j for all j.
CheckResult norm_degree_identity(const FourierTriple& triple);

}  // namespace fourier
