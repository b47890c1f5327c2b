#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "fourier/cyclotomic.hpp"

namespace fourier {

using Permutation = std::vector<std::size_t>;

/// Dense square matrix of cyclotomics, indexed from 0.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t rank) : rank_(rank), entries_(rank * rank) {}
  ExactMatrix(std::initializer_list<std::initializer_list<Cyclotomic>> rows);
  /// Throws RankMismatch unless rows is square.
  static ExactMatrix from_rows(const std::vector<std::vector<Cyclotomic>>& rows);

  static ExactMatrix identity(std::size_t rank);
  static ExactMatrix diagonal(const std::vector<Cyclotomic>& diag);

  std::size_t rank() const { return rank_; }

  const Cyclotomic& operator()(std::size_t i, std::size_t j) const { return entries_[i * rank_ + j]; }
  Cyclotomic& operator()(std::size_t i, std::size_t j) { return entries_[i * rank_ + j]; }

  std::vector<Cyclotomic> row(std::size_t i) const;
  std::vector<Cyclotomic> column(std::size_t j) const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<Cyclotomic> entries_;
};

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator*(const Cyclotomic& c, const ExactMatrix& a);
ExactMatrix conj_entrywise(const ExactMatrix& a);
ExactMatrix transpose(const ExactMatrix& a);
ExactMatrix conj_transpose(const ExactMatrix& a);

/// A * conj(A)^T == I, exactly.
bool is_unitary(const ExactMatrix& a);
bool is_symmetric(const ExactMatrix& a);

/// Exact determinant by Gaussian elimination over the field.
Cyclotomic determinant(const ExactMatrix& a);

struct PermutationVerdict {
  bool is_permutation = false;
  std::optional<Permutation> permutation;  // row i holds its nonzero in column sigma(i)
  std::optional<Cyclotomic> scale;
};

/// Detects A = c * Pi for a nonzero scalar c and a permutation matrix Pi.
PermutationVerdict as_scaled_permutation(const ExactMatrix& a);

/// sigma with column sigma(j) equal to the entrywise conjugate of column j.
/// Throws AmbiguousPairing if two columns coincide.
std::optional<Permutation> find_conjugate_column_pairing(const ExactMatrix& a);

bool is_identity_permutation(const Permutation& sigma);

}  // namespace fourier
