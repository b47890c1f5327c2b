#include "fourier/matrix.hpp"

#include <utility>

#include "fourier/error.hpp"

namespace fourier {

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Cyclotomic>> rows)
    : ExactMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != rank_) throw Error(ErrorCode::RankMismatch, "matrix rows must be square");
    std::size_t j = 0;
    for (const auto& x : r) (*this)(i, j++) = x;
    ++i;
  }
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Cyclotomic>>& rows) {
  ExactMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorCode::RankMismatch, "row " + std::to_string(i) + " has " +
                                               std::to_string(rows[i].size()) +
                                               " entries, expected " +
                                               std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ExactMatrix ExactMatrix::identity(std::size_t rank) {
  ExactMatrix m(rank);
  for (std::size_t i = 0; i < rank; ++i) m(i, i) = Cyclotomic(1L);
  return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Cyclotomic>& diag) {
  ExactMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

std::vector<Cyclotomic> ExactMatrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * rank_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * rank_)};
}

std::vector<Cyclotomic> ExactMatrix::column(std::size_t j) const {
  std::vector<Cyclotomic> out;
  out.reserve(rank_);
  for (std::size_t i = 0; i < rank_; ++i) out.push_back((*this)(i, j));
  return out;
}

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rank() != b.rank()) {
    throw Error(ErrorCode::RankMismatch, "cannot multiply rank " + std::to_string(a.rank()) +
                                             " by rank " + std::to_string(b.rank()));
  }
  const std::size_t r = a.rank();
  ExactMatrix out(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < r; ++k) {
      const Cyclotomic& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < r; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return matmul(a, b); }

ExactMatrix operator*(const Cyclotomic& c, const ExactMatrix& a) {
  ExactMatrix out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = 0; j < a.rank(); ++j) out(i, j) = c * a(i, j);
  }
  return out;
}

ExactMatrix conj_entrywise(const ExactMatrix& a) {
  ExactMatrix out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = 0; j < a.rank(); ++j) out(i, j) = a(i, j).conj();
  }
  return out;
}

ExactMatrix transpose(const ExactMatrix& a) {
  ExactMatrix out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = 0; j < a.rank(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

ExactMatrix conj_transpose(const ExactMatrix& a) { return transpose(conj_entrywise(a)); }

bool is_unitary(const ExactMatrix& a) {
  return matmul(a, conj_transpose(a)) == ExactMatrix::identity(a.rank());
}

bool is_symmetric(const ExactMatrix& a) { return a == transpose(a); }

Cyclotomic determinant(const ExactMatrix& a) {
  const std::size_t r = a.rank();
  ExactMatrix m = a;
  Cyclotomic det(1L);
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t pivot = col;
    while (pivot < r && m(pivot, col).is_zero()) ++pivot;
    if (pivot == r) return {};
    if (pivot != col) {
      for (std::size_t j = col; j < r; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const Cyclotomic pivot_inv = m(col, col).inv();
    for (std::size_t i = col + 1; i < r; ++i) {
      if (m(i, col).is_zero()) continue;
      const Cyclotomic factor = m(i, col) * pivot_inv;
      for (std::size_t j = col + 1; j < r; ++j) {
        if (!m(col, j).is_zero()) m(i, j) -= factor * m(col, j);
      }
      m(i, col) = Cyclotomic();
    }
  }
  return det;
}

PermutationVerdict as_scaled_permutation(const ExactMatrix& a) {
  const std::size_t r = a.rank();
  PermutationVerdict verdict;
  if (r == 0) return verdict;
  Permutation sigma(r);
  std::vector<bool> used(r, false);
  std::optional<Cyclotomic> scale;
  for (std::size_t i = 0; i < r; ++i) {
    std::optional<std::size_t> hit;
    for (std::size_t j = 0; j < r; ++j) {
      if (a(i, j).is_zero()) continue;
      if (hit) return verdict;
      hit = j;
    }
    if (!hit || used[*hit]) return verdict;
    if (!scale) {
      scale = a(i, *hit);
    } else if (*scale != a(i, *hit)) {
      return verdict;
    }
    used[*hit] = true;
    sigma[i] = *hit;
  }
  verdict.is_permutation = true;
  verdict.permutation = std::move(sigma);
  verdict.scale = std::move(scale);
  return verdict;
}

std::optional<Permutation> find_conjugate_column_pairing(const ExactMatrix& a) {
  const std::size_t r = a.rank();
  std::vector<std::vector<Cyclotomic>> columns;
  columns.reserve(r);
  for (std::size_t j = 0; j < r; ++j) columns.push_back(a.column(j));
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = j + 1; k < r; ++k) {
      if (columns[j] == columns[k]) {
        throw Error(ErrorCode::AmbiguousPairing, "columns " + std::to_string(j) + " and " +
                                                     std::to_string(k) + " are equal");
      }
    }
  }
  Permutation sigma(r);
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<Cyclotomic> target;
    target.reserve(r);
    for (const auto& x : columns[j]) target.push_back(x.conj());
    bool found = false;
    for (std::size_t k = 0; k < r && !found; ++k) {
      if (columns[k] == target) {
        sigma[j] = k;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return sigma;
}

bool is_identity_permutation(const Permutation& sigma) {
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] != i) return false;
  }
  return true;
}

}  // namespace fourier
