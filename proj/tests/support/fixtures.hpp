#pragma once

#include <cstdlib>
#include <string>

#include "fourier/matrix.hpp"

namespace fourier::testing {

/// Rank-8 modular datum of the Drinfeld double of S3, an integral Fourier
/// matrix with degrees (1, 1, 4, 9, 9, 4, 4, 4).
inline ExactMatrix ds3_S() {
  const long rows[8][8] = {
      {1, 1, 2, 3, 3, 2, 2, 2},    {1, 1, 2, -3, -3, 2, 2, 2},  {2, 2, 4, 0, 0, -2, -2, -2},
      {3, -3, 0, 3, -3, 0, 0, 0},  {3, -3, 0, -3, 3, 0, 0, 0},  {2, 2, -2, 0, 0, 4, -2, -2},
      {2, 2, -2, 0, 0, -2, -2, 4}, {2, 2, -2, 0, 0, -2, 4, -2},
  };
  ExactMatrix S(8);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      Rational q(rows[i][j], 6);
      q.canonicalize();
      S(i, j) = q;
    }
  }
  return S;
}

inline ExactMatrix ds3_T() {
  const Cyclotomic w = Cyclotomic::root_of_unity(3);
  return ExactMatrix::diagonal({1L, 1L, 1L, 1L, -1L, 1L, w, w * w});
}

/// phi = (1 + sqrt 5)/2 = -(E(5)^2 + E(5)^3).
inline Cyclotomic golden_ratio() {
  return -(Cyclotomic::root_of_unity(5, 2) + Cyclotomic::root_of_unity(5, 3));
}

/// The Fibonacci Fourier matrix [[1, phi], [phi, -1]] / sqrt(2 + phi), with
/// sqrt(2 + phi) = 2 cos(pi/10) = E(20) + E(20)^19. Degrees (1, phi^2).
inline ExactMatrix fibonacci_S() {
  const Cyclotomic phi = golden_ratio();
  const Cyclotomic c = (Cyclotomic::root_of_unity(20) + Cyclotomic::root_of_unity(20, 19)).inv();
  return c * ExactMatrix{{1L, phi}, {phi, -1L}};
}

inline std::string fixture_path(const std::string& name) {
  const char* dir = std::getenv("FOURIER_FIXTURES");
  return std::string(dir ? dir : "tests/fixtures") + "/" + name;
}

}  // namespace fourier::testing
