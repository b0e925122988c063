#pragma once

// Random data shared by the test executables. Every generator takes an
// explicit engine so each test case is reproducible from its seed.

#include <random>
#include <vector>

#include "adhm/matrix.hpp"
#include "adhm/poly.hpp"
#include "adhm/poly_matrix.hpp"
#include "adhm/upoly.hpp"

namespace testsupport {

using adhm::Matrix;
using adhm::Poly;
using adhm::PolyMatrix;
using adhm::Rational;
using adhm::Scalar;

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Small rational, zero with probability about `zero_pct` percent.
inline Scalar rand_rational(Rng& rng, int zero_pct = 20) {
  if (uniform(rng, 0, 99) < zero_pct) return Scalar(0);
  long num = uniform(rng, -5, 4);
  if (num >= 0) ++num;
  return Scalar::ratio(num, uniform(rng, 1, 3));
}

inline Scalar rand_gaussian(Rng& rng, int zero_pct = 20) {
  return {rand_rational(rng, zero_pct).re(), rand_rational(rng, zero_pct).re()};
}

inline Matrix rand_matrix(Rng& rng, std::size_t rows, std::size_t cols, int zero_pct = 20) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rand_rational(rng, zero_pct);
  return m;
}

inline Matrix rand_gaussian_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rand_gaussian(rng);
  return m;
}

/// Random matrix of a prescribed rank (product of random full-rank factors).
inline Matrix rand_rank_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::size_t rk) {
  while (true) {
    Matrix a = rand_matrix(rng, rows, rk, 0);
    Matrix b = rand_matrix(rng, rk, cols, 0);
    Matrix m = a * b;
    if (adhm::rank(m) == rk) return m;
  }
}

inline Matrix rand_invertible(Rng& rng, std::size_t n) {
  while (true) {
    Matrix g = rand_matrix(rng, n, n, 10);
    if (adhm::rank(g) == n) return g;
  }
}

inline std::vector<Scalar> rand_vector(Rng& rng, std::size_t n, int zero_pct = 20) {
  std::vector<Scalar> v(n);
  for (auto& x : v) x = rand_rational(rng, zero_pct);
  return v;
}

inline adhm::upoly::UPoly rand_upoly(Rng& rng, int degree) {
  adhm::upoly::UPoly p(static_cast<std::size_t>(degree + 1));
  for (auto& x : p) x = rand_rational(rng, 30);
  adhm::upoly::trim(p);
  return p;
}

/// Matrix of univariate polynomials in t with entries of degree <= max_degree.
inline PolyMatrix rand_poly_matrix_t(Rng& rng, std::size_t rows, std::size_t cols,
                                     int max_degree) {
  PolyMatrix m(rows, cols, adhm::vars_t());
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = adhm::upoly::to_poly(rand_upoly(rng, static_cast<int>(uniform(rng, 0, max_degree))));
    }
  return m;
}

}  // namespace testsupport
