#pragma once

#include <span>
#include <string>
#include <vector>

#include "adhm/matrix.hpp"
#include "adhm/poly.hpp"

namespace adhm {

/// Matrix of polynomials sharing one variable list.
class PolyMatrix {
 public:
  PolyMatrix() : PolyMatrix(0, 0, vars_p1()) {}
  PolyMatrix(std::size_t rows, std::size_t cols, VarList vars);
  static PolyMatrix constant(const Matrix& m, const VarList& vars);
  /// sum_k coeffs[k] * var_k; every coefficient matrix has the same shape.
  static PolyMatrix linear(std::span<const Matrix> coeffs, const VarList& vars);
  static PolyMatrix from_entries(std::size_t rows, std::size_t cols, std::vector<Poly> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const VarList& vars() const { return vars_; }

  Poly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Poly>& entries() const { return data_; }

  bool is_zero() const;
  bool is_homogeneous(int degree) const;
  /// Coefficient matrix of the monomial `m`.
  Matrix coefficient(const Monomial& m) const;

  PolyMatrix transpose() const;
  PolyMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  static PolyMatrix hcat(const std::vector<PolyMatrix>& parts, std::size_t rows, const VarList& vars);
  static PolyMatrix vcat(const std::vector<PolyMatrix>& parts, std::size_t cols, const VarList& vars);

  Matrix evaluate(std::span<const Scalar> point) const;
  PolyMatrix substitute(std::span<const Poly> images) const;

  PolyMatrix& operator+=(const PolyMatrix& o);
  PolyMatrix& operator-=(const PolyMatrix& o);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const Matrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const PolyMatrix& a, const Matrix& b);
  PolyMatrix operator-() const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  VarList vars_;
  std::vector<Poly> data_;
};

/// Determinant by cofactor expansion along the first row.
Poly determinant(const PolyMatrix& m);

/// All size x size minors, ordered by row subset then column subset, each
/// subset in lexicographic order. Throws InputError when size is out of range.
std::vector<Poly> minors(const PolyMatrix& m, std::size_t size);

/// Lexicographically ordered k-subsets of {0..n-1}.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

}  // namespace adhm
