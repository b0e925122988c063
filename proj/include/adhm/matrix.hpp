#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "adhm/scalar.hpp"

namespace adhm {

/// Dense row-major matrix over Q(i). Zero-sized dimensions are legal.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Row-major initializer; every inner list must have the same length.
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static Matrix column(std::span<const Scalar> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Scalar> data() const { return data_; }

  std::vector<Scalar> row(std::size_t r) const;
  std::vector<Scalar> col(std::size_t c) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix operator-() const;
  std::vector<Scalar> apply(std::span<const Scalar> v) const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  /// Horizontal / vertical concatenation. Row (column) counts must agree.
  static Matrix hcat(const std::vector<Matrix>& parts, std::size_t rows);
  static Matrix vcat(const std::vector<Matrix>& parts, std::size_t cols);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);
Scalar trace(const Matrix& m);

/// Rank via fraction-free (Bareiss) forward elimination.
std::size_t rank(const Matrix& m);

/// Determinant of a square matrix, fraction-free elimination.
Scalar determinant(const Matrix& m);

/// Reduced row echelon form; `pivots` receives the pivot column of each
/// nonzero row. Zero rows are dropped from the result.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Inverse of a square matrix; throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

/// A linear subspace of Q(i)^n stored as a reduced row-echelon basis, so that
/// equal subspaces are structurally equal.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(std::size_t n);
  static Subspace full(std::size_t n);
  /// Span of the rows of `m`.
  static Subspace row_span(const Matrix& m);
  /// Span of the columns of `m` (a subspace of Q(i)^{m.rows()}).
  static Subspace column_span(const Matrix& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Basis vectors as the columns of an ambient x dim matrix.
  Matrix basis_columns() const { return basis_.transpose(); }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& s) const;

  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  /// Image A(S) for a linear map A with A.cols() == ambient_dim().
  Subspace image(const Matrix& a) const;
  /// {v : A v in S} for a linear map A with A.rows() == ambient_dim().
  Subspace preimage(const Matrix& a) const;
  /// Annihilator {y : y . s = 0 for all s in S} under the bilinear dot product.
  Subspace annihilator() const;
  /// Standard basis vectors at the non-pivot coordinates; together with the
  /// basis they span the ambient space.
  Matrix complement_columns() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Right kernel {v : m v = 0}.
Subspace kernel(const Matrix& m);

/// Smallest subspace containing `generators` and invariant under every
/// operator. Operators must be square of size generators.ambient_dim().
Subspace closure(const Subspace& generators, std::span<const Matrix> operators);

/// Largest subspace contained in `s` and invariant under every operator.
Subspace invariant_core(const Subspace& s, std::span<const Matrix> operators);

}  // namespace adhm
