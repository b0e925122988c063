#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "adhm/matrix.hpp"
#include "adhm/poly.hpp"

namespace adhm::upoly {

/// Dense univariate polynomial, coefficient k multiplies t^k. Always trimmed:
/// the zero polynomial is the empty vector.
using UPoly = std::vector<Scalar>;

void trim(UPoly& p);
int degree(const UPoly& p);  // -1 for zero
UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly scale(const UPoly& a, const Scalar& s);
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Exact quotient; throws std::domain_error on a nonzero remainder.
UPoly exact_div(const UPoly& a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);
UPoly monic(const UPoly& p);
UPoly derivative(const UPoly& p);
UPoly squarefree(const UPoly& p);
Scalar evaluate(const UPoly& p, const Scalar& t);

UPoly from_poly(const Poly& p);
Poly to_poly(const UPoly& p, const VarList& vars = vars_t());

/// Roots of a polynomial in Q, and what is left after removing them.
struct RootSplit {
  std::vector<Rational> roots;  // ascending, distinct
  UPoly squarefree;             // monic squarefree part of the input
  UPoly residual;               // squarefree / prod (t - root), monic
};
/// The input must be nonzero.
RootSplit split_rational_roots(const UPoly& p);

/// Dense matrix over Q(i)[t].
class UMatrix {
 public:
  UMatrix() = default;
  UMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// a0 + t * a1.
  static UMatrix pencil(const Matrix& a0, const Matrix& a1);
  static UMatrix from_poly_entries(std::size_t rows, std::size_t cols,
                                   const std::vector<Poly>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  UPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const UPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  UMatrix transpose() const;
  Matrix evaluate(const Scalar& t) const;
  friend UMatrix operator*(const UMatrix& a, const UMatrix& b);
  static UMatrix hcat(const std::vector<UMatrix>& parts, std::size_t rows);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<UPoly> data_;
};

/// Column echelon form under unimodular column operations over Q(i)[t]; zero
/// columns are dropped. The column module is unchanged.
UMatrix column_echelon(const UMatrix& m);

/// Monic gcd of all min(rows, cols)-sized minors, computed as the
/// determinantal divisor of an echelon form. Zero when rank < min(rows, cols);
/// 1 for matrices with a zero dimension.
UPoly maximal_minor_gcd(const UMatrix& m);

}  // namespace adhm::upoly
