#pragma once

#include <array>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "adhm/matrix.hpp"
#include "adhm/poly.hpp"
#include "adhm/poly_matrix.hpp"

namespace adhm {

/// A matrix of linear forms in (x0, x1), stored as x0 * at_x0 + x1 * at_x1.
struct Pencil {
  Matrix at_x0;
  Matrix at_x1;

  Pencil() = default;
  Pencil(Matrix a0, Matrix a1);
  static Pencil zero(std::size_t rows, std::size_t cols) { return {Matrix(rows, cols), Matrix(rows, cols)}; }
  /// Reads the coefficients of a matrix of linear forms in (x0, x1).
  static Pencil from_poly(const PolyMatrix& m);

  std::size_t rows() const { return at_x0.rows(); }
  std::size_t cols() const { return at_x0.cols(); }
  const Matrix& slot(int k) const { return k == 0 ? at_x0 : at_x1; }
  Matrix at(const Scalar& a, const Scalar& b) const { return a * at_x0 + b * at_x1; }
  PolyMatrix poly() const;

  friend bool operator==(const Pencil&, const Pencil&) = default;
};

/// Pointwise ADHM data (B1, B2, i, j) with B_k : V -> V, i : W -> V, j : V -> W.
struct ConstantDatum {
  Matrix b1, b2, i, j;

  std::size_t c() const { return b1.rows(); }
  std::size_t r() const { return i.cols(); }
  friend bool operator==(const ConstantDatum&, const ConstantDatum&) = default;
};

/// (B1, B2, i, j) with entries linear forms on P^1; c = dim V, r = dim W.
class AdhmDatum {
 public:
  AdhmDatum() = default;
  /// Throws InputError unless B1, B2 are c x c, i is c x r and j is r x c.
  AdhmDatum(std::size_t c, std::size_t r, Pencil b1, Pencil b2, Pencil i, Pencil j);
  static AdhmDatum zero(std::size_t c, std::size_t r);
  /// Entries must be homogeneous linear forms in (x0, x1).
  static AdhmDatum from_poly(std::size_t c, std::size_t r, const PolyMatrix& b1,
                             const PolyMatrix& b2, const PolyMatrix& i, const PolyMatrix& j);

  std::size_t c() const { return c_; }
  std::size_t r() const { return r_; }
  const Pencil& b1() const { return b1_; }
  const Pencil& b2() const { return b2_; }
  const Pencil& i() const { return i_; }
  const Pencil& j() const { return j_; }

  /// The four endomorphism coefficients B10, B11, B20, B21.
  std::array<Matrix, 4> endomorphisms() const { return {b1_.at_x0, b1_.at_x1, b2_.at_x0, b2_.at_x1}; }

  friend bool operator==(const AdhmDatum&, const AdhmDatum&) = default;

 private:
  std::size_t c_ = 0;
  std::size_t r_ = 0;
  Pencil b1_, b2_, i_, j_;
};

/// mu = mu1 x0^2 + mu2 x0 x1 + mu3 x1^2.
struct MomentValue {
  PolyMatrix entries;
  std::array<Matrix, 3> components;

  bool is_zero() const;
};

class GroupElement {
 public:
  /// Throws InputError when g is not square and invertible.
  explicit GroupElement(Matrix g);
  const Matrix& g() const { return g_; }
  const Matrix& g_inv() const { return g_inv_; }
  std::size_t size() const { return g_.rows(); }
  GroupElement operator*(const GroupElement& o) const { return GroupElement(g_ * o.g_); }

 private:
  Matrix g_;
  Matrix g_inv_;
};

/// A point [a:b] of P^1 normalized so the first nonzero coordinate is 1.
class P1Point {
 public:
  /// Throws InputError when a = b = 0.
  P1Point(const Scalar& a, const Scalar& b);
  /// The chart point [1:t].
  static P1Point chart(const Scalar& t) { return {Scalar(1), t}; }
  static P1Point infinity() { return {Scalar(0), Scalar(1)}; }
  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  std::string to_string() const;
  friend bool operator==(const P1Point&, const P1Point&) = default;

 private:
  Scalar a_;
  Scalar b_;
};

/// A subset of P^1 cut out by a polynomial condition: either everything, or
/// finitely many points given exactly where possible.
struct P1Locus {
  enum class Kind { WholeLine, FiniteSet };
  Kind kind = Kind::FiniteSet;
  /// Exact points: chart points [1:t] by increasing t, then [0:1] if present.
  std::vector<P1Point> points;
  /// Squarefree polynomial in t whose roots are the bad points of the chart
  /// [1:t]. Zero for WholeLine, 1 when no chart point is bad.
  Poly certificate = Poly(vars_t(), 1);
  /// Factor of the certificate with no rational roots; its roots are further
  /// bad points with non-rational coordinates. 1 when there are none.
  Poly unresolved = Poly(vars_t(), 1);

  bool empty() const { return kind == Kind::FiniteSet && points.empty() && unresolved.is_constant(); }
};

using UnstableLocus = P1Locus;

/// Points [s0:s1] where s0 * a0 + s1 * a1 has rank below min(rows, cols).
P1Locus rank_drop_locus(const Matrix& a0, const Matrix& a1);

// Moment map, group action, evaluation.

MomentValue moment_map(const AdhmDatum& x);
Matrix moment_map(const ConstantDatum& x);
bool is_adhm(const AdhmDatum& x);
AdhmDatum act(const GroupElement& g, const AdhmDatum& x);
ConstantDatum act(const GroupElement& g, const ConstantDatum& x);
ConstantDatum evaluate(const AdhmDatum& x, const P1Point& p);
/// (B1^T, B2^T, j^T, i^T): swaps the roles of stability and costability.
AdhmDatum transpose_datum(const AdhmDatum& x);
/// Block-diagonal sum on V1 + V2 with framing W1 + W2.
AdhmDatum direct_sum(const AdhmDatum& x, const AdhmDatum& y);
/// (rank, charge) = (r, c).
std::pair<std::size_t, std::size_t> chern(const AdhmDatum& x);

// Stability.

Subspace reachable_subspace(const AdhmDatum& x);
Subspace unobservable_subspace(const AdhmDatum& x);
bool is_stable(const AdhmDatum& x);
bool is_costable(const AdhmDatum& x);
bool is_regular(const AdhmDatum& x);

Subspace reachable_subspace(const ConstantDatum& x);
Subspace unobservable_subspace(const ConstantDatum& x);
bool is_stable(const ConstantDatum& x);
bool is_costable(const ConstantDatum& x);
bool is_regular(const ConstantDatum& x);

/// Points p with x(p) not stable.
UnstableLocus unstable_locus(const AdhmDatum& x);
/// Points p with x(p) not costable.
UnstableLocus uncostable_locus(const AdhmDatum& x);
bool is_fj_stable(const AdhmDatum& x);
bool is_fj_semistable(const AdhmDatum& x);
bool is_fj_costable(const AdhmDatum& x);
bool is_fj_regular(const AdhmDatum& x);

// Splittings.

enum class OrbitVerdict { Undetermined };

struct PolystableSplit {
  Subspace v1;
  Subspace v2;
  AdhmDatum x1;  // regular, on V1
  AdhmDatum x2;  // r = 0, on V2
  OrbitVerdict rank0_closed_orbit = OrbitVerdict::Undetermined;
  /// Columns: basis of V1 then basis of V2. act(basis^-1, x) = x1 + x2.
  Matrix basis;
};

struct NotSplit {
  Subspace v1;
  Subspace v2;
};

/// Requires is_adhm(x); throws InputError otherwise.
std::variant<PolystableSplit, NotSplit> try_polystable_split(const AdhmDatum& x);

struct DuDecomposition {
  Subspace v2;
  AdhmDatum regular_part;  // quotient datum on V/V2
  AdhmDatum rank0_part;    // restriction to V2, r = 0
  std::size_t c_prime = 0;
  /// Columns: basis of V2, then the complement used to represent V/V2.
  Matrix basis;
  /// Upper-right blocks of B1, B2 (dim V2 x c') and the V2-rows of i.
  Pencil b1_link, b2_link, i_link;
};

/// Requires is_adhm(x) and is_stable(x); throws InputError otherwise.
DuDecomposition du_decompose(const AdhmDatum& x);
/// Rebuilds the block-triangular datum and conjugates back to the input basis.
AdhmDatum reassemble(const DuDecomposition& d);

}  // namespace adhm
