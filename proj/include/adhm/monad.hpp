#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "adhm/datum.hpp"

namespace adhm {

/// V(-1) --alpha--> (V + V + W) --beta--> V(1) on P^3, coordinates x0..x3.
///
///   alpha = [B1 + x2; B2 + x3; j],   beta = [-B2 - x3, B1 + x2, i]
struct Monad {
  std::size_t c = 0;
  std::size_t r = 0;
  PolyMatrix alpha;  // (2c + r) x c
  PolyMatrix beta;   // c x (2c + r)
  /// Coefficient matrices of x0..x3 in alpha and beta.
  std::array<Matrix, 4> alpha_coeffs;
  std::array<Matrix, 4> beta_coeffs;

  Matrix alpha_at(std::span<const Scalar> p) const;
  Matrix beta_at(std::span<const Scalar> p) const;
};

/// Point of P^3 with the first nonzero coordinate equal to 1.
class P3Point {
 public:
  /// Throws InputError when every coordinate is zero.
  explicit P3Point(std::array<Scalar, 4> coords);
  const std::array<Scalar, 4>& coords() const { return x_; }
  std::string to_string() const;
  friend bool operator==(const P3Point&, const P3Point&) = default;

 private:
  std::array<Scalar, 4> x_;
};

/// Linear subspace of P^3: coordinate k is sum_j param(k, j) * s_j.
class LinearSubspaceParam {
 public:
  /// `param` is 4 x (k+1) of full column rank; throws InputError otherwise.
  explicit LinearSubspaceParam(Matrix param);
  /// Subspace cut out by independent linear equations (rows of `equations`).
  static LinearSubspaceParam from_equations(const Matrix& equations);
  const Matrix& param() const { return param_; }
  const VarList& vars() const { return vars_; }
  /// Coordinates x0..x3 as linear forms in the parameters.
  std::vector<Poly> coordinate_forms() const;

 private:
  Matrix param_;
  VarList vars_;
};

struct MonadFiber {
  Matrix alpha_p;
  Matrix beta_p;
  std::size_t rank_alpha = 0;
  std::size_t rank_beta = 0;
  std::size_t ker_alpha_dim = 0;
  std::size_t corank_beta = 0;
  /// dim ker beta(p) - rank alpha(p); set only when alpha(p) is injective.
  std::optional<std::size_t> fiber_dim;
};

struct FramingReport {
  bool valid = false;
  std::size_t rank = 0;
  /// Along l_inf = {x0 = x1 = 0}, parametrized as [x2:x3]: points where
  /// alpha fails to be injective, beta fails to be surjective, or the
  /// W-summand fails to complement im alpha inside ker beta.
  P1Locus alpha_locus;
  P1Locus beta_locus;
  P1Locus complement_locus;
  /// The W-summand of V + V + W, as a (2c + r) x r matrix.
  Matrix w_inclusion;
};

struct RestrictedMonad {
  /// Monad along p(t) = p0 + t p1, variable t.
  PolyMatrix alpha;
  PolyMatrix beta;
  /// Parameter points [s0:s1] (meaning s0 p0 + s1 p1) where alpha is not
  /// injective and where beta is not surjective.
  P1Locus alpha_drop;
  P1Locus beta_drop;
};

/// Requires is_adhm(x); throws InputError otherwise.
Monad build_monad(const AdhmDatum& x);
/// The same blocks without the moment-map precondition.
Monad assemble_monad(const AdhmDatum& x);
/// (beta * alpha == 0, moment_map(x) == 0); the two always agree.
std::pair<bool, bool> monad_identity_iff_moment(const AdhmDatum& x);

MonadFiber eval_monad(const Monad& m, const P3Point& p);

/// All c x c minors of alpha (resp. beta), in minors() order.
std::vector<Poly> alpha_degeneracy_minors(const Monad& m);
std::vector<Poly> beta_degeneracy_minors(const Monad& m);
bool vanishes_on(const Poly& poly, const LinearSubspaceParam& l);

/// Throws InvariantViolation (with the offending locus) if the framing fails.
FramingReport framing_on_linf(const Monad& m);

/// Throws InputError when p0 and p1 are the same point.
RestrictedMonad restriction_pencil(const Monad& m, const P3Point& p0, const P3Point& p1);

}  // namespace adhm
