#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "adhm/scalar.hpp"

namespace adhm {

/// Shared, immutable list of variable names. Polynomials can only be combined
/// when their lists agree (or one side is a bare constant).
using VarList = std::shared_ptr<const std::vector<std::string>>;

VarList make_vars(std::vector<std::string> names);
/// Canonical lists used throughout: (x0,x1) for P^1, (x0..x3) for P^3, (t).
const VarList& vars_p1();
const VarList& vars_p3();
const VarList& vars_t();

using Monomial = std::vector<unsigned>;

/// Graded lexicographic order, descending: higher total degree first, ties
/// broken by the exponent of the earliest variable.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial over Q(i). Zero coefficients are never stored.
class Poly {
 public:
  using Terms = std::map<Monomial, Scalar, GradedLexGreater>;

  Poly();
  explicit Poly(VarList vars);
  Poly(VarList vars, const Scalar& constant);
  static Poly variable(const VarList& vars, std::size_t index);
  static Poly variable(const VarList& vars, const std::string& name);
  /// Linear form sum_k coeffs[k] * var_k.
  static Poly linear(const VarList& vars, std::span<const Scalar> coeffs);

  const VarList& vars() const { return vars_; }
  std::size_t nvars() const { return vars_->size(); }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous(int degree) const;
  Scalar coeff(const Monomial& m) const;
  Scalar constant_term() const;

  void add_term(const Monomial& m, const Scalar& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Scalar& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b);

  Scalar evaluate(std::span<const Scalar> point) const;
  /// Replaces variable k by images[k]; all images share one variable list.
  Poly substitute(std::span<const Poly> images) const;

  /// Terms in canonical (graded lex, descending) order, e.g. `x0^2 - x1^2`.
  std::string to_string() const;

 private:
  VarList vars_;
  Terms terms_;
};

/// Monic gcd of univariate polynomials; the gcd of no (or only zero) inputs is
/// zero. Throws InputError if an input is not univariate.
Poly gcd_univariate(std::span<const Poly> ps);

}  // namespace adhm
