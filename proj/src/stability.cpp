#include <algorithm>

#include "adhm/datum.hpp"
#include "adhm/upoly.hpp"

namespace adhm {

namespace up = upoly;

namespace {

Subspace reachable(const Matrix& i0, const Matrix& i1, std::span<const Matrix> ops, std::size_t c) {
  const Subspace gens = Subspace::column_span(Matrix::hcat({i0, i1}, c));
  return closure(gens, ops);
}

Subspace unobservable(const Matrix& j0, const Matrix& j1, std::span<const Matrix> ops,
                      std::size_t c) {
  return invariant_core(kernel(Matrix::vcat({j0, j1}, c)), ops);
}

Pencil pencil_block(const Pencil& p, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
  return {p.at_x0.block(r0, c0, nr, nc), p.at_x1.block(r0, c0, nr, nc)};
}

bool pencil_block_zero(const Pencil& p, std::size_t r0, std::size_t c0, std::size_t nr,
                       std::size_t nc) {
  return pencil_block(p, r0, c0, nr, nc) == Pencil::zero(nr, nc);
}

// Datum expressed in the basis given by the columns of `basis`.
AdhmDatum in_basis(const AdhmDatum& x, const Matrix& basis) {
  return act(GroupElement(inverse(basis)), x);
}

// Bad points on the chart are the roots of `g` (all of them when g = 0).
P1Locus locus_from_divisor(const up::UPoly& g, bool infinity_bad) {
  P1Locus out;
  if (g.empty()) {
    out.kind = P1Locus::Kind::WholeLine;
    out.certificate = Poly(vars_t());
    return out;
  }
  const up::RootSplit split = up::split_rational_roots(g);
  out.certificate = up::to_poly(split.squarefree);
  out.unresolved = up::to_poly(split.residual);
  for (const auto& root : split.roots) out.points.push_back(P1Point::chart(Scalar(root)));
  if (infinity_bad) out.points.push_back(P1Point::infinity());
  return out;
}

}  // namespace

P1Locus rank_drop_locus(const Matrix& a0, const Matrix& a1) {
  if (a0.rows() != a1.rows() || a0.cols() != a1.cols()) {
    throw InputError("rank_drop_locus: shapes differ");
  }
  const std::size_t full = std::min(a0.rows(), a0.cols());
  if (full == 0) return {};
  const up::UPoly g = up::maximal_minor_gcd(up::UMatrix::pencil(a0, a1));
  return locus_from_divisor(g, rank(a1) < full);
}

Subspace reachable_subspace(const AdhmDatum& x) {
  const auto ops = x.endomorphisms();
  return reachable(x.i().at_x0, x.i().at_x1, ops, x.c());
}

Subspace unobservable_subspace(const AdhmDatum& x) {
  const auto ops = x.endomorphisms();
  return unobservable(x.j().at_x0, x.j().at_x1, ops, x.c());
}

bool is_stable(const AdhmDatum& x) { return reachable_subspace(x).is_full(); }
bool is_costable(const AdhmDatum& x) { return unobservable_subspace(x).is_zero(); }
bool is_regular(const AdhmDatum& x) { return is_stable(x) && is_costable(x); }

Subspace reachable_subspace(const ConstantDatum& x) {
  const std::array<Matrix, 2> ops{x.b1, x.b2};
  return closure(Subspace::column_span(x.i), ops);
}

Subspace unobservable_subspace(const ConstantDatum& x) {
  const std::array<Matrix, 2> ops{x.b1, x.b2};
  return invariant_core(kernel(x.j), ops);
}

bool is_stable(const ConstantDatum& x) { return reachable_subspace(x).is_full(); }
bool is_costable(const ConstantDatum& x) { return unobservable_subspace(x).is_zero(); }
bool is_regular(const ConstantDatum& x) { return is_stable(x) && is_costable(x); }

UnstableLocus unstable_locus(const AdhmDatum& x) {
  UnstableLocus out;
  const std::size_t c = x.c();
  if (c == 0) return out;

  // On the chart [1:t] the datum is a0 + t a1. The Krylov module spanned by
  // w(B1, B2) i e_m over Q[t] (words of length < c) is built one layer at a
  // time and kept in column echelon form; its c-th determinantal divisor is
  // the gcd of all c x c minors of the full Krylov matrix.
  const auto b1 = up::UMatrix::pencil(x.b1().at_x0, x.b1().at_x1);
  const auto b2 = up::UMatrix::pencil(x.b2().at_x0, x.b2().at_x1);
  const auto iu = up::UMatrix::pencil(x.i().at_x0, x.i().at_x1);
  up::UMatrix module = up::column_echelon(iu);
  for (std::size_t step = 1; step < c; ++step) {
    module = up::column_echelon(up::UMatrix::hcat({iu, b1 * module, b2 * module}, c));
  }

  const up::UPoly g = module.cols() < c ? up::UPoly{} : up::maximal_minor_gcd(module);
  return locus_from_divisor(g, !is_stable(evaluate(x, P1Point::infinity())));
}

UnstableLocus uncostable_locus(const AdhmDatum& x) { return unstable_locus(transpose_datum(x)); }

bool is_fj_stable(const AdhmDatum& x) { return unstable_locus(x).empty(); }

bool is_fj_semistable(const AdhmDatum& x) {
  return unstable_locus(x).kind != UnstableLocus::Kind::WholeLine;
}

bool is_fj_costable(const AdhmDatum& x) { return uncostable_locus(x).empty(); }

bool is_fj_regular(const AdhmDatum& x) { return is_fj_stable(x) && is_fj_costable(x); }

std::variant<PolystableSplit, NotSplit> try_polystable_split(const AdhmDatum& x) {
  if (!is_adhm(x)) throw InputError("try_polystable_split: moment map is nonzero");
  Subspace v1 = reachable_subspace(x);
  Subspace v2 = unobservable_subspace(x);
  const std::size_t c = x.c();
  if (v1.dim() + v2.dim() != c || !v1.intersect(v2).is_zero()) return NotSplit{v1, v2};

  const std::size_t d1 = v1.dim();
  const std::size_t d2 = v2.dim();
  Matrix basis = Matrix::hcat({v1.basis_columns(), v2.basis_columns()}, c);
  const AdhmDatum y = in_basis(x, basis);

  bool block_diagonal = pencil_block_zero(y.b1(), 0, d1, d1, d2) &&
                        pencil_block_zero(y.b1(), d1, 0, d2, d1) &&
                        pencil_block_zero(y.b2(), 0, d1, d1, d2) &&
                        pencil_block_zero(y.b2(), d1, 0, d2, d1) &&
                        pencil_block_zero(y.i(), d1, 0, d2, x.r()) &&
                        pencil_block_zero(y.j(), 0, d1, x.r(), d2);
  if (!block_diagonal) throw InvariantViolation("polystable split: adapted basis is not block diagonal");

  AdhmDatum x1(d1, x.r(), pencil_block(y.b1(), 0, 0, d1, d1), pencil_block(y.b2(), 0, 0, d1, d1),
               pencil_block(y.i(), 0, 0, d1, x.r()), pencil_block(y.j(), 0, 0, x.r(), d1));
  AdhmDatum x2(d2, 0, pencil_block(y.b1(), d1, d1, d2, d2), pencil_block(y.b2(), d1, d1, d2, d2),
               Pencil::zero(d2, 0), Pencil::zero(0, d2));
  if (!is_regular(x1)) throw InvariantViolation("polystable split: V1 summand is not regular");
  return PolystableSplit{std::move(v1), std::move(v2), std::move(x1), std::move(x2),
                         OrbitVerdict::Undetermined, std::move(basis)};
}

DuDecomposition du_decompose(const AdhmDatum& x) {
  if (!is_adhm(x)) throw InputError("du_decompose: moment map is nonzero");
  if (!is_stable(x)) throw InputError("du_decompose: datum is not stable");
  const std::size_t c = x.c();
  const std::size_t r = x.r();
  DuDecomposition d;
  d.v2 = unobservable_subspace(x);
  const std::size_t d2 = d.v2.dim();
  const std::size_t cp = c - d2;
  d.c_prime = cp;
  d.basis = Matrix::hcat({d.v2.basis_columns(), d.v2.complement_columns()}, c);
  const AdhmDatum y = in_basis(x, d.basis);

  if (!pencil_block_zero(y.b1(), d2, 0, cp, d2) || !pencil_block_zero(y.b2(), d2, 0, cp, d2) ||
      !pencil_block_zero(y.j(), 0, 0, r, d2)) {
    throw InvariantViolation("du_decompose: V2 is not an invariant subspace of ker j");
  }
  d.rank0_part = AdhmDatum(d2, 0, pencil_block(y.b1(), 0, 0, d2, d2),
                           pencil_block(y.b2(), 0, 0, d2, d2), Pencil::zero(d2, 0),
                           Pencil::zero(0, d2));
  d.regular_part = AdhmDatum(cp, r, pencil_block(y.b1(), d2, d2, cp, cp),
                             pencil_block(y.b2(), d2, d2, cp, cp), pencil_block(y.i(), d2, 0, cp, r),
                             pencil_block(y.j(), 0, d2, r, cp));
  d.b1_link = pencil_block(y.b1(), 0, d2, d2, cp);
  d.b2_link = pencil_block(y.b2(), 0, d2, d2, cp);
  d.i_link = pencil_block(y.i(), 0, 0, d2, r);
  if (!is_regular(d.regular_part)) {
    throw InvariantViolation("du_decompose: quotient datum is not regular");
  }
  return d;
}

AdhmDatum reassemble(const DuDecomposition& d) {
  const std::size_t d2 = d.rank0_part.c();
  const std::size_t cp = d.c_prime;
  const std::size_t c = d2 + cp;
  const std::size_t r = d.regular_part.r();
  auto triangular = [&](const Pencil& top, const Pencil& link, const Pencil& bottom) {
    Pencil p = Pencil::zero(c, c);
    for (int s = 0; s < 2; ++s) {
      Matrix& m = s == 0 ? p.at_x0 : p.at_x1;
      m.set_block(0, 0, top.slot(s));
      m.set_block(0, d2, link.slot(s));
      m.set_block(d2, d2, bottom.slot(s));
    }
    return p;
  };
  Pencil i = Pencil::zero(c, r);
  Pencil j = Pencil::zero(r, c);
  for (int s = 0; s < 2; ++s) {
    (s == 0 ? i.at_x0 : i.at_x1).set_block(0, 0, d.i_link.slot(s));
    (s == 0 ? i.at_x0 : i.at_x1).set_block(d2, 0, d.regular_part.i().slot(s));
    (s == 0 ? j.at_x0 : j.at_x1).set_block(0, d2, d.regular_part.j().slot(s));
  }
  AdhmDatum y(c, r, triangular(d.rank0_part.b1(), d.b1_link, d.regular_part.b1()),
              triangular(d.rank0_part.b2(), d.b2_link, d.regular_part.b2()), std::move(i),
              std::move(j));
  return act(GroupElement(d.basis), y);
}

}  // namespace adhm
