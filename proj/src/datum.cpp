#include "adhm/datum.hpp"

#include <stdexcept>

namespace adhm {

namespace {

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw InputError(std::string("datum: ") + what + " has shape " + std::to_string(m.rows()) +
                     "x" + std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
                     std::to_string(cols));
  }
}

Pencil conjugate(const Matrix& g, const Pencil& p, const Matrix& g_inv) {
  return {g * p.at_x0 * g_inv, g * p.at_x1 * g_inv};
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

}  // namespace

Pencil::Pencil(Matrix a0, Matrix a1) : at_x0(std::move(a0)), at_x1(std::move(a1)) {
  if (at_x0.rows() != at_x1.rows() || at_x0.cols() != at_x1.cols()) {
    throw InputError("pencil: coefficient shapes differ");
  }
}

Pencil Pencil::from_poly(const PolyMatrix& m) {
  if (*m.vars() != *vars_p1()) throw InputError("pencil: entries must be forms in (x0, x1)");
  if (!m.is_homogeneous(1)) throw InputError("pencil: entries must be linear forms");
  return {m.coefficient({1, 0}), m.coefficient({0, 1})};
}

PolyMatrix Pencil::poly() const {
  std::array<Matrix, 2> coeffs{at_x0, at_x1};
  return PolyMatrix::linear(coeffs, vars_p1());
}

AdhmDatum::AdhmDatum(std::size_t c, std::size_t r, Pencil b1, Pencil b2, Pencil i, Pencil j)
    : c_(c), r_(r), b1_(std::move(b1)), b2_(std::move(b2)), i_(std::move(i)), j_(std::move(j)) {
  require_shape(b1_.at_x0, c, c, "B1");
  require_shape(b2_.at_x0, c, c, "B2");
  require_shape(i_.at_x0, c, r, "i");
  require_shape(j_.at_x0, r, c, "j");
}

AdhmDatum AdhmDatum::zero(std::size_t c, std::size_t r) {
  return {c, r, Pencil::zero(c, c), Pencil::zero(c, c), Pencil::zero(c, r), Pencil::zero(r, c)};
}

AdhmDatum AdhmDatum::from_poly(std::size_t c, std::size_t r, const PolyMatrix& b1,
                               const PolyMatrix& b2, const PolyMatrix& i, const PolyMatrix& j) {
  return {c, r, Pencil::from_poly(b1), Pencil::from_poly(b2), Pencil::from_poly(i),
          Pencil::from_poly(j)};
}

bool MomentValue::is_zero() const {
  for (const auto& m : components) {
    if (!m.is_zero()) return false;
  }
  return true;
}

GroupElement::GroupElement(Matrix g) : g_(std::move(g)) {
  if (!g_.is_square()) throw InputError("group element: matrix is not square");
  try {
    g_inv_ = inverse(g_);
  } catch (const std::domain_error&) {
    throw InputError("group element: matrix is singular");
  }
}

P1Point::P1Point(const Scalar& a, const Scalar& b) {
  if (a.is_zero() && b.is_zero()) throw InputError("P1Point: both coordinates are zero");
  if (!a.is_zero()) {
    a_ = 1;
    b_ = b / a;
  } else {
    a_ = 0;
    b_ = 1;
  }
}

std::string P1Point::to_string() const { return "[" + a_.to_string() + ":" + b_.to_string() + "]"; }

MomentValue moment_map(const AdhmDatum& x) {
  const auto& b1 = x.b1();
  const auto& b2 = x.b2();
  const auto& i = x.i();
  const auto& j = x.j();
  MomentValue mv;
  mv.components[0] = commutator(b1.at_x0, b2.at_x0) + i.at_x0 * j.at_x0;
  mv.components[1] = commutator(b1.at_x0, b2.at_x1) + commutator(b1.at_x1, b2.at_x0) +
                     i.at_x0 * j.at_x1 + i.at_x1 * j.at_x0;
  mv.components[2] = commutator(b1.at_x1, b2.at_x1) + i.at_x1 * j.at_x1;
  const PolyMatrix p1 = b1.poly();
  const PolyMatrix p2 = b2.poly();
  mv.entries = p1 * p2 - p2 * p1 + i.poly() * j.poly();
  return mv;
}

Matrix moment_map(const ConstantDatum& x) { return commutator(x.b1, x.b2) + x.i * x.j; }

bool is_adhm(const AdhmDatum& x) { return moment_map(x).is_zero(); }

AdhmDatum act(const GroupElement& g, const AdhmDatum& x) {
  if (g.size() != x.c()) throw InputError("act: group element size does not match c");
  const Matrix& h = g.g();
  const Matrix& hi = g.g_inv();
  return {x.c(),
          x.r(),
          conjugate(h, x.b1(), hi),
          conjugate(h, x.b2(), hi),
          {h * x.i().at_x0, h * x.i().at_x1},
          {x.j().at_x0 * hi, x.j().at_x1 * hi}};
}

ConstantDatum act(const GroupElement& g, const ConstantDatum& x) {
  if (g.size() != x.c()) throw InputError("act: group element size does not match c");
  const Matrix& h = g.g();
  const Matrix& hi = g.g_inv();
  return {h * x.b1 * hi, h * x.b2 * hi, h * x.i, x.j * hi};
}

ConstantDatum evaluate(const AdhmDatum& x, const P1Point& p) {
  return {x.b1().at(p.a(), p.b()), x.b2().at(p.a(), p.b()), x.i().at(p.a(), p.b()),
          x.j().at(p.a(), p.b())};
}

AdhmDatum transpose_datum(const AdhmDatum& x) {
  auto t = [](const Pencil& p) { return Pencil{p.at_x0.transpose(), p.at_x1.transpose()}; };
  return {x.c(), x.r(), t(x.b1()), t(x.b2()), t(x.j()), t(x.i())};
}

AdhmDatum direct_sum(const AdhmDatum& x, const AdhmDatum& y) {
  auto diag = [](const Pencil& a, const Pencil& b) {
    return Pencil{block_diag(a.at_x0, b.at_x0), block_diag(a.at_x1, b.at_x1)};
  };
  return {x.c() + y.c(), x.r() + y.r(), diag(x.b1(), y.b1()), diag(x.b2(), y.b2()),
          diag(x.i(), y.i()), diag(x.j(), y.j())};
}

std::pair<std::size_t, std::size_t> chern(const AdhmDatum& x) { return {x.r(), x.c()}; }

}  // namespace adhm
