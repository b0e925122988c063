#include "adhm/monad.hpp"

#include <sstream>

namespace adhm {

namespace {

Matrix combine(const std::array<Matrix, 4>& coeffs, std::span<const Scalar> p) {
  if (p.size() != 4) throw InputError("monad: expected a point with four coordinates");
  Matrix m(coeffs[0].rows(), coeffs[0].cols());
  for (std::size_t k = 0; k < 4; ++k) {
    if (!p[k].is_zero()) m += p[k] * coeffs[k];
  }
  return m;
}

std::string describe(const P1Locus& l) {
  if (l.kind == P1Locus::Kind::WholeLine) return "the whole line";
  std::ostringstream os;
  for (const auto& p : l.points) os << p.to_string() << ' ';
  if (!l.unresolved.is_constant()) os << "roots of " << l.unresolved.to_string();
  return os.str();
}

}  // namespace

Matrix Monad::alpha_at(std::span<const Scalar> p) const { return combine(alpha_coeffs, p); }
Matrix Monad::beta_at(std::span<const Scalar> p) const { return combine(beta_coeffs, p); }

P3Point::P3Point(std::array<Scalar, 4> coords) : x_(std::move(coords)) {
  std::size_t k = 0;
  while (k < 4 && x_[k].is_zero()) ++k;
  if (k == 4) throw InputError("P3Point: all coordinates are zero");
  const Scalar inv = x_[k].inverse();
  for (auto& v : x_) v *= inv;
}

std::string P3Point::to_string() const {
  return "[" + x_[0].to_string() + ":" + x_[1].to_string() + ":" + x_[2].to_string() + ":" +
         x_[3].to_string() + "]";
}

LinearSubspaceParam::LinearSubspaceParam(Matrix param) : param_(std::move(param)) {
  if (param_.rows() != 4 || param_.cols() == 0 || rank(param_) != param_.cols()) {
    throw InputError("LinearSubspaceParam: need a 4 x k matrix of full column rank");
  }
  std::vector<std::string> names;
  for (std::size_t k = 0; k < param_.cols(); ++k) names.push_back("s" + std::to_string(k));
  vars_ = make_vars(std::move(names));
}

LinearSubspaceParam LinearSubspaceParam::from_equations(const Matrix& equations) {
  if (equations.cols() != 4) throw InputError("LinearSubspaceParam: equations need 4 columns");
  return LinearSubspaceParam(kernel(equations).basis_columns());
}

std::vector<Poly> LinearSubspaceParam::coordinate_forms() const {
  std::vector<Poly> forms;
  for (std::size_t k = 0; k < 4; ++k) forms.push_back(Poly::linear(vars_, param_.row(k)));
  return forms;
}

Monad assemble_monad(const AdhmDatum& x) {
  const std::size_t c = x.c();
  const std::size_t r = x.r();
  const std::size_t n = 2 * c + r;
  Monad m;
  m.c = c;
  m.r = r;
  for (int k = 0; k < 4; ++k) {
    m.alpha_coeffs[k] = Matrix(n, c);
    m.beta_coeffs[k] = Matrix(c, n);
  }
  const Matrix id = Matrix::identity(c);
  for (int s = 0; s < 2; ++s) {
    Matrix& a = m.alpha_coeffs[s];
    a.set_block(0, 0, x.b1().slot(s));
    a.set_block(c, 0, x.b2().slot(s));
    a.set_block(2 * c, 0, x.j().slot(s));
    Matrix& b = m.beta_coeffs[s];
    b.set_block(0, 0, -x.b2().slot(s));
    b.set_block(0, c, x.b1().slot(s));
    b.set_block(0, 2 * c, x.i().slot(s));
  }
  m.alpha_coeffs[2].set_block(0, 0, id);
  m.alpha_coeffs[3].set_block(c, 0, id);
  m.beta_coeffs[2].set_block(0, c, id);
  m.beta_coeffs[3].set_block(0, 0, -id);
  m.alpha = PolyMatrix::linear(m.alpha_coeffs, vars_p3());
  m.beta = PolyMatrix::linear(m.beta_coeffs, vars_p3());
  return m;
}

Monad build_monad(const AdhmDatum& x) {
  if (!is_adhm(x)) throw InputError("build_monad: moment map is nonzero");
  Monad m = assemble_monad(x);
  if (!(m.beta * m.alpha).is_zero()) throw InvariantViolation("build_monad: beta * alpha != 0");
  return m;
}

std::pair<bool, bool> monad_identity_iff_moment(const AdhmDatum& x) {
  const Monad m = assemble_monad(x);
  return {(m.beta * m.alpha).is_zero(), is_adhm(x)};
}

MonadFiber eval_monad(const Monad& m, const P3Point& p) {
  MonadFiber f;
  f.alpha_p = m.alpha_at(p.coords());
  f.beta_p = m.beta_at(p.coords());
  f.rank_alpha = rank(f.alpha_p);
  f.rank_beta = rank(f.beta_p);
  f.ker_alpha_dim = m.c - f.rank_alpha;
  f.corank_beta = m.c - f.rank_beta;
  if (f.ker_alpha_dim == 0) {
    const std::size_t ker_beta = (2 * m.c + m.r) - f.rank_beta;
    f.fiber_dim = ker_beta - f.rank_alpha;
  }
  return f;
}

std::vector<Poly> alpha_degeneracy_minors(const Monad& m) { return minors(m.alpha, m.c); }
std::vector<Poly> beta_degeneracy_minors(const Monad& m) { return minors(m.beta, m.c); }

bool vanishes_on(const Poly& poly, const LinearSubspaceParam& l) {
  if (poly.nvars() == 0) return poly.is_zero();
  return poly.substitute(l.coordinate_forms()).is_zero();
}

FramingReport framing_on_linf(const Monad& m) {
  const std::size_t c = m.c;
  const std::size_t r = m.r;
  const std::size_t n = 2 * c + r;
  const std::array<Scalar, 4> e2{0, 0, 1, 0};
  const std::array<Scalar, 4> e3{0, 0, 0, 1};
  FramingReport rep;
  rep.rank = r;
  rep.w_inclusion = Matrix(n, r);
  rep.w_inclusion.set_block(2 * c, 0, Matrix::identity(r));

  const Matrix a2 = m.alpha_at(e2), a3 = m.alpha_at(e3);
  const Matrix b2 = m.beta_at(e2), b3 = m.beta_at(e3);
  rep.alpha_locus = rank_drop_locus(a2, a3);
  rep.beta_locus = rank_drop_locus(b2, b3);
  // im alpha + W is everything of rank c + r iff the V + V rows of alpha are
  // injective.
  rep.complement_locus = rank_drop_locus(a2.block(0, 0, 2 * c, c), a3.block(0, 0, 2 * c, c));
  const bool w_in_kernel = (b2 * rep.w_inclusion).is_zero() && (b3 * rep.w_inclusion).is_zero();
  rep.valid = w_in_kernel && rep.alpha_locus.empty() && rep.beta_locus.empty() &&
              rep.complement_locus.empty();
  if (!rep.valid) {
    std::string msg = "framing on l_inf fails:";
    if (!w_in_kernel) msg += " beta does not kill the W-summand;";
    if (!rep.alpha_locus.empty()) msg += " alpha drops rank at " + describe(rep.alpha_locus) + ";";
    if (!rep.beta_locus.empty()) msg += " beta drops rank at " + describe(rep.beta_locus) + ";";
    if (!rep.complement_locus.empty()) {
      msg += " W does not complement im alpha at " + describe(rep.complement_locus) + ";";
    }
    throw InvariantViolation(msg);
  }
  return rep;
}

RestrictedMonad restriction_pencil(const Monad& m, const P3Point& p0, const P3Point& p1) {
  if (p0 == p1) throw InputError("restriction_pencil: the two points coincide");
  const Matrix a0 = m.alpha_at(p0.coords()), a1 = m.alpha_at(p1.coords());
  const Matrix b0 = m.beta_at(p0.coords()), b1 = m.beta_at(p1.coords());
  auto along = [](const Matrix& m0, const Matrix& m1) {
    const std::array<Matrix, 1> slope{m1};
    return PolyMatrix::constant(m0, vars_t()) + PolyMatrix::linear(slope, vars_t());
  };
  RestrictedMonad out;
  out.alpha = along(a0, a1);
  out.beta = along(b0, b1);
  out.alpha_drop = rank_drop_locus(a0, a1);
  out.beta_drop = rank_drop_locus(b0, b1);
  return out;
}

}  // namespace adhm
