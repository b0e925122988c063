#include "adhm/deform.hpp"

namespace adhm {

namespace {

void append(std::vector<Scalar>& out, const Matrix& m) {
  out.insert(out.end(), m.data().begin(), m.data().end());
}

Matrix take(std::span<const Scalar> v, std::size_t& pos, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[pos++];
  return m;
}

void require_same_shape(const AdhmDatum& x, const AdhmDatum& v, const char* what) {
  if (x.c() != v.c() || x.r() != v.r()) {
    throw InputError(std::string(what) + ": tangent vector shape does not match the datum");
  }
}

Pencil map_slots(const Pencil& p, const Scalar& a00, const Scalar& a01, const Scalar& a10,
                 const Scalar& a11) {
  return {a00 * p.at_x0 + a01 * p.at_x1, a10 * p.at_x0 + a11 * p.at_x1};
}

Matrix elementary(std::size_t c, std::size_t k) {
  Matrix e(c, c);
  e(k / c, k % c) = 1;
  return e;
}

std::vector<Scalar> flatten_components(const std::array<Matrix, 3>& m) {
  std::vector<Scalar> out;
  for (const auto& part : m) append(out, part);
  return out;
}

// Columns are the images of the standard basis of the source.
template <typename F>
Matrix matrix_of(std::size_t rows, std::size_t cols, F image) {
  Matrix m(rows, cols);
  for (std::size_t k = 0; k < cols; ++k) {
    const std::vector<Scalar> col = image(k);
    for (std::size_t r = 0; r < rows; ++r) m(r, k) = col[r];
  }
  return m;
}

}  // namespace

std::size_t tangent_dim(std::size_t c, std::size_t r) { return 4 * c * c + 4 * r * c; }

std::vector<Scalar> flatten(const AdhmDatum& v) {
  std::vector<Scalar> out;
  out.reserve(tangent_dim(v.c(), v.r()));
  for (const Pencil* p : {&v.b1(), &v.b2(), &v.i(), &v.j()}) {
    append(out, p->at_x0);
    append(out, p->at_x1);
  }
  return out;
}

AdhmDatum unflatten(std::span<const Scalar> v, std::size_t c, std::size_t r) {
  if (v.size() != tangent_dim(c, r)) throw InputError("unflatten: wrong vector length");
  std::size_t pos = 0;
  Pencil b1{take(v, pos, c, c), take(v, pos, c, c)};
  Pencil b2{take(v, pos, c, c), take(v, pos, c, c)};
  Pencil i{take(v, pos, c, r), take(v, pos, c, r)};
  Pencil j{take(v, pos, r, c), take(v, pos, r, c)};
  return {c, r, std::move(b1), std::move(b2), std::move(i), std::move(j)};
}

AdhmDatum infinitesimal_action(const AdhmDatum& x, const Matrix& xi) {
  if (xi.rows() != x.c() || xi.cols() != x.c()) {
    throw InputError("infinitesimal_action: xi must be c x c");
  }
  auto ad = [&](const Pencil& p) {
    return Pencil{commutator(xi, p.at_x0), commutator(xi, p.at_x1)};
  };
  return {x.c(),
          x.r(),
          ad(x.b1()),
          ad(x.b2()),
          {xi * x.i().at_x0, xi * x.i().at_x1},
          {-(x.j().at_x0 * xi), -(x.j().at_x1 * xi)}};
}

std::array<Matrix, 3> moment_differential(const AdhmDatum& x, const AdhmDatum& v) {
  require_same_shape(x, v, "moment_differential");
  // Derivative of [P1, P2] + I J at x in direction v, for each pair of slots.
  auto part = [&](int s, int t) {
    return commutator(v.b1().slot(s), x.b2().slot(t)) + commutator(x.b1().slot(s), v.b2().slot(t)) +
           v.i().slot(s) * x.j().slot(t) + x.i().slot(s) * v.j().slot(t);
  };
  return {part(0, 0), part(0, 1) + part(1, 0), part(1, 1)};
}

DeformationComplex deformation_complex(const AdhmDatum& x) {
  if (!is_adhm(x)) throw InputError("deformation_complex: moment map is nonzero");
  const std::size_t c = x.c();
  const std::size_t n = tangent_dim(c, x.r());
  DeformationComplex k;
  k.d0 = matrix_of(n, c * c, [&](std::size_t q) {
    return flatten(infinitesimal_action(x, elementary(c, q)));
  });
  std::vector<Scalar> unit(n);
  k.d1 = matrix_of(3 * c * c, n, [&](std::size_t q) {
    unit[q] = 1;
    auto col = flatten_components(moment_differential(x, unflatten(unit, c, x.r())));
    unit[q] = 0;
    return col;
  });
  return k;
}

DeformationReport cohomology_dims(const AdhmDatum& x) {
  const DeformationComplex k = deformation_complex(x);
  const std::size_t c = x.c();
  DeformationReport rep;
  rep.rank_d0 = rank(k.d0);
  rep.rank_dmu = rank(k.d1);
  rep.h0 = c * c - rep.rank_d0;
  rep.h1 = (tangent_dim(c, x.r()) - rep.rank_dmu) - rep.rank_d0;
  rep.h2 = 3 * c * c - rep.rank_dmu;
  rep.stable = is_stable(x);
  rep.smooth_point = rep.stable && rep.h2 == 0;
  rep.expected_dim = 4 * x.r() * c;
  return rep;
}

AdhmDatum apply(Quaternion q, const AdhmDatum& v) {
  const Scalar i = Scalar::imag_unit();
  Scalar a00, a01, a10, a11;
  switch (q) {
    case Quaternion::I:
      a00 = i;
      a11 = -i;
      break;
    case Quaternion::J:
      a01 = 1;
      a10 = -1;
      break;
    case Quaternion::K:
      a01 = i;
      a10 = i;
      break;
  }
  return {v.c(),
          v.r(),
          map_slots(v.b1(), a00, a01, a10, a11),
          map_slots(v.b2(), a00, a01, a10, a11),
          map_slots(v.i(), a00, a01, a10, a11),
          map_slots(v.j(), a00, a01, a10, a11)};
}

Scalar hypersymplectic_form(const AdhmDatum& v, const AdhmDatum& w) {
  require_same_shape(v, w, "hypersymplectic_form");
  // With B_{lk} the slot-l coefficient of B_k (and i_l, j_l likewise):
  // Tr(B11 B22' + B22 B11' - B21 B12' - B12 B21' + i1 j2' + i1' j2 - i2 j1' - i2' j1).
  const Matrix& b11 = v.b1().at_x0;
  const Matrix& b12 = v.b2().at_x0;
  const Matrix& b21 = v.b1().at_x1;
  const Matrix& b22 = v.b2().at_x1;
  const Matrix& i1 = v.i().at_x0;
  const Matrix& i2 = v.i().at_x1;
  const Matrix& j1 = v.j().at_x0;
  const Matrix& j2 = v.j().at_x1;
  const Matrix& b11p = w.b1().at_x0;
  const Matrix& b12p = w.b2().at_x0;
  const Matrix& b21p = w.b1().at_x1;
  const Matrix& b22p = w.b2().at_x1;
  const Matrix& i1p = w.i().at_x0;
  const Matrix& i2p = w.i().at_x1;
  const Matrix& j1p = w.j().at_x0;
  const Matrix& j2p = w.j().at_x1;
  return trace(b11 * b22p) + trace(b22 * b11p) - trace(b21 * b12p) - trace(b12 * b21p) +
         trace(i1 * j2p) + trace(i1p * j2) - trace(i2 * j1p) - trace(i2p * j1);
}

Scalar symplectic_form(Quaternion q, const AdhmDatum& v, const AdhmDatum& w) {
  return hypersymplectic_form(apply(q, v), w);
}

std::array<Matrix, 3> hypersymplectic_moment(const AdhmDatum& x) {
  const auto mu = moment_map(x).components;
  const Scalar i = Scalar::imag_unit();
  return {i * mu[1], mu[0] + mu[2], i * (mu[2] - mu[0])};
}

std::array<Matrix, 3> hypersymplectic_moment_differential(const AdhmDatum& x, const AdhmDatum& v) {
  const auto d = moment_differential(x, v);
  const Scalar i = Scalar::imag_unit();
  return {i * d[1], d[0] + d[2], i * (d[2] - d[0])};
}

Scalar trace_pairing(const Matrix& a, const Matrix& xi) { return trace(a * xi); }

bool HypersymplecticCheck::identities_hold() const {
  for (bool b : g_invariant) {
    if (!b) return false;
  }
  for (bool b : moment_identity) {
    if (!b) return false;
  }
  return quaternion_relations;
}

HypersymplecticCheck hypersymplectic_check(const AdhmDatum& x, const AdhmDatum& v,
                                           const AdhmDatum& w, const Matrix& xi) {
  require_same_shape(x, v, "hypersymplectic_check");
  require_same_shape(x, w, "hypersymplectic_check");
  const std::size_t c = x.c();
  const std::size_t r = x.r();
  HypersymplecticCheck out;
  out.g_vw = hypersymplectic_form(v, w);
  const std::array<Quaternion, 3> qs{Quaternion::I, Quaternion::J, Quaternion::K};
  for (std::size_t l = 0; l < 3; ++l) {
    out.g_invariant[l] = hypersymplectic_form(apply(qs[l], v), apply(qs[l], w)) == out.g_vw;
  }

  // Operator identities, checked on every basis vector of the tangent space.
  const std::size_t n = tangent_dim(c, r);
  std::vector<Scalar> unit(n);
  out.quaternion_relations = true;
  for (std::size_t k = 0; k < n && out.quaternion_relations; ++k) {
    unit[k] = 1;
    const AdhmDatum e = unflatten(unit, c, r);
    unit[k] = 0;
    std::vector<Scalar> minus_e(n);
    minus_e[k] = -1;
    const AdhmDatum neg = unflatten(minus_e, c, r);
    out.quaternion_relations =
        apply(Quaternion::I, apply(Quaternion::I, e)) == neg &&
        apply(Quaternion::J, apply(Quaternion::J, e)) == neg &&
        apply(Quaternion::K, apply(Quaternion::K, e)) == neg &&
        apply(Quaternion::I, apply(Quaternion::J, apply(Quaternion::K, e))) == neg;
  }

  const AdhmDatum xi_x = infinitesimal_action(x, xi);
  const auto dmu = hypersymplectic_moment_differential(x, v);
  for (std::size_t l = 0; l < 3; ++l) {
    out.moment_identity[l] = trace_pairing(dmu[l], xi) == symplectic_form(qs[l], xi_x, v);
  }

  std::vector<AdhmDatum> orbit;
  for (std::size_t k = 0; k < c * c; ++k) orbit.push_back(infinitesimal_action(x, elementary(c, k)));
  out.orbit_isotropic = true;
  for (std::size_t a = 0; a < orbit.size() && out.orbit_isotropic; ++a) {
    for (std::size_t b = a; b < orbit.size(); ++b) {
      if (!hypersymplectic_form(orbit[a], orbit[b]).is_zero()) {
        out.orbit_isotropic = false;
        break;
      }
    }
  }
  return out;
}

bool surjectivity_criterion(const AdhmDatum& x) {
  if (!is_stable(x)) throw InputError("surjectivity_criterion: datum is not stable");
  const std::size_t c = x.c();
  const std::size_t n = tangent_dim(c, x.r());
  const std::size_t g = c * c;
  const Matrix m = matrix_of(n, 3 * g, [&](std::size_t q) {
    const AdhmDatum xi_x = infinitesimal_action(x, elementary(c, q % g));
    switch (q / g) {
      case 0:
        return flatten(xi_x);
      case 1:
        return flatten(apply(Quaternion::I, xi_x));
      default:
        return flatten(apply(Quaternion::J, xi_x));
    }
  });
  return rank(m) == 3 * g;
}

}  // namespace adhm
