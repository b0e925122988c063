#pragma once

#include <array>
#include <span>
#include <vector>

#include "adhm/datum.hpp"

namespace adhm {

// Tangent vectors to the space of data are data of the same shape. The
// flattened layout is B10, B11, B20, B21, i0, i1, j0, j1, each row-major; the
// target of the moment differential is End(V) in the basis x0^2, x0 x1, x1^2.

std::size_t tangent_dim(std::size_t c, std::size_t r);
std::vector<Scalar> flatten(const AdhmDatum& v);
AdhmDatum unflatten(std::span<const Scalar> v, std::size_t c, std::size_t r);

/// xi_x = ([xi, B1], [xi, B2], xi i, -j xi), the derivative of the action.
AdhmDatum infinitesimal_action(const AdhmDatum& x, const Matrix& xi);
/// Components (x0^2, x0 x1, x1^2) of the derivative of the moment map at x.
std::array<Matrix, 3> moment_differential(const AdhmDatum& x, const AdhmDatum& v);

struct DeformationComplex {
  Matrix d0;  // tangent_dim x c^2
  Matrix d1;  // 3c^2 x tangent_dim
};

struct DeformationReport {
  std::size_t h0 = 0;
  std::size_t h1 = 0;
  std::size_t h2 = 0;
  std::size_t rank_d0 = 0;
  std::size_t rank_dmu = 0;
  bool stable = false;
  bool smooth_point = false;  // stable and h2 = 0
  std::size_t expected_dim = 0;  // 4rc
};

/// Requires is_adhm(x); throws InputError otherwise.
DeformationComplex deformation_complex(const AdhmDatum& x);
DeformationReport cohomology_dims(const AdhmDatum& x);

enum class Quaternion { I, J, K };

/// Acts on the two pencil slots (v0, v1) of a tangent vector:
/// I = diag(i, -i), J = [[0, 1], [-1, 0]], K = [[0, i], [i, 0]].
AdhmDatum apply(Quaternion q, const AdhmDatum& v);

/// The symmetric form g on tangent vectors.
Scalar hypersymplectic_form(const AdhmDatum& v, const AdhmDatum& w);
/// omega_q(v, w) = g(q v, w).
Scalar symplectic_form(Quaternion q, const AdhmDatum& v, const AdhmDatum& w);
/// (i mu2, mu1 + mu3, i (mu3 - mu1)).
std::array<Matrix, 3> hypersymplectic_moment(const AdhmDatum& x);
std::array<Matrix, 3> hypersymplectic_moment_differential(const AdhmDatum& x, const AdhmDatum& v);
/// <a, xi> = Tr(a xi).
Scalar trace_pairing(const Matrix& a, const Matrix& xi);

struct HypersymplecticCheck {
  Scalar g_vw;
  std::array<bool, 3> g_invariant{};   // g(qv, qw) = g(v, w) for q = I, J, K
  bool quaternion_relations = false;   // I^2 = J^2 = K^2 = IJK = -1 on the tangent space
  std::array<bool, 3> moment_identity{};  // <d mu_l(v), xi> = omega_l(xi_x, v)
  /// Whether g vanishes identically on the orbit directions {xi_x}.
  bool orbit_isotropic = false;

  bool identities_hold() const;
};

/// Throws InputError when the shapes of v, w, xi do not match x.
HypersymplecticCheck hypersymplectic_check(const AdhmDatum& x, const AdhmDatum& v,
                                           const AdhmDatum& w, const Matrix& xi);

/// Whether (xi1, xi2, xi3) -> xi1_x + I xi2_x + J xi3_x is injective.
/// Requires is_stable(x); throws InputError otherwise.
bool surjectivity_criterion(const AdhmDatum& x);

}  // namespace adhm
