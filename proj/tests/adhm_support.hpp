#pragma once

// Random ADHM data. Data on the zero set of the moment map come from linear
// completion: with some blocks fixed, the moment map is linear in the rest,
// so a random kernel vector of that linear map completes the datum.

#include <functional>

#include "adhm/datum.hpp"
#include "adhm/deform.hpp"
#include "adhm/rank0.hpp"
#include "support.hpp"

namespace testsupport {

using adhm::AdhmDatum;
using adhm::GroupElement;
using adhm::Pencil;

inline Pencil rand_pencil(Rng& rng, std::size_t rows, std::size_t cols, int zero_pct = 20) {
  return {rand_matrix(rng, rows, cols, zero_pct), rand_matrix(rng, rows, cols, zero_pct)};
}

inline AdhmDatum rand_datum(Rng& rng, std::size_t c, std::size_t r, int zero_pct = 20) {
  return {c, r, rand_pencil(rng, c, c, zero_pct), rand_pencil(rng, c, c, zero_pct),
          rand_pencil(rng, c, r, zero_pct), rand_pencil(rng, r, c, zero_pct)};
}

inline std::vector<Scalar> flat_moment(const AdhmDatum& x) {
  std::vector<Scalar> out;
  for (const auto& m : adhm::moment_map(x).components) out.insert(out.end(), m.data().begin(), m.data().end());
  return out;
}

inline AdhmDatum add(const AdhmDatum& x, std::span<const Scalar> u) {
  auto v = adhm::flatten(x);
  for (std::size_t k = 0; k < v.size(); ++k) v[k] += u[k];
  return adhm::unflatten(v, x.c(), x.r());
}

/// base + u with u supported on `free` (flattened tangent coordinates) and
/// mu(base + u) = 0. The moment map of base must vanish and be linear in the
/// free coordinates.
inline AdhmDatum complete_linearly(Rng& rng, const AdhmDatum& base, const std::vector<std::size_t>& free) {
  const std::size_t n = adhm::tangent_dim(base.c(), base.r());
  const std::size_t eqs = 3 * base.c() * base.c();
  Matrix m(eqs, free.size());
  std::vector<Scalar> e(n);
  for (std::size_t k = 0; k < free.size(); ++k) {
    e[free[k]] = 1;
    const auto col = flat_moment(add(base, e));
    e[free[k]] = 0;
    for (std::size_t q = 0; q < eqs; ++q) m(q, k) = col[q];
  }
  const Matrix basis = adhm::kernel(m).basis_columns();
  std::vector<Scalar> u(n);
  for (std::size_t b = 0; b < basis.cols(); ++b) {
    const Scalar coeff = rand_rational(rng, 10);
    for (std::size_t k = 0; k < free.size(); ++k) u[free[k]] += coeff * basis(k, b);
  }
  return add(base, u);
}

/// Flattened coordinates of B2 and j (B1 and i stay as given).
inline std::vector<std::size_t> b2_j_coordinates(std::size_t c, std::size_t r) {
  std::vector<std::size_t> free;
  for (std::size_t k = 2 * c * c; k < 4 * c * c; ++k) free.push_back(k);
  for (std::size_t k = 4 * c * c + 2 * r * c; k < 4 * c * c + 4 * r * c; ++k) free.push_back(k);
  return free;
}

/// Random ADHM datum: random B1 and i, then (B2, j) completed linearly.
inline AdhmDatum rand_adhm(Rng& rng, std::size_t c, std::size_t r, int zero_pct = 20) {
  AdhmDatum base{c, r, rand_pencil(rng, c, c, zero_pct), Pencil::zero(c, c), rand_pencil(rng, c, r, zero_pct),
                 Pencil::zero(r, c)};
  return complete_linearly(rng, base, b2_j_coordinates(c, r));
}

inline AdhmDatum rand_conjugate(Rng& rng, const AdhmDatum& x) {
  return adhm::act(GroupElement(rand_invertible(rng, x.c())), x);
}

inline adhm::LineConfig rand_lines(Rng& rng, std::size_t c) {
  adhm::LineConfig l;
  for (std::size_t k = 0; k < c; ++k) {
    l.push_back({rand_rational(rng), rand_rational(rng), rand_rational(rng), rand_rational(rng)});
  }
  return l;
}

/// Random r = 0 ADHM datum: lines, a nilpotent-free commuting family, or a
/// linear completion.
inline AdhmDatum rand_rank0(Rng& rng, std::size_t c) {
  switch (uniform(rng, 0, 2)) {
    case 0:
      return rand_conjugate(rng, adhm::lines_to_datum(rand_lines(rng, c)));
    case 1: {
      // All four coefficients polynomials in one matrix: everything commutes.
      const Matrix a = rand_matrix(rng, c, c);
      const Matrix a2 = a * a;
      auto poly = [&] { return rand_rational(rng) * Matrix::identity(c) + rand_rational(rng) * a + rand_rational(rng) * a2; };
      Matrix b10 = poly(), b11 = poly(), b20 = poly(), b21 = poly();
      return {c, 0, {b10, b11}, {b20, b21}, Pencil::zero(c, 0), Pencil::zero(0, c)};
    }
    default:
      return rand_adhm(rng, c, 0);
  }
}

/// Stable but (generically) not costable: block upper-triangular data with a
/// regular quotient on the last c - d coordinates and an r = 0 part on the
/// first d, glued by random links solving the moment map, then conjugated.
/// Returns nullopt when the glued datum is not stable.
inline std::optional<AdhmDatum> rand_du_type(Rng& rng, std::size_t d, std::size_t c_reg, std::size_t r) {
  const std::size_t c = d + c_reg;
  AdhmDatum reg = rand_adhm(rng, c_reg, r);
  if (!adhm::is_regular(reg)) return std::nullopt;
  const AdhmDatum z = rand_rank0(rng, d);
  Pencil b1 = Pencil::zero(c, c), b2 = Pencil::zero(c, c), i = Pencil::zero(c, r), j = Pencil::zero(r, c);
  for (int s = 0; s < 2; ++s) {
    Matrix& p1 = s == 0 ? b1.at_x0 : b1.at_x1;
    Matrix& p2 = s == 0 ? b2.at_x0 : b2.at_x1;
    Matrix& pi = s == 0 ? i.at_x0 : i.at_x1;
    Matrix& pj = s == 0 ? j.at_x0 : j.at_x1;
    p1.set_block(0, 0, z.b1().slot(s));
    p2.set_block(0, 0, z.b2().slot(s));
    p1.set_block(d, d, reg.b1().slot(s));
    p2.set_block(d, d, reg.b2().slot(s));
    pi.set_block(d, 0, reg.i().slot(s));
    pj.set_block(0, d, reg.j().slot(s));
  }
  const AdhmDatum base{c, r, b1, b2, i, j};
  // Free: the top-right blocks of both B's (both slots) and the top rows of i.
  std::vector<std::size_t> free;
  for (std::size_t blk = 0; blk < 4; ++blk)
    for (std::size_t row = 0; row < d; ++row)
      for (std::size_t col = d; col < c; ++col) free.push_back(blk * c * c + row * c + col);
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t row = 0; row < d; ++row)
      for (std::size_t col = 0; col < r; ++col) free.push_back(4 * c * c + s * c * r + row * r + col);
  AdhmDatum x = complete_linearly(rng, base, free);
  if (!adhm::is_stable(x)) return std::nullopt;
  return rand_conjugate(rng, x);
}

/// A mix of ADHM data of charge <= max_c and rank <= max_r.
inline AdhmDatum rand_any_adhm(Rng& rng, std::size_t max_c, std::size_t max_r) {
  const std::size_t c = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_c)));
  const std::size_t r = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_r)));
  switch (uniform(rng, 0, 4)) {
    case 0:
      return rand_rank0(rng, c);
    case 1:
      if (c >= 2 && r >= 1) {
        if (auto x = rand_du_type(rng, 1, c - 1, r)) return *x;
      }
      return rand_adhm(rng, c, r);
    case 2: {
      // Only i nonzero.
      return {c, r, Pencil::zero(c, c), Pencil::zero(c, c), rand_pencil(rng, c, r), Pencil::zero(r, c)};
    }
    default:
      return rand_adhm(rng, c, r, static_cast<int>(uniform(rng, 0, 50)));
  }
}

}  // namespace testsupport

namespace testsupport {

/// For regular data (trivial stabilizer): whether some g in GL(c) carries x
/// to y. Solves g B = B' g, g i = s i', s j = j' g for (g, s).
inline bool isomorphic_regular(const AdhmDatum& x, const AdhmDatum& y) {
  if (x.c() != y.c() || x.r() != y.r()) return false;
  const std::size_t c = x.c(), r = x.r();
  const std::size_t unknowns = c * c + 1;
  std::vector<std::vector<Scalar>> rows;
  auto g_index = [&](std::size_t a, std::size_t b) { return a * c + b; };
  const std::size_t s_index = c * c;
  for (int slot = 0; slot < 2; ++slot) {
    for (int which = 0; which < 2; ++which) {
      const Matrix& b = (which == 0 ? x.b1() : x.b2()).slot(slot);
      const Matrix& bp = (which == 0 ? y.b1() : y.b2()).slot(slot);
      for (std::size_t p = 0; p < c; ++p)
        for (std::size_t q = 0; q < c; ++q) {
          std::vector<Scalar> row(unknowns);
          for (std::size_t k = 0; k < c; ++k) {
            row[g_index(p, k)] += b(k, q);
            row[g_index(k, q)] -= bp(p, k);
          }
          rows.push_back(std::move(row));
        }
    }
    const Matrix& i = x.i().slot(slot);
    const Matrix& ip = y.i().slot(slot);
    for (std::size_t p = 0; p < c; ++p)
      for (std::size_t q = 0; q < r; ++q) {
        std::vector<Scalar> row(unknowns);
        for (std::size_t k = 0; k < c; ++k) row[g_index(p, k)] += i(k, q);
        row[s_index] -= ip(p, q);
        rows.push_back(std::move(row));
      }
    const Matrix& j = x.j().slot(slot);
    const Matrix& jp = y.j().slot(slot);
    for (std::size_t p = 0; p < r; ++p)
      for (std::size_t q = 0; q < c; ++q) {
        std::vector<Scalar> row(unknowns);
        row[s_index] += j(p, q);
        for (std::size_t k = 0; k < c; ++k) row[g_index(k, q)] -= jp(p, k);
        rows.push_back(std::move(row));
      }
  }
  if (rows.empty()) return true;
  const adhm::Subspace sol = adhm::kernel(Matrix::from_rows(rows));
  if (sol.dim() != 1) return false;
  const auto v = sol.basis().row(0);
  if (v[s_index].is_zero()) return false;
  Matrix g(c, c);
  for (std::size_t p = 0; p < c; ++p)
    for (std::size_t q = 0; q < c; ++q) g(p, q) = v[g_index(p, q)] / v[s_index];
  return adhm::rank(g) == c && adhm::act(GroupElement(g), x) == y;
}

}  // namespace testsupport
