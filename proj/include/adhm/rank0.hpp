#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adhm/datum.hpp"

namespace adhm {

// Rank-0 data (r = 0) are modules over
//   R = k<y1, y2, z1, z2> / ([y1, y2], [z1, z2], [y1, z2] + [y2, z1]).
// Generators act on V through the pencil coefficients:
//   y1 = B10, y2 = B20, z1 = -B11, z2 = B21,
// which turns the three relations into the x0^2, x1^2 and x0 x1 components of
// the moment map (the last two up to sign).

enum class Generator { Y1 = 0, Y2 = 1, Z1 = 2, Z2 = 3 };
const char* generator_name(Generator g);

struct RModule {
  std::size_t dim = 0;
  std::array<Matrix, 4> action;  // indexed by Generator

  const Matrix& operator[](Generator g) const { return action[static_cast<int>(g)]; }
  /// ([y1, y2], [z1, z2], [y1, z2] + [y2, z1]).
  std::array<Matrix, 3> relation_values() const;
  bool relations_hold() const;
  RModule conjugate(const GroupElement& g) const;
};

/// Requires r = 0 and is_adhm(x); throws InputError otherwise.
RModule datum_to_module(const AdhmDatum& x);
AdhmDatum module_to_datum(const RModule& m);

/// Traces of all words of length <= max_len, shortest first, then
/// lexicographic with y1 < y2 < z1 < z2. A word is the concatenation of
/// generator names (the empty word maps to dim).
struct TraceVector {
  std::size_t max_len = 0;
  std::vector<std::pair<std::string, Scalar>> entries;

  const Scalar& at(const std::string& word) const;
  friend bool operator==(const TraceVector&, const TraceVector&) = default;
};

/// Default word length bound: min(c^2, cap).
std::size_t default_trace_length(std::size_t c, std::size_t cap = 8);
/// Throws InputError when max_len = 0.
TraceVector trace_invariants(const RModule& m, std::size_t max_len);

/// The line {x2 = a x0 + b x1, x3 = c x0 + d x1}.
struct Line {
  Scalar a, b, c, d;
  friend bool operator==(const Line&, const Line&) = default;
};
using LineConfig = std::vector<Line>;

/// Block-diagonal datum with B1 = -(a x0 + b x1), B2 = -(c x0 + d x1) per line.
AdhmDatum lines_to_datum(const LineConfig& lines);

enum class OrbitSeparation { DistinctOrbitsCertified, Indistinguishable };
struct SeparationResult {
  OrbitSeparation verdict = OrbitSeparation::Indistinguishable;
  std::string witness;  // first word whose traces differ
};
/// Throws InputError when the dimensions differ.
SeparationResult separate_by_traces(const RModule& m1, const RModule& m2, std::size_t max_len);

/// Charge 1: i = i1 x0 + i2 x1 with i1 = x, i2 = y (rows) and j = j1 x0 + j2 x1
/// with j1 = z, j2 = w (columns); B1 = B2 = 0.
struct Charge1Datum {
  std::size_t r = 0;
  std::vector<Scalar> x, y, z, w;

  /// Throws InputError unless all four vectors have length r.
  void validate() const;
  AdhmDatum to_datum() const;
};

struct Charge1Flags {
  bool stable = false;
  bool costable = false;
  bool fj_stable = false;
  friend bool operator==(const Charge1Flags&, const Charge1Flags&) = default;
};

/// (sum x z, sum y w, sum x w + y z).
std::array<Scalar, 3> charge1_residuals(const Charge1Datum& d);
/// The 3 x 4r derivative of the map (x, y, z, w) -> residuals.
Matrix charge1_dmu(const Charge1Datum& d);
std::size_t charge1_dmu_rank(const Charge1Datum& d);
/// Stable iff i1 or i2 is nonzero, costable iff j1 or j2 is nonzero, FJ-stable
/// iff i1 and i2 are linearly independent.
Charge1Flags charge1_classify(const Charge1Datum& d);

// c = 2, r = 0 family: B_lk (l = which of B1, B2; k = pencil slot) is
// P(y1k) T P(y1k)^-1 with P(a) = [[1, 0], [a, 1]] and
// T = [[y3k, y2k (y3k - y4k)], [0, y4k]] for l = 1,
// T = [[y5k, y2k (y5k - y6k)], [0, y6k]] for l = 2.

/// y[i - 1][k - 1] holds y_ik, i = 1..6, k = 1..2.
using C2Params = std::array<std::array<Scalar, 2>, 6>;

AdhmDatum psi_c2(const C2Params& y);
/// The four blocks (B11, B12, B21, B22) over the twelve parameters y11 .. y62.
std::array<PolyMatrix, 4> psi_c2_symbolic();
/// P(a) [[t1, b (t1 - t2)], [0, t2]] P(a)^-1.
Matrix c2_isotropy(const Scalar& a, const Scalar& b, const Scalar& t1, const Scalar& t2);

/// Joint eigenvalues {(a1, b1), (a2, b2)} of a commuting pair of 2 x 2
/// matrices, from Tr a, Tr b, Tr a^2, Tr ab, Tr b^2. Sorted; nullopt when
/// the eigenvalues are not rational.
std::optional<std::array<std::pair<Scalar, Scalar>, 2>> joint_spectrum_from_traces(
    const Scalar& ta, const Scalar& tb, const Scalar& taa, const Scalar& tab, const Scalar& tbb);

struct C2FixtureReport {
  bool symbolic_commuting = false;  // [B_1k, B_2k] = 0 in all parameters
  std::array<std::size_t, 3> samples{};  // per ideal I1, I2, I3
  std::array<std::size_t, 3> mixed_ok{};  // samples satisfying the mixed equation
  std::array<std::size_t, 3> commuting_ok{};
  std::size_t intersection_samples = 0;
  std::size_t eigen_relation_ok = 0;  // Y1 n Y2: relation recovered from the matrices
  std::size_t isotropy_samples = 0;
  std::size_t isotropy_ok = 0;

  bool all_pass() const;
};

C2FixtureReport c2_fixture_checks(std::uint64_t seed = 1, std::size_t samples_per_ideal = 50,
                                  std::size_t intersection_samples = 20);

}  // namespace adhm
