#include "adhm/rank0.hpp"

#include <algorithm>
#include <random>

namespace adhm {

namespace {

constexpr std::array<Generator, 4> kGenerators{Generator::Y1, Generator::Y2, Generator::Z1,
                                              Generator::Z2};

std::size_t pow4(std::size_t n) { return std::size_t{1} << (2 * n); }

// Words of length < len, i.e. the index of the first word of length len.
std::size_t level_offset(std::size_t len) {
  std::size_t off = 0;
  for (std::size_t l = 0; l < len; ++l) off += pow4(l);
  return off;
}

std::string word_name(std::size_t index, std::size_t len) {
  std::string w;
  for (std::size_t k = len; k-- > 0;) {
    w += generator_name(kGenerators[(index >> (2 * k)) & 3]);
  }
  return w;
}

// Tr(a b) without forming the product.
Scalar trace_of_product(const Matrix& a, const Matrix& b) {
  Scalar t;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!a(i, k).is_zero() && !b(k, i).is_zero()) t += a(i, k) * b(k, i);
    }
  return t;
}

void fill_traces(const RModule& m, const Matrix& prefix, std::size_t len, std::size_t index,
                 std::size_t max_len, std::vector<Scalar>& out) {
  for (std::size_t g = 0; g < 4; ++g) {
    const std::size_t child = index * 4 + g;
    const Matrix& a = m.action[g];
    if (len + 1 == max_len) {
      out[level_offset(len + 1) + child] = trace_of_product(prefix, a);
    } else {
      const Matrix next = prefix * a;
      out[level_offset(len + 1) + child] = trace(next);
      fill_traces(m, next, len + 1, child, max_len, out);
    }
  }
}

Matrix block_p(const Scalar& a) { return Matrix::from_rows({{1, 0}, {a, 1}}); }

Matrix triangular(const Scalar& b, const Scalar& t1, const Scalar& t2) {
  return Matrix::from_rows({{t1, b * (t1 - t2)}, {0, t2}});
}

Matrix conj_p(const Scalar& a, const Matrix& t) { return block_p(a) * t * block_p(-a); }

// Square root in Q(i) of a rational, when it exists there.
std::optional<Scalar> rational_sqrt(const Scalar& s) {
  if (!s.is_rational()) return std::nullopt;
  Rational q = abs(s.re());
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return std::nullopt;
  }
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  Rational root(num, den);
  if (sgn(s.re()) < 0) return Scalar(Rational(0), root);
  return Scalar(root);
}

// Roots of t^2 - p1 t + e2 with p2 = sum of squares given instead of e2.
std::optional<std::pair<Scalar, Scalar>> roots_from_power_sums(const Scalar& p1, const Scalar& p2) {
  const auto s = rational_sqrt(Scalar(2) * p2 - p1 * p1);
  if (!s) return std::nullopt;
  const Scalar half = Scalar::ratio(1, 2);
  return std::pair{half * (p1 + *s), half * (p1 - *s)};
}

struct Sampler {
  std::mt19937_64 rng;
  Scalar operator()() {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    const long n = num(rng);
    return Scalar::ratio(n, den(rng));
  }
  Scalar nonzero() {
    for (;;) {
      Scalar s = (*this)();
      if (!s.is_zero()) return s;
    }
  }
};

C2Params random_params(Sampler& s) {
  C2Params y;
  for (auto& row : y)
    for (auto& v : row) v = s();
  return y;
}

bool mixed_equation(const AdhmDatum& x) {
  const Matrix& b11 = x.b1().at_x0;
  const Matrix& b12 = x.b1().at_x1;
  const Matrix& b21 = x.b2().at_x0;
  const Matrix& b22 = x.b2().at_x1;
  return (commutator(b11, b22) + commutator(b12, b21)).is_zero();
}

bool pairs_commute(const AdhmDatum& x) {
  return commutator(x.b1().at_x0, x.b2().at_x0).is_zero() &&
         commutator(x.b1().at_x1, x.b2().at_x1).is_zero();
}

// (y31 - y41)(y52 - y62) - (y51 - y61)(y32 - y42), read off the joint spectra of
// the two commuting pairs; invariant under relabelling either spectrum.
std::optional<Scalar> eigen_relation(const RModule& m) {
  const TraceVector tv = trace_invariants(m, 2);
  const auto s1 = joint_spectrum_from_traces(tv.at("y1"), tv.at("y2"), tv.at("y1y1"),
                                             tv.at("y1y2"), tv.at("y2y2"));
  // Slot 1 of B1 is -z1.
  const auto s2 = joint_spectrum_from_traces(-tv.at("z1"), tv.at("z2"), tv.at("z1z1"),
                                             -tv.at("z1z2"), tv.at("z2z2"));
  if (!s1 || !s2) return std::nullopt;
  const auto& [p1, q1] = *s1;
  const auto& [p2, q2] = *s2;
  return (p1.first - q1.first) * (p2.second - q2.second) -
         (p1.second - q1.second) * (p2.first - q2.first);
}

}  // namespace

const char* generator_name(Generator g) {
  switch (g) {
    case Generator::Y1:
      return "y1";
    case Generator::Y2:
      return "y2";
    case Generator::Z1:
      return "z1";
    case Generator::Z2:
      return "z2";
  }
  return "?";
}

std::array<Matrix, 3> RModule::relation_values() const {
  const auto& [y1, y2, z1, z2] = action;
  return {commutator(y1, y2), commutator(z1, z2), commutator(y1, z2) + commutator(y2, z1)};
}

bool RModule::relations_hold() const {
  for (const auto& m : relation_values()) {
    if (!m.is_zero()) return false;
  }
  return true;
}

RModule RModule::conjugate(const GroupElement& g) const {
  RModule out{dim, {}};
  for (std::size_t k = 0; k < 4; ++k) out.action[k] = g.g() * action[k] * g.g_inv();
  return out;
}

RModule datum_to_module(const AdhmDatum& x) {
  if (x.r() != 0) throw InputError("datum_to_module: framing rank must be 0");
  RModule m{x.c(), {x.b1().at_x0, x.b2().at_x0, -x.b1().at_x1, x.b2().at_x1}};
  if (!m.relations_hold()) throw InputError("datum_to_module: the relations of R fail");
  if (!is_adhm(x)) throw InvariantViolation("datum_to_module: relations hold but mu != 0");
  return m;
}

AdhmDatum module_to_datum(const RModule& m) {
  const auto& [y1, y2, z1, z2] = m.action;
  return {m.dim, 0, {y1, -z1}, {y2, z2}, Pencil::zero(m.dim, 0), Pencil::zero(0, m.dim)};
}

const Scalar& TraceVector::at(const std::string& word) const {
  if (word.size() % 2 != 0 || word.size() / 2 > max_len) {
    throw InputError("TraceVector: no word '" + word + "'");
  }
  std::size_t index = 0;
  for (std::size_t p = 0; p < word.size(); p += 2) {
    const std::string letter = word.substr(p, 2);
    const auto it = std::find_if(kGenerators.begin(), kGenerators.end(),
                                 [&](Generator g) { return letter == generator_name(g); });
    if (it == kGenerators.end()) throw InputError("TraceVector: no word '" + word + "'");
    index = index * 4 + static_cast<std::size_t>(it - kGenerators.begin());
  }
  return entries[level_offset(word.size() / 2) + index].second;
}

std::size_t default_trace_length(std::size_t c, std::size_t cap) {
  return std::max<std::size_t>(1, std::min(c * c, cap));
}

TraceVector trace_invariants(const RModule& m, std::size_t max_len) {
  if (max_len == 0) throw InputError("trace_invariants: max_len must be at least 1");
  if (max_len > 12) throw InputError("trace_invariants: max_len above 12 is not supported");
  std::vector<Scalar> traces(level_offset(max_len + 1));
  traces[0] = Scalar(static_cast<long>(m.dim));
  fill_traces(m, Matrix::identity(m.dim), 0, 0, max_len, traces);
  TraceVector tv;
  tv.max_len = max_len;
  tv.entries.reserve(traces.size());
  for (std::size_t len = 0; len <= max_len; ++len) {
    const std::size_t off = level_offset(len);
    for (std::size_t k = 0; k < pow4(len); ++k) {
      tv.entries.emplace_back(word_name(k, len), std::move(traces[off + k]));
    }
  }
  return tv;
}

AdhmDatum lines_to_datum(const LineConfig& lines) {
  const std::size_t c = lines.size();
  Pencil b1 = Pencil::zero(c, c), b2 = Pencil::zero(c, c);
  for (std::size_t k = 0; k < c; ++k) {
    b1.at_x0(k, k) = -lines[k].a;
    b1.at_x1(k, k) = -lines[k].b;
    b2.at_x0(k, k) = -lines[k].c;
    b2.at_x1(k, k) = -lines[k].d;
  }
  return {c, 0, std::move(b1), std::move(b2), Pencil::zero(c, 0), Pencil::zero(0, c)};
}

SeparationResult separate_by_traces(const RModule& m1, const RModule& m2, std::size_t max_len) {
  if (m1.dim != m2.dim) throw InputError("separate_by_traces: modules have different dimensions");
  const TraceVector t1 = trace_invariants(m1, max_len);
  const TraceVector t2 = trace_invariants(m2, max_len);
  for (std::size_t k = 0; k < t1.entries.size(); ++k) {
    if (t1.entries[k].second != t2.entries[k].second) {
      return {OrbitSeparation::DistinctOrbitsCertified, t1.entries[k].first};
    }
  }
  return {OrbitSeparation::Indistinguishable, {}};
}

void Charge1Datum::validate() const {
  if (x.size() != r || y.size() != r || z.size() != r || w.size() != r) {
    throw InputError("Charge1Datum: x, y, z, w must all have length r");
  }
}

AdhmDatum Charge1Datum::to_datum() const {
  validate();
  const Matrix xr = Matrix::column(x).transpose();
  const Matrix yr = Matrix::column(y).transpose();
  return {1, r, Pencil::zero(1, 1), Pencil::zero(1, 1), {xr, yr}, {Matrix::column(z), Matrix::column(w)}};
}

std::array<Scalar, 3> charge1_residuals(const Charge1Datum& d) {
  d.validate();
  std::array<Scalar, 3> out;
  for (std::size_t k = 0; k < d.r; ++k) {
    out[0] += d.x[k] * d.z[k];
    out[1] += d.y[k] * d.w[k];
    out[2] += d.x[k] * d.w[k] + d.y[k] * d.z[k];
  }
  return out;
}

Matrix charge1_dmu(const Charge1Datum& d) {
  d.validate();
  const std::size_t r = d.r;
  Matrix m(3, 4 * r);
  for (std::size_t k = 0; k < r; ++k) {
    // Column blocks: x, y, z, w.
    m(0, k) = d.z[k];
    m(0, 2 * r + k) = d.x[k];
    m(1, r + k) = d.w[k];
    m(1, 3 * r + k) = d.y[k];
    m(2, k) = d.w[k];
    m(2, r + k) = d.z[k];
    m(2, 2 * r + k) = d.y[k];
    m(2, 3 * r + k) = d.x[k];
  }
  return m;
}

std::size_t charge1_dmu_rank(const Charge1Datum& d) { return rank(charge1_dmu(d)); }

Charge1Flags charge1_classify(const Charge1Datum& d) {
  d.validate();
  auto nonzero = [](const std::vector<Scalar>& v) {
    return std::any_of(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
  };
  Charge1Flags f;
  f.stable = nonzero(d.x) || nonzero(d.y);
  f.costable = nonzero(d.z) || nonzero(d.w);
  f.fj_stable = d.r > 0 && rank(Matrix::from_rows({d.x, d.y})) == 2;
  return f;
}

AdhmDatum psi_c2(const C2Params& y) {
  std::array<Matrix, 2> b1, b2;
  for (std::size_t k = 0; k < 2; ++k) {
    b1[k] = conj_p(y[0][k], triangular(y[1][k], y[2][k], y[3][k]));
    b2[k] = conj_p(y[0][k], triangular(y[1][k], y[4][k], y[5][k]));
  }
  return {2, 0, {b1[0], b1[1]}, {b2[0], b2[1]}, Pencil::zero(2, 0), Pencil::zero(0, 2)};
}

std::array<PolyMatrix, 4> psi_c2_symbolic() {
  std::vector<std::string> names;
  for (int i = 1; i <= 6; ++i)
    for (int k = 1; k <= 2; ++k) names.push_back("y" + std::to_string(i) + std::to_string(k));
  const VarList vars = make_vars(std::move(names));
  auto y = [&](int i, int k) { return Poly::variable(vars, static_cast<std::size_t>((i - 1) * 2 + (k - 1))); };
  const Poly one(vars, 1), zero(vars);

  auto block = [&](int k, int hi, int lo) {
    const PolyMatrix p = PolyMatrix::from_entries(2, 2, {one, zero, y(1, k), one});
    const PolyMatrix p_inv = PolyMatrix::from_entries(2, 2, {one, zero, -y(1, k), one});
    const PolyMatrix t = PolyMatrix::from_entries(
        2, 2, {y(hi, k), y(2, k) * (y(hi, k) - y(lo, k)), zero, y(lo, k)});
    return p * t * p_inv;
  };
  return {block(1, 3, 4), block(2, 3, 4), block(1, 5, 6), block(2, 5, 6)};
}

Matrix c2_isotropy(const Scalar& a, const Scalar& b, const Scalar& t1, const Scalar& t2) {
  return conj_p(a, triangular(b, t1, t2));
}

std::optional<std::array<std::pair<Scalar, Scalar>, 2>> joint_spectrum_from_traces(
    const Scalar& ta, const Scalar& tb, const Scalar& taa, const Scalar& tab, const Scalar& tbb) {
  const auto a = roots_from_power_sums(ta, taa);
  if (!a) return std::nullopt;
  std::array<std::pair<Scalar, Scalar>, 2> out;
  const auto& [a1, a2] = *a;
  if (a1 != a2) {
    // b1 + b2 = Tr b and a1 b1 + a2 b2 = Tr ab.
    const Scalar b1 = (tab - a2 * tb) / (a1 - a2);
    out = {std::pair{a1, b1}, std::pair{a2, tb - b1}};
  } else {
    const auto b = roots_from_power_sums(tb, tbb);
    if (!b) return std::nullopt;
    out = {std::pair{a1, b->first}, std::pair{a2, b->second}};
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool C2FixtureReport::all_pass() const {
  if (!symbolic_commuting) return false;
  for (std::size_t k = 0; k < 3; ++k) {
    if (samples[k] == 0 || mixed_ok[k] != samples[k] || commuting_ok[k] != samples[k]) return false;
  }
  return intersection_samples > 0 && eigen_relation_ok == intersection_samples &&
         isotropy_samples > 0 && isotropy_ok == isotropy_samples;
}

C2FixtureReport c2_fixture_checks(std::uint64_t seed, std::size_t samples_per_ideal,
                                  std::size_t intersection_samples) {
  C2FixtureReport rep;
  const auto sym = psi_c2_symbolic();
  auto comm = [](const PolyMatrix& a, const PolyMatrix& b) { return a * b - b * a; };
  rep.symbolic_commuting = comm(sym[0], sym[2]).is_zero() && comm(sym[1], sym[3]).is_zero();

  Sampler s{std::mt19937_64(seed)};
  auto record = [&](std::size_t ideal, const C2Params& y) {
    const AdhmDatum x = psi_c2(y);
    ++rep.samples[ideal];
    if (mixed_equation(x)) ++rep.mixed_ok[ideal];
    if (pairs_commute(x)) ++rep.commuting_ok[ideal];
  };

  for (std::size_t n = 0; n < samples_per_ideal; ++n) {
    // I1: solve the determinant relation for y52.
    C2Params y = random_params(s);
    while (y[2][0] == y[3][0]) y[3][0] = s();
    y[4][1] = y[5][1] + (y[4][0] - y[5][0]) * (y[2][1] - y[3][1]) / (y[2][0] - y[3][0]);
    record(0, y);

    // I2: y11 = y12, y21 = y22. Also used for the isotropy check.
    y = random_params(s);
    y[0][1] = y[0][0];
    y[1][1] = y[1][0];
    record(1, y);
    const AdhmDatum x = psi_c2(y);
    const GroupElement g(c2_isotropy(y[0][0], y[1][0], s.nonzero(), s.nonzero()));
    ++rep.isotropy_samples;
    if (act(g, x) == x) ++rep.isotropy_ok;

    // I3: y22 = -y21 and y21 y12 - y21 y11 + 1 = 0.
    y = random_params(s);
    y[1][0] = s.nonzero();
    y[1][1] = -y[1][0];
    y[0][1] = y[0][0] - y[1][0].inverse();
    record(2, y);
  }

  for (std::size_t n = 0; n < intersection_samples; ++n) {
    C2Params y = random_params(s);
    y[0][1] = y[0][0];
    y[1][1] = y[1][0];
    while (y[2][0] == y[3][0]) y[3][0] = s();
    y[4][1] = y[5][1] + (y[4][0] - y[5][0]) * (y[2][1] - y[3][1]) / (y[2][0] - y[3][0]);
    ++rep.intersection_samples;
    const AdhmDatum x = psi_c2(y);
    if (!is_adhm(x)) continue;
    const auto rel = eigen_relation(datum_to_module(x));
    if (rel && rel->is_zero()) ++rep.eigen_relation_ok;
  }
  return rep;
}

}  // namespace adhm
