#include "adhm/fixtures.hpp"

namespace adhm {

namespace {

Matrix rows(std::vector<std::vector<Scalar>> r) { return Matrix::from_rows(r); }

AdhmDatum gitvsfj() {
  // B1 = [[x0, x0], [x1, x1]], B2 = [[x0, -x0], [x1, -x1]], i = [x0; x1],
  // j = [-2 x1, 2 x0].
  return {2,
          1,
          {rows({{1, 1}, {0, 0}}), rows({{0, 0}, {1, 1}})},
          {rows({{1, -1}, {0, 0}}), rows({{0, 0}, {1, -1}})},
          {rows({{1}, {0}}), rows({{0}, {1}})},
          {rows({{0, 2}}), rows({{-2, 0}})}};
}

Charge1Datum charge1(std::vector<Scalar> x, std::vector<Scalar> y, std::vector<Scalar> z,
                     std::vector<Scalar> w) {
  return {x.size(), std::move(x), std::move(y), std::move(z), std::move(w)};
}

}  // namespace

const std::vector<FixtureInfo>& fixture_catalogue() {
  static const std::vector<FixtureInfo> catalogue{
      {"gitvsfj", "c=2, r=1: regular datum that is not FJ-semistable"},
      {"fj-counterexample", "c=3, r=4 staircase i: FJ-stable with ext^2 of dimension 3"},
      {"charge1-nonsingular", "c=1, r=2: x=(1,0), y=(2,0), z=(0,1), w=(0,1), a nonsingular point"},
      {"charge1-rank2", "c=1, r=2: dependent i1, i2 and j=0, derivative of rank 2"},
      {"c2-components", "c=2, r=0: image of a point of the second component under psi"},
      {"lines-demo", "c=3, r=0: direct sum of three lines disjoint from l_inf"},
  };
  return catalogue;
}

std::optional<Charge1Datum> fixture_charge1(std::string_view id) {
  if (id == "charge1-nonsingular") return charge1({1, 0}, {2, 0}, {0, 1}, {0, 1});
  if (id == "charge1-rank2") return charge1({1, 0}, {2, 0}, {0, 0}, {0, 0});
  return std::nullopt;
}

std::optional<LineConfig> fixture_lines(std::string_view id) {
  if (id != "lines-demo") return std::nullopt;
  return LineConfig{{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, -1, 2}};
}

std::optional<C2Params> fixture_c2_params(std::string_view id) {
  if (id != "c2-components") return std::nullopt;
  // y11 = y12 and y21 = y22.
  return C2Params{{{1, 1}, {2, 2}, {3, 1}, {-1, 2}, {Scalar::ratio(1, 2), -2}, {0, 1}}};
}

AdhmDatum staircase_datum(std::size_t c) {
  const std::size_t r = c + 1;
  Pencil i = Pencil::zero(c, r);
  for (std::size_t k = 0; k < c; ++k) {
    i.at_x0(k, k) = 1;
    i.at_x1(k, k + 1) = 1;
  }
  return {c, r, Pencil::zero(c, c), Pencil::zero(c, c), std::move(i), Pencil::zero(r, c)};
}

AdhmDatum fixture_datum(std::string_view id) {
  if (id == "gitvsfj") return gitvsfj();
  if (id == "fj-counterexample") return staircase_datum(3);
  if (auto d = fixture_charge1(id)) return d->to_datum();
  if (auto y = fixture_c2_params(id)) return psi_c2(*y);
  if (auto l = fixture_lines(id)) return lines_to_datum(*l);
  throw InputError("unknown fixture '" + std::string(id) + "'");
}

}  // namespace adhm
