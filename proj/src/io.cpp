#include "adhm/io.hpp"

#include <array>
#include <map>

namespace adhm {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw InputError("schema error at " + path + ": " + what);
}

std::size_t read_count(const Json& j, const char* key) {
  const std::string path = std::string("$.") + key;
  if (!j.contains(key)) schema_error(path, "missing");
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) schema_error(path, "expected a non-negative integer");
  return v.get<std::size_t>();
}

Scalar read_scalar(const Json& v, const std::string& path) {
  if (!v.is_string()) schema_error(path, "expected a scalar string");
  try {
    return Scalar::parse(v.get<std::string>());
  } catch (const InputError& e) {
    schema_error(path, e.what());
  }
}

Pencil read_pencil(const Json& j, const char* key, std::size_t rows, std::size_t cols) {
  const std::string base = std::string("$.") + key;
  if (!j.contains(key)) schema_error(base, "missing");
  const Json& m = j.at(key);
  if (!m.is_array() || m.size() != rows) {
    schema_error(base, "expected a list of " + std::to_string(rows) + " rows");
  }
  Pencil p = Pencil::zero(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_path = base + "[" + std::to_string(r) + "]";
    const Json& row = m[r];
    if (!row.is_array() || row.size() != cols) {
      schema_error(row_path, "expected a row of " + std::to_string(cols) + " linear forms");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const std::string path = row_path + "[" + std::to_string(c) + "]";
      const Json& lf = row[c];
      if (!lf.is_object()) schema_error(path, "expected a linear form {\"x0\": ..., \"x1\": ...}");
      for (const auto& [k, v] : lf.items()) {
        if (k == "x0") {
          p.at_x0(r, c) = read_scalar(v, path + ".x0");
        } else if (k == "x1") {
          p.at_x1(r, c) = read_scalar(v, path + ".x1");
        } else {
          schema_error(path + "." + k, "unknown variable");
        }
      }
    }
  }
  return p;
}

Json linear_form(const Matrix& a0, const Matrix& a1, std::size_t r, std::size_t c) {
  Json lf = Json::object();
  if (!a0(r, c).is_zero()) lf["x0"] = a0(r, c).to_string();
  if (!a1(r, c).is_zero()) lf["x1"] = a1(r, c).to_string();
  return lf;
}

Json pencil_to_json(const Pencil& p) {
  Json m = Json::array();
  for (std::size_t r = 0; r < p.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < p.cols(); ++c) row.push_back(linear_form(p.at_x0, p.at_x1, r, c));
    m.push_back(std::move(row));
  }
  return m;
}

Json scalars_to_json(std::span<const Scalar> v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

std::vector<Scalar> parse_scalars(std::string_view s) {
  std::vector<Scalar> out;
  for (auto part : split(s, ',')) out.push_back(Scalar::parse(part));
  return out;
}

}  // namespace

AdhmDatum datum_from_json(const Json& j) {
  if (!j.is_object()) schema_error("$", "expected an object");
  static const std::array<std::string, 6> keys{"c", "r", "B1", "B2", "i", "j"};
  for (const auto& [k, v] : j.items()) {
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) schema_error("$." + k, "unknown key");
  }
  const std::size_t c = read_count(j, "c");
  const std::size_t r = read_count(j, "r");
  return {c, r, read_pencil(j, "B1", c, c), read_pencil(j, "B2", c, c), read_pencil(j, "i", c, r),
          read_pencil(j, "j", r, c)};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

AdhmDatum parse_datum(std::string_view text) { return datum_from_json(parse_json(text)); }

Json datum_to_json(const AdhmDatum& x) {
  Json j;
  j["c"] = x.c();
  j["r"] = x.r();
  j["B1"] = pencil_to_json(x.b1());
  j["B2"] = pencil_to_json(x.b2());
  j["i"] = pencil_to_json(x.i());
  j["j"] = pencil_to_json(x.j());
  return j;
}

std::string print_datum(const AdhmDatum& x) { return datum_to_json(x).dump(2); }

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(scalars_to_json(m.row(r)));
  return out;
}

Json linear_matrix_to_json(const PolyMatrix& m) {
  const auto& names = *m.vars();
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Json lf = Json::object();
      for (std::size_t k = 0; k < names.size(); ++k) {
        Monomial e(names.size());
        e[k] = 1;
        const Scalar s = m(r, c).coeff(e);
        if (!s.is_zero()) lf[names[k]] = s.to_string();
      }
      row.push_back(std::move(lf));
    }
    out.push_back(std::move(row));
  }
  return out;
}

Json locus_to_json(const P1Locus& l) {
  Json out;
  out["kind"] = l.kind == P1Locus::Kind::WholeLine ? "whole_line" : "finite_set";
  Json pts = Json::array();
  for (const auto& p : l.points) pts.push_back(p.to_string());
  out["points"] = std::move(pts);
  out["certificate"] = l.certificate.to_string();
  out["unresolved"] = l.unresolved.to_string();
  out["empty"] = l.empty();
  return out;
}

Json stability_report(const AdhmDatum& x) {
  Json out;
  const auto [rk, charge] = chern(x);
  out["c"] = x.c();
  out["r"] = x.r();
  out["chern"] = {{"rank", rk}, {"charge", charge}};
  const MomentValue mu = moment_map(x);
  out["adhm"] = mu.is_zero();
  out["moment_map"] = {{"x0^2", matrix_to_json(mu.components[0])},
                       {"x0*x1", matrix_to_json(mu.components[1])},
                       {"x1^2", matrix_to_json(mu.components[2])}};
  out["stable"] = is_stable(x);
  out["costable"] = is_costable(x);
  out["regular"] = is_regular(x);
  out["fj_stable"] = is_fj_stable(x);
  out["fj_semistable"] = is_fj_semistable(x);
  out["fj_costable"] = is_fj_costable(x);
  out["fj_regular"] = is_fj_regular(x);
  out["reachable_dim"] = reachable_subspace(x).dim();
  out["unobservable_dim"] = unobservable_subspace(x).dim();
  out["unstable_locus"] = locus_to_json(unstable_locus(x));
  out["uncostable_locus"] = locus_to_json(uncostable_locus(x));
  return out;
}

Json monad_report(const AdhmDatum& x) {
  const Monad m = build_monad(x);
  Json out;
  out["c"] = m.c;
  out["r"] = m.r;
  out["alpha"] = linear_matrix_to_json(m.alpha);
  out["beta"] = linear_matrix_to_json(m.beta);
  out["beta_alpha_zero"] = (m.beta * m.alpha).is_zero();
  const FramingReport f = framing_on_linf(m);
  out["framing"] = {{"valid", f.valid},
                    {"rank", f.rank},
                    {"alpha_locus", locus_to_json(f.alpha_locus)},
                    {"beta_locus", locus_to_json(f.beta_locus)},
                    {"complement_locus", locus_to_json(f.complement_locus)}};
  return out;
}

Json deformation_report(const AdhmDatum& x, bool with_complex) {
  const DeformationReport d = cohomology_dims(x);
  Json out;
  out["c"] = x.c();
  out["r"] = x.r();
  out["h0"] = d.h0;
  out["h1"] = d.h1;
  out["h2"] = d.h2;
  out["rank_d0"] = d.rank_d0;
  out["rank_dmu"] = d.rank_dmu;
  out["euler"] = static_cast<long long>(d.h0) - static_cast<long long>(d.h1) + static_cast<long long>(d.h2);
  out["expected_dim"] = d.expected_dim;
  out["stable"] = d.stable;
  out["smooth_point"] = d.smooth_point;
  out["surjectivity_criterion"] = d.stable ? Json(surjectivity_criterion(x)) : Json(nullptr);
  if (with_complex) {
    const DeformationComplex k = deformation_complex(x);
    out["d0"] = matrix_to_json(k.d0);
    out["d1"] = matrix_to_json(k.d1);
  }
  return out;
}

Json du_report(const AdhmDatum& x) {
  const DuDecomposition d = du_decompose(x);
  Json out;
  out["c"] = x.c();
  out["c_prime"] = d.c_prime;
  out["rank0_charge"] = d.v2.dim();
  out["regular_part"] = datum_to_json(d.regular_part);
  out["rank0_part"] = datum_to_json(d.rank0_part);
  out["regular_part_regular"] = is_regular(d.regular_part);
  out["reassembles"] = reassemble(d) == x;
  const auto split = try_polystable_split(x);
  Json ps;
  if (const auto* s = std::get_if<PolystableSplit>(&split)) {
    ps = {{"split", true}, {"v1_dim", s->v1.dim()}, {"v2_dim", s->v2.dim()}, {"rank0_closed_orbit", "undetermined"}};
  } else {
    const auto& n = std::get<NotSplit>(split);
    ps = {{"split", false}, {"v1_dim", n.v1.dim()}, {"v2_dim", n.v2.dim()}};
  }
  out["polystable_split"] = std::move(ps);
  return out;
}

Json trace_vector_to_json(const TraceVector& t) {
  // Words are distinct, so append to the ordered map directly; operator[]
  // would search linearly and go quadratic at 4^8 words.
  Json traces = Json::object();
  auto& obj = traces.get_ref<Json::object_t&>();
  obj.reserve(t.entries.size());
  for (const auto& [w, v] : t.entries) obj.emplace_back(w.empty() ? "1" : w, v.to_string());
  return {{"max_len", t.max_len}, {"traces", std::move(traces)}};
}

Json rank0_module_report(const AdhmDatum& x, std::size_t trace_len) {
  const RModule m = datum_to_module(x);
  Json out;
  out["c"] = m.dim;
  out["relations_hold"] = m.relations_hold();
  out["stable"] = is_stable(x);
  Json gens = Json::object();
  for (std::size_t k = 0; k < 4; ++k) gens[generator_name(static_cast<Generator>(k))] = matrix_to_json(m.action[k]);
  out["module"] = std::move(gens);
  if (trace_len > 0) out["traces"] = trace_vector_to_json(trace_invariants(m, trace_len));
  return out;
}

Json charge1_report(const Charge1Datum& d) {
  const auto res = charge1_residuals(d);
  const Charge1Flags f = charge1_classify(d);
  const AdhmDatum x = d.to_datum();
  Json out;
  out["r"] = d.r;
  out["residuals"] = scalars_to_json(res);
  const bool solution = res[0].is_zero() && res[1].is_zero() && res[2].is_zero();
  out["adhm"] = solution;
  out["dmu"] = matrix_to_json(charge1_dmu(d));
  out["dmu_rank"] = charge1_dmu_rank(d);
  out["flags"] = {{"stable", f.stable}, {"costable", f.costable}, {"fj_stable", f.fj_stable}};
  const Charge1Flags g{is_stable(x), is_costable(x), is_fj_stable(x)};
  out["general"] = {{"stable", g.stable}, {"costable", g.costable}, {"fj_stable", g.fj_stable}};
  out["agree"] = f == g;
  return out;
}

Json c2_fixture_report(const C2FixtureReport& r) {
  Json ideals = Json::array();
  for (std::size_t k = 0; k < 3; ++k) {
    ideals.push_back({{"ideal", "I" + std::to_string(k + 1)},
                      {"samples", r.samples[k]},
                      {"mixed_equation_ok", r.mixed_ok[k]},
                      {"commuting_ok", r.commuting_ok[k]}});
  }
  Json out;
  out["symbolic_commuting"] = r.symbolic_commuting;
  out["ideals"] = std::move(ideals);
  out["intersection_samples"] = r.intersection_samples;
  out["eigen_relation_ok"] = r.eigen_relation_ok;
  out["isotropy_samples"] = r.isotropy_samples;
  out["isotropy_ok"] = r.isotropy_ok;
  out["all_pass"] = r.all_pass();
  return out;
}

LineConfig parse_lines(std::string_view text) {
  LineConfig lines;
  if (trim(text).empty()) return lines;
  for (auto part : split(text, ';')) {
    if (part.empty()) continue;
    const auto v = parse_scalars(part);
    if (v.size() != 4) throw InputError("lines: expected a,b,c,d but got '" + std::string(part) + "'");
    lines.push_back({v[0], v[1], v[2], v[3]});
  }
  return lines;
}

Charge1Datum parse_charge1(std::string_view text) {
  std::map<char, std::vector<Scalar>> parts;
  for (auto part : split(text, ';')) {
    if (part.empty()) continue;
    const std::size_t eq = part.find('=');
    const std::string_view key = trim(part.substr(0, eq));
    if (eq == std::string_view::npos || key.size() != 1 || std::string_view("xyzw").find(key[0]) == std::string_view::npos) {
      throw InputError("charge1: expected x=...;y=...;z=...;w=... but got '" + std::string(part) + "'");
    }
    if (parts.count(key[0])) throw InputError("charge1: repeated key '" + std::string(key) + "'");
    parts[key[0]] = parse_scalars(part.substr(eq + 1));
  }
  if (parts.size() != 4) throw InputError("charge1: all of x, y, z, w are required");
  Charge1Datum d{parts['x'].size(), parts['x'], parts['y'], parts['z'], parts['w']};
  d.validate();
  return d;
}

}  // namespace adhm
