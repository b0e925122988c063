#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "adhm/cli.hpp"
#include "adhm/fixtures.hpp"
#include "adhm/io.hpp"

namespace py = pybind11;
using namespace adhm;

namespace {

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact ADHM data computations; reports are JSON strings.";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  m.def("normalize", [](const std::string& text) { return print_datum(parse_datum(text)); },
        "Parse a datum and print it in canonical form.");
  m.def("check", [](const std::string& text) { return dump(stability_report(parse_datum(text))); });
  m.def("monad", [](const std::string& text) { return dump(monad_report(parse_datum(text))); });
  m.def("deform", [](const std::string& text, bool with_complex) {
        return dump(deformation_report(parse_datum(text), with_complex));
      }, py::arg("text"), py::arg("with_complex") = false);
  m.def("du", [](const std::string& text) { return dump(du_report(parse_datum(text))); });
  m.def("rank0", [](const std::string& text, std::size_t traces) {
        const AdhmDatum x = parse_datum(text);
        return dump(rank0_module_report(x, traces == 0 ? default_trace_length(x.c()) : traces));
      }, py::arg("text"), py::arg("traces") = 0);
  m.def("lines_datum", [](const std::string& spec) { return print_datum(lines_to_datum(parse_lines(spec))); });
  m.def("charge1", [](const std::string& spec) { return dump(charge1_report(parse_charge1(spec))); });
  m.def("c2_fixtures", [](std::uint64_t seed) { return dump(c2_fixture_report(c2_fixture_checks(seed))); },
        py::arg("seed") = 1);
  m.def("fixture", [](const std::string& id) { return print_datum(fixture_datum(id)); });
  m.def("fixture_ids", [] {
    std::vector<std::string> ids;
    for (const auto& f : fixture_catalogue()) ids.push_back(f.id);
    return ids;
  });
  m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      }, "Run the command line front end; returns (exit_code, stdout, stderr).");
}
