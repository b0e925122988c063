#include "adhm/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "adhm/fixtures.hpp"
#include "adhm/io.hpp"

namespace adhm {

namespace {

struct Options {
  std::string input;
  std::string fixture;
  bool json = false;
  std::size_t max_c = 8;
  bool with_complex = false;
  std::string lines;
  std::optional<std::size_t> traces;
  std::string charge1;
  bool c2_fixtures = false;
};

void add_common(CLI::App* cmd, Options& o, bool needs_source) {
  auto* in = cmd->add_option("--input", o.input, "datum JSON file, or - for stdin");
  auto* fx = cmd->add_option("--fixture", o.fixture, "built-in datum id (see `fixtures`)");
  in->excludes(fx);
  if (needs_source) cmd->callback([cmd] {
      if (cmd->count("--input") + cmd->count("--fixture") == 0) {
        throw CLI::RequiredError("--input or --fixture");
      }
    });
  cmd->add_flag("--json", o.json, "pretty-printed JSON instead of key = value lines");
  cmd->add_option("--max-c", o.max_c, "refuse data with larger c")->capture_default_str();
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    buf << f.rdbuf();
  }
  return buf.str();
}

AdhmDatum load(const Options& o) {
  AdhmDatum x = o.fixture.empty() ? parse_datum(read_input(o.input)) : fixture_datum(o.fixture);
  if (x.c() > o.max_c) {
    throw InputError("c = " + std::to_string(x.c()) + " exceeds --max-c " + std::to_string(o.max_c));
  }
  return x;
}

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  out << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

void emit(const Json& report, const Options& o, std::ostream& out) {
  if (o.json) {
    out << report.dump(2) << '\n';
  } else {
    flatten(report, "", out);
  }
}

Json rank0_report(const Options& o) {
  const int modes = !o.lines.empty() + !o.charge1.empty() + o.c2_fixtures + !o.input.empty() + !o.fixture.empty();
  if (modes != 1) {
    throw InputError("rank0: give exactly one of --lines, --charge1, --c2-fixtures, --input, --fixture");
  }
  if (o.c2_fixtures) return c2_fixture_report(c2_fixture_checks());
  if (!o.charge1.empty()) return charge1_report(parse_charge1(o.charge1));
  if (!o.fixture.empty()) {
    if (auto d = fixture_charge1(o.fixture)) return charge1_report(*d);
  }
  const AdhmDatum x = o.lines.empty() ? load(o) : lines_to_datum(parse_lines(o.lines));
  if (x.c() > o.max_c) {
    throw InputError("c = " + std::to_string(x.c()) + " exceeds --max-c " + std::to_string(o.max_c));
  }
  return rank0_module_report(x, o.traces.value_or(default_trace_length(x.c())));
}

Json fixtures_report() {
  Json out = Json::array();
  for (const auto& f : fixture_catalogue()) out.push_back({{"id", f.id}, {"description", f.description}});
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact ADHM data toolkit: stability, monads, deformations, rank-0 modules"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "moment map, stability suite, unstable loci, Chern data");
  add_common(check, o, true);
  auto* monad = app.add_subcommand("monad", "monad maps and framing on the line at infinity");
  add_common(monad, o, true);
  auto* deform = app.add_subcommand("deform", "deformation complex cohomology");
  add_common(deform, o, true);
  deform->add_flag("--complex", o.with_complex, "include the d0 and d1 matrices");
  auto* du = app.add_subcommand("du", "regular plus rank-0 decomposition");
  add_common(du, o, true);
  auto* r0 = app.add_subcommand("rank0", "rank-0 module invariants and fixtures");
  add_common(r0, o, false);
  r0->add_option("--lines", o.lines, "a,b,c,d;... line configuration");
  r0->add_option("--traces", o.traces, "maximal word length for trace invariants");
  r0->add_option("--charge1", o.charge1, "x=..;y=..;z=..;w=.. charge-one datum");
  r0->add_flag("--c2-fixtures", o.c2_fixtures, "run the charge-two component checks");
  auto* fx = app.add_subcommand("fixtures", "list built-in data");
  fx->add_flag("--json", o.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Json report;
    if (check->parsed()) {
      report = stability_report(load(o));
    } else if (monad->parsed()) {
      report = monad_report(load(o));
    } else if (deform->parsed()) {
      report = deformation_report(load(o), o.with_complex);
    } else if (du->parsed()) {
      report = du_report(load(o));
    } else if (r0->parsed()) {
      report = rank0_report(o);
    } else {
      if (o.json) {
        out << fixtures_report().dump(2) << '\n';
      } else {
        for (const auto& f : fixture_catalogue()) out << f.id << "  " << f.description << '\n';
      }
      return 0;
    }
    emit(report, o, out);
    return 0;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"adhm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace adhm
