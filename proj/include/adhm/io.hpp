#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "adhm/datum.hpp"
#include "adhm/deform.hpp"
#include "adhm/monad.hpp"
#include "adhm/rank0.hpp"

namespace adhm {

using Json = nlohmann::ordered_json;

// Datum schema:
//   {"c": 2, "r": 1, "B1": [[lf, lf], [lf, lf]], "B2": ..., "i": ..., "j": ...}
// with a linear form lf = {"x0": "<scalar>", "x1": "<scalar>"}; a missing key
// is a zero coefficient. Matrices are lists of rows.

/// Throws InputError naming the offending JSON path.
AdhmDatum datum_from_json(const Json& j);
/// Throws InputError; syntax errors carry a line and column.
AdhmDatum parse_datum(std::string_view text);
Json parse_json(std::string_view text);

/// Zero coefficients are omitted, so parse_datum(print_datum(x)) == x.
Json datum_to_json(const AdhmDatum& x);
std::string print_datum(const AdhmDatum& x);

Json matrix_to_json(const Matrix& m);
/// Entries as maps from variable name to coefficient.
Json linear_matrix_to_json(const PolyMatrix& m);
Json locus_to_json(const P1Locus& l);

Json stability_report(const AdhmDatum& x);
/// Requires is_adhm(x). Framing failures propagate as InvariantViolation.
Json monad_report(const AdhmDatum& x);
Json deformation_report(const AdhmDatum& x, bool with_complex);
/// Requires is_adhm(x) and is_stable(x).
Json du_report(const AdhmDatum& x);

/// The empty word is keyed "1".
Json trace_vector_to_json(const TraceVector& t);
Json rank0_module_report(const AdhmDatum& x, std::size_t trace_len);
Json charge1_report(const Charge1Datum& d);
Json c2_fixture_report(const C2FixtureReport& r);

/// "a,b,c,d;a,b,c,d;..." with scalars in the text grammar.
LineConfig parse_lines(std::string_view text);
/// "x=1,0;y=2,0;z=0,1;w=0,1"; every key exactly once.
Charge1Datum parse_charge1(std::string_view text);

}  // namespace adhm
