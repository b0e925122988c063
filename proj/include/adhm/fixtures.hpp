#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adhm/datum.hpp"
#include "adhm/rank0.hpp"

namespace adhm {

struct FixtureInfo {
  std::string id;
  std::string description;
};

/// Built-in data: gitvsfj, fj-counterexample, charge1-nonsingular,
/// charge1-rank2, c2-components, lines-demo.
const std::vector<FixtureInfo>& fixture_catalogue();

/// Throws InputError for an unknown id.
AdhmDatum fixture_datum(std::string_view id);

/// Source parameters for the fixtures built from a smaller description.
std::optional<Charge1Datum> fixture_charge1(std::string_view id);
std::optional<LineConfig> fixture_lines(std::string_view id);
std::optional<C2Params> fixture_c2_params(std::string_view id);

/// Rank-(c+1), charge-c datum whose only nonzero block is the staircase
/// i = x0 e_{k,k} + x1 e_{k,k+1}.
AdhmDatum staircase_datum(std::size_t c);

}  // namespace adhm
