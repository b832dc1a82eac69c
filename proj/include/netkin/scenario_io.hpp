#pragma once

#include <iosfwd>
#include <string>

#include "netkin/scenario.hpp"

namespace netkin {

/// Parse a scenario file. Sections: [params], repeated [edge], [node],
/// [boundary]. Unknown sections or keys are rejected. Throws
/// std::runtime_error with a line-numbered message on malformed input.
Scenario load_scenario(std::istream& in, const std::string& name = "scenario");
Scenario load_scenario_file(const std::string& path);

/// Serialize with full double precision; load(save(s)) reproduces s
/// bit-exactly.
std::string save_scenario(const Scenario& s);
void save_scenario_file(const Scenario& s, const std::string& path);

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double x);

} // namespace netkin
