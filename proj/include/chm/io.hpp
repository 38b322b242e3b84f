#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "chm/core_rv.hpp"
#include "chm/estimates.hpp"
#include "chm/montecarlo.hpp"
#include "chm/suites.hpp"

namespace chm {

// Distribution interchange format:
//   { "atoms": [ { "re": <number>, "im": <number>, "w": <number> }, ... ] }
// Throws InvalidDistribution on malformed input or broken invariants; the
// message names the offending atom index.
FiniteDistribution parse_distribution(std::string_view text);
FiniteDistribution load_distribution(const std::filesystem::path& path);

nlohmann::json to_json(Complex z);
nlohmann::json to_json(const FiniteDistribution& dist);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const ExperimentResult& result);
nlohmann::json to_json(const Region& region);
nlohmann::json to_json(const CaseRecord& record);
nlohmann::json to_json(const SuiteSummary& summary);

}  // namespace chm
