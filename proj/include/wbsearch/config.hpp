#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "wbsearch/montecarlo.hpp"
#include "wbsearch/sim_engine.hpp"
#include "wbsearch/weight_core.hpp"

namespace wbsearch {

/// Contents of a key = value scenario file.
///
///   # comment
///   env.width = 20
///   planner = weight_based
///   observer = 10 10 2        # x y radius, repeatable
///
/// Unknown keys and malformed values raise ConfigError with the line number.
/// The full key list is in README.md.
struct ConfigFile {
    ScenarioConfig scenario;
    BatchConfig batch;  // batch.base mirrors scenario
    std::optional<SurvivorReport> report;  // report.* keys, for `weights`/`plan`
};

ConfigFile parse_config(std::string_view text, const std::string& origin = "<config>");
ConfigFile load_config(const std::string& path);

}  // namespace wbsearch
