#pragma once

#include "run_config.hpp"

#include <iosfwd>

namespace fracbound::cli {

/// Validates, dispatches and writes the manifest. Messages go to `log`.
int run(const RunConfig& config, std::ostream& log);

}  // namespace fracbound::cli
