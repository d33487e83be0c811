#pragma once

#include "fracbound/verify.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fracbound::cli {

/// Desk-scale property checks for one suite name ("all" runs every suite).
std::vector<CheckReport> run_suite(const std::string& suite, double alpha, std::uint64_t seed);

}  // namespace fracbound::cli
