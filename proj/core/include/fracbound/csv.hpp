#pragma once

#include <string>
#include <vector>

namespace fracbound {

/// %.17g formatting, the one used by every CSV writer.
std::string format_double(double v);

/// Writes a header row and numeric rows.
std::string csv_table(const std::vector<std::string>& header, const std::vector<std::vector<double>>& columns);

}  // namespace fracbound
