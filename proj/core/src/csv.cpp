#include "fracbound/csv.hpp"

#include "fracbound/errors.hpp"

#include <cstdio>

namespace fracbound {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_table(const std::vector<std::string>& header, const std::vector<std::vector<double>>& columns) {
    if (header.size() != columns.size()) throw ShapeMismatch("csv_table: header and column counts differ");
    std::string out;
    for (std::size_t c = 0; c < header.size(); ++c) out += header[c] + (c + 1 == header.size() ? "\n" : ",");
    const std::size_t rows = columns.empty() ? 0 : columns[0].size();
    for (const auto& col : columns)
        if (col.size() != rows) throw ShapeMismatch("csv_table: ragged columns");
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < columns.size(); ++c) out += format_double(columns[c][r]) + (c + 1 == columns.size() ? "\n" : ",");
    return out;
}

}  // namespace fracbound
