#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace rosenmorse::cli {

// Shortest decimal string that parses back to exactly `x`.
std::string format_number(double x);

// Comma-separated row terminated by '\n'.
void write_csv_row(std::ostream& out, const std::vector<std::string>& cells);
void write_csv_row(std::ostream& out, const std::vector<double>& cells);

// Splits one CSV line on commas (no quoting; emitted cells never need it).
std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace rosenmorse::cli
