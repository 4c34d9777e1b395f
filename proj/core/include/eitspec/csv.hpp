// csv.hpp: small helpers for the plain CSV files eitspec reads and writes.
//
// Numbers are written with 17 significant digits, '.' separator, LF endings.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eitspec::csv {

// "%.17g"; infinities as "inf"/"-inf", NaN as "nan".
std::string format_real(double v);

// Locale-independent decimal parse of the whole field (surrounding blanks
// allowed). Accepts "inf", "-inf".
std::optional<double> parse_real(std::string_view field);

std::vector<std::string> split_row(std::string_view line);

// Splits text into lines, dropping a trailing '\r' from each.
std::vector<std::string> split_lines(std::string_view text);

std::string_view trim(std::string_view s);

}  // namespace eitspec::csv
