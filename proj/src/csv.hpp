#pragma once

// Minimal numeric CSV reader shared by the dataset and SPD loaders.

#include <iosfwd>
#include <string>
#include <vector>

namespace lumispec::detail {

struct NumericTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    std::vector<std::size_t> line_numbers; // 1-based source line of each row
};

// Throws Error(parse) naming the offending line. Blank lines and lines
// starting with '#' are skipped. Every row must have header.size() fields.
NumericTable read_numeric_csv(std::istream& in, const std::string& what);

// Column index by name, or throws Error(parse).
std::size_t require_column(const NumericTable& table, const std::string& name,
                           const std::string& what);

// Wavelength column must be strictly increasing.
std::vector<double> wavelength_column(const NumericTable& table, std::size_t col,
                                      const std::string& what);

std::vector<double> column(const NumericTable& table, std::size_t col);

std::string trim(std::string s);

} // namespace lumispec::detail
