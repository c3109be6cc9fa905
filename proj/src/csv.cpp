#include "csv.hpp"

#include "lumispec/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <sstream>

#include <fmt/format.h>

namespace lumispec::detail {

std::string trim(std::string s)
{
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

namespace {

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ','))
        fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',')
        fields.emplace_back();
    return fields;
}

double parse_number(const std::string& field, std::size_t line_no, const std::string& what)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(field, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != field.size() || !std::isfinite(v))
        throw Error(ErrorKind::parse,
                    fmt::format("{}: line {}: '{}' is not a finite number", what, line_no, field));
    return v;
}

} // namespace

NumericTable read_numeric_csv(std::istream& in, const std::string& what)
{
    NumericTable table;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        auto fields = split(t);
        if (!have_header) {
            table.header = std::move(fields);
            have_header = true;
            continue;
        }
        if (fields.size() != table.header.size())
            throw Error(ErrorKind::parse,
                        fmt::format("{}: line {}: expected {} fields, found {}", what, line_no,
                                    table.header.size(), fields.size()));
        std::vector<double> row;
        row.reserve(fields.size());
        for (const auto& f : fields)
            row.push_back(parse_number(f, line_no, what));
        table.rows.push_back(std::move(row));
        table.line_numbers.push_back(line_no);
    }
    if (!have_header)
        throw Error(ErrorKind::parse, fmt::format("{}: empty input", what));
    if (table.rows.empty())
        throw Error(ErrorKind::parse, fmt::format("{}: no data rows", what));
    return table;
}

std::size_t require_column(const NumericTable& table, const std::string& name,
                           const std::string& what)
{
    for (std::size_t i = 0; i < table.header.size(); ++i)
        if (table.header[i] == name)
            return i;
    throw Error(ErrorKind::parse, fmt::format("{}: missing column '{}'", what, name));
}

std::vector<double> column(const NumericTable& table, std::size_t col)
{
    std::vector<double> out;
    out.reserve(table.rows.size());
    for (const auto& row : table.rows)
        out.push_back(row[col]);
    return out;
}

std::vector<double> wavelength_column(const NumericTable& table, std::size_t col,
                                      const std::string& what)
{
    auto wl = column(table, col);
    for (std::size_t i = 1; i < wl.size(); ++i)
        if (!(wl[i] > wl[i - 1]))
            throw Error(ErrorKind::parse,
                        fmt::format("{}: line {}: wavelengths must be strictly increasing", what,
                                    table.line_numbers[i]));
    return wl;
}

} // namespace lumispec::detail
