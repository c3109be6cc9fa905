#include "lumispec/cie_data.hpp"

#include "lumispec/error.hpp"
#include "csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>

#include <fmt/format.h>

#ifndef LUMISPEC_DEFAULT_DATA_DIR
#define LUMISPEC_DEFAULT_DATA_DIR "data"
#endif

namespace lumispec {

namespace {

constexpr double coverage_low_nm = 380.0;
constexpr double coverage_high_nm = 780.0;

struct Columns {
    std::vector<double> wavelengths;
    std::vector<std::vector<double>> curves;
    std::vector<std::size_t> line_numbers;
};

Columns read_columns(std::istream& in, const std::string& what,
                     const std::vector<std::string>& names)
{
    const auto table = detail::read_numeric_csv(in, what);
    Columns c;
    c.wavelengths = detail::wavelength_column(
        table, detail::require_column(table, "wavelength_nm", what), what);
    if (c.wavelengths.front() > coverage_low_nm || c.wavelengths.back() < coverage_high_nm)
        throw Error(ErrorKind::parse,
                    fmt::format("{}: insufficient coverage: {}-{} nm does not span {}-{} nm", what,
                                c.wavelengths.front(), c.wavelengths.back(), coverage_low_nm,
                                coverage_high_nm));
    for (const auto& name : names)
        c.curves.push_back(detail::column(table, detail::require_column(table, name, what)));
    c.line_numbers = table.line_numbers;
    return c;
}

void require_nonnegative(const Columns& c, std::size_t k, const std::string& what,
                         const std::string& name)
{
    for (std::size_t i = 0; i < c.curves[k].size(); ++i)
        if (c.curves[k][i] < 0.0)
            throw Error(ErrorKind::parse, fmt::format("{}: line {}: negative {} value {}", what,
                                                      c.line_numbers[i], name, c.curves[k][i]));
}

std::vector<double> to_canonical(const Columns& c, std::size_t k)
{
    return interpolate_samples(c.wavelengths, c.curves[k], canonical_grid());
}

} // namespace

ColorMatchingFunctions load_cmf(std::istream& in)
{
    const std::string what = "CMF table";
    const auto c = read_columns(in, what, {"xbar", "ybar", "zbar"});
    const char* names[] = {"xbar", "ybar", "zbar"};
    for (std::size_t k = 0; k < 3; ++k)
        require_nonnegative(c, k, what, names[k]);

    ColorMatchingFunctions cmf{canonical_grid(), to_canonical(c, 0), to_canonical(c, 1),
                               to_canonical(c, 2)};
    const auto peak = std::max_element(cmf.ybar.begin(), cmf.ybar.end());
    const double peak_nm = cmf.grid.at(static_cast<std::size_t>(peak - cmf.ybar.begin()));
    if (std::abs(peak_nm - 555.0) > 10.0)
        throw Error(ErrorKind::parse,
                    fmt::format("{}: ybar peaks at {} nm, expected 555 +/- 10 nm", what, peak_nm));
    return cmf;
}

DaylightComponents load_daylight_components(std::istream& in)
{
    const std::string what = "daylight components table";
    const auto c = read_columns(in, what, {"s0", "s1", "s2"});
    return DaylightComponents{canonical_grid(), to_canonical(c, 0), to_canonical(c, 1),
                              to_canonical(c, 2)};
}

TestColorSamples load_tcs(std::istream& in)
{
    const std::string what = "TCS table";
    const auto table = detail::read_numeric_csv(in, what);
    const std::size_t wcol = detail::require_column(table, "wavelength_nm", what);
    if (table.header.size() != tcs_count + 1)
        throw Error(ErrorKind::parse, fmt::format("{}: expected {} samples, found {}", what,
                                                  tcs_count, table.header.size() - 1));
    Columns c;
    c.wavelengths = detail::wavelength_column(table, wcol, what);
    if (c.wavelengths.front() > coverage_low_nm || c.wavelengths.back() < coverage_high_nm)
        throw Error(ErrorKind::parse, fmt::format("{}: insufficient coverage", what));
    for (std::size_t col = 0; col < table.header.size(); ++col) {
        if (col == wcol)
            continue;
        auto curve = detail::column(table, col);
        for (std::size_t i = 0; i < curve.size(); ++i)
            if (curve[i] < 0.0 || curve[i] > 1.0)
                throw Error(ErrorKind::parse,
                            fmt::format("{}: line {}: reflectance {} of '{}' outside [0, 1]", what,
                                        table.line_numbers[i], curve[i], table.header[col]));
        c.curves.push_back(std::move(curve));
    }
    TestColorSamples tcs{canonical_grid(), {}};
    for (std::size_t k = 0; k < tcs_count; ++k)
        tcs.reflectance[k] = to_canonical(c, k);
    return tcs;
}

std::map<std::string, std::string> read_manifest(std::istream& in)
{
    std::map<std::string, std::string> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = detail::trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::parse,
                        fmt::format("manifest: line {}: expected 'name = path'", line_no));
        entries[detail::trim(line.substr(0, eq))] = detail::trim(line.substr(eq + 1));
    }
    return entries;
}

namespace {

std::ifstream open_entry(const std::map<std::string, std::string>& entries,
                         const std::filesystem::path& base, const std::string& name)
{
    const auto it = entries.find(name);
    if (it == entries.end())
        throw Error(ErrorKind::parse, fmt::format("manifest: missing dataset '{}'", name));
    const auto path = base / it->second;
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::parse, fmt::format("cannot open dataset '{}'", path.string()));
    return in;
}

} // namespace

Datasets load_datasets(const std::filesystem::path& manifest)
{
    std::ifstream in(manifest);
    if (!in)
        throw Error(ErrorKind::parse, fmt::format("cannot open manifest '{}'", manifest.string()));
    const auto entries = read_manifest(in);
    const auto base = manifest.parent_path();

    auto cmf_in = open_entry(entries, base, "cmf");
    auto day_in = open_entry(entries, base, "daylight");
    auto tcs_in = open_entry(entries, base, "tcs");
    return Datasets{load_cmf(cmf_in), load_daylight_components(day_in), load_tcs(tcs_in)};
}

std::filesystem::path bundled_data_dir()
{
    if (const char* env = std::getenv("LUMISPEC_DATA_DIR"); env && *env)
        return env;
    return LUMISPEC_DEFAULT_DATA_DIR;
}

const Datasets& bundled_datasets()
{
    static const Datasets datasets = load_datasets(bundled_data_dir() / "manifest.txt");
    return datasets;
}

} // namespace lumispec
