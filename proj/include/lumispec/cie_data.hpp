#pragma once

#include "lumispec/spectral.hpp"

#include <array>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace lumispec {

/// CIE 1931 2° observer on the canonical grid.
struct ColorMatchingFunctions {
    WavelengthGrid grid;
    std::vector<double> xbar, ybar, zbar;
};

/// Daylight basis S0, S1, S2 on the canonical grid. S1 and S2 may be negative.
struct DaylightComponents {
    WavelengthGrid grid;
    std::vector<double> s0, s1, s2;
};

inline constexpr std::size_t tcs_count = 8;

/// Reflectances of the eight CRI test colour samples, each in [0, 1].
struct TestColorSamples {
    WavelengthGrid grid;
    std::array<std::vector<double>, tcs_count> reflectance;
};

// Columns: wavelength_nm, xbar, ybar, zbar. Must cover 380-780 nm.
ColorMatchingFunctions load_cmf(std::istream& in);
// Columns: wavelength_nm, s0, s1, s2.
DaylightComponents load_daylight_components(std::istream& in);
// Columns: wavelength_nm followed by exactly 8 reflectance columns.
TestColorSamples load_tcs(std::istream& in);

struct Datasets {
    ColorMatchingFunctions cmf;
    DaylightComponents daylight;
    TestColorSamples tcs;
};

// Manifest lines are `name = relative/path.csv`; names `cmf`, `daylight` and
// `tcs` are required, `#` starts a comment. Paths resolve against the
// manifest's directory.
std::map<std::string, std::string> read_manifest(std::istream& in);
Datasets load_datasets(const std::filesystem::path& manifest);

// Directory of the bundled CSV assets, overridable via LUMISPEC_DATA_DIR.
std::filesystem::path bundled_data_dir();
const Datasets& bundled_datasets();

} // namespace lumispec
