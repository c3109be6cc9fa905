#pragma once

#include "lumispec/cie_data.hpp"
#include "lumispec/spectral.hpp"

#include <span>

namespace lumispec {

struct Tristimulus {
    double X = 0.0;
    double Y = 0.0;
    double Z = 0.0;

    bool operator==(const Tristimulus&) const = default;
};

/// CIE 1931 (x, y). z = 1 - x - y.
struct ChromaticityXY {
    double x = 0.0;
    double y = 0.0;

    double z() const noexcept { return 1.0 - x - y; }
    bool operator==(const ChromaticityXY&) const = default;
};

/// CIE 1960 UCS (u, v).
struct ChromaticityUV {
    double u = 0.0;
    double v = 0.0;

    bool operator==(const ChromaticityUV&) const = default;
};

/// CIE 1964 (W*, U*, V*).
struct Cie1964Coords {
    double w_star = 0.0;
    double u_star = 0.0;
    double v_star = 0.0;

    bool operator==(const Cie1964Coords&) const = default;
};

/// Normalization constant k = 100 / integral(S * ybar). Throws for zero power.
double luminance_normalization(const Spd& spd, const ColorMatchingFunctions& cmf);

/// Tristimulus of a light source, scaled so Y = 100.
Tristimulus tristimulus(const Spd& spd, const ColorMatchingFunctions& cmf);

/// Tristimulus of a surface with `reflectance` (on the CMF grid) lit by
/// `spd`, using the bare illuminant's normalization constant `k`.
Tristimulus tristimulus_reflected(const Spd& spd, std::span<const double> reflectance,
                                  const ColorMatchingFunctions& cmf, double k);

ChromaticityXY chromaticity_xy(const Tristimulus& t);
ChromaticityUV uv_from_xy(const ChromaticityXY& c);

// W* = 25 Y^(1/3) - 17; U*, V* = 13 W* times the offset of the sample's
// (u, v) from the white point `uv_white`.
Cie1964Coords cie1964_coords(double Y, const ChromaticityUV& uv_sample,
                             const ChromaticityUV& uv_white);

} // namespace lumispec
