#pragma once

#include "lumispec/cie_data.hpp"
#include "lumispec/colorimetry.hpp"
#include "lumispec/spectral.hpp"

#include <string_view>

namespace lumispec {

enum class ReferenceBranch { planckian, daylight };

std::string_view to_string(ReferenceBranch b);

/// Below this temperature the reference is a Planckian radiator.
inline constexpr double daylight_threshold_k = 5000.0;

struct ReferenceSpec {
    double cct = 0.0;
    ReferenceBranch branch = ReferenceBranch::planckian;
    bool operator==(const ReferenceSpec&) const = default;
};

/// Planck's law with c1 = 3.7418e-16 W m^2, c2 = 1.4388e-2 m K, peak-normalized.
Spd planck_spd(double kelvin, const WavelengthGrid& grid = canonical_grid());

// Unnormalized Planck radiance at one wavelength (nm).
double planck_radiance(double wavelength_nm, double kelvin);

// x_D for 4000-7000 K and 7000-25000 K respectively; y_D from x_D.
double daylight_x(double kelvin);
double daylight_y(double x_d);

struct DaylightSynthesis {
    Spd spd;
    ChromaticityXY xy_d;
    double m1 = 0.0;
    double m2 = 0.0;
    std::size_t clamped = 0; // negative composite values set to zero
};

/// D-series SPD for 4000 K <= T <= 25000 K, peak-normalized.
DaylightSynthesis synthesize_daylight(double kelvin, const DaylightComponents& comps,
                                      const WavelengthGrid& grid = canonical_grid());
Spd daylight_spd(double kelvin, const DaylightComponents& comps,
                 const WavelengthGrid& grid = canonical_grid());

struct Reference {
    Spd spd;
    ReferenceSpec spec;
    // Daylight branch only; zero otherwise.
    ChromaticityXY xy_d;
    double m1 = 0.0;
    double m2 = 0.0;
    std::size_t clamped = 0;
};

/// Planckian for T < 5000 K, daylight for T >= 5000 K; 1000 K < T <= 25000 K.
Reference reference_for(double kelvin, const DaylightComponents& comps,
                        const WavelengthGrid& grid = canonical_grid());

} // namespace lumispec
