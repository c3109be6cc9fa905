#include "lumispec/illuminant.hpp"

#include "lumispec/error.hpp"

#include <cmath>

#include <fmt/format.h>

namespace lumispec {

namespace {

constexpr double c1 = 3.7418e-16;
constexpr double c2 = 1.4388e-2;

constexpr double daylight_min_k = 4000.0;
constexpr double daylight_max_k = 25000.0;
constexpr double reference_min_k = 1000.0;

} // namespace

std::string_view to_string(ReferenceBranch b)
{
    return b == ReferenceBranch::planckian ? "planckian" : "daylight";
}

double planck_radiance(double wavelength_nm, double kelvin)
{
    const double lambda = wavelength_nm * 1e-9;
    return c1 / std::pow(lambda, 5) / std::expm1(c2 / (lambda * kelvin));
}

Spd planck_spd(double kelvin, const WavelengthGrid& grid)
{
    if (!(kelvin > 0.0) || !std::isfinite(kelvin))
        throw Error(ErrorKind::cct_out_of_range, "Planck temperature must be positive");
    std::vector<double> v(grid.count());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = planck_radiance(grid.at(i), kelvin);
    return normalize_peak(Spd(grid, std::move(v)));
}

double daylight_x(double kelvin)
{
    if (kelvin < daylight_min_k || kelvin > daylight_max_k)
        throw Error(ErrorKind::cct_out_of_range,
                    fmt::format("daylight model needs 4000-25000 K, got {:.0f} K", kelvin));
    const double t1 = 1e3 / kelvin;
    const double t2 = 1e6 / (kelvin * kelvin);
    const double t3 = 1e9 / (kelvin * kelvin * kelvin);
    if (kelvin <= 7000.0)
        return 0.244063 + 0.09911 * t1 + 2.9678 * t2 - 4.6070 * t3;
    return 0.237040 + 0.24748 * t1 + 1.9018 * t2 - 2.0064 * t3;
}

double daylight_y(double x_d)
{
    return -3.0 * x_d * x_d + 2.87 * x_d - 0.275;
}

DaylightSynthesis synthesize_daylight(double kelvin, const DaylightComponents& comps,
                                      const WavelengthGrid& grid)
{
    const double x = daylight_x(kelvin);
    const double y = daylight_y(x);
    const double den = 0.0241 + 0.2562 * x - 0.7341 * y;
    const double m1 = (-1.3515 - 1.7703 * x + 5.9114 * y) / den;
    const double m2 = (0.0300 - 31.4424 * x + 30.0717 * y) / den;

    std::vector<double> v(comps.grid.count());
    std::size_t clamped = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double s = comps.s0[i] + m1 * comps.s1[i] + m2 * comps.s2[i];
        if (s < 0.0)
            ++clamped;
        v[i] = s < 0.0 ? 0.0 : s;
    }
    Spd spd = normalize_peak(resample(Spd(comps.grid, std::move(v)), grid));
    return DaylightSynthesis{std::move(spd), {x, y}, m1, m2, clamped};
}

Spd daylight_spd(double kelvin, const DaylightComponents& comps, const WavelengthGrid& grid)
{
    return synthesize_daylight(kelvin, comps, grid).spd;
}

Reference reference_for(double kelvin, const DaylightComponents& comps,
                        const WavelengthGrid& grid)
{
    if (!(kelvin > reference_min_k) || !(kelvin <= daylight_max_k))
        throw Error(ErrorKind::cct_out_of_range,
                    fmt::format("reference illuminant needs 1000 K < T <= 25000 K, got {:.0f} K",
                                kelvin));
    if (kelvin < daylight_threshold_k)
        return Reference{planck_spd(kelvin, grid), {kelvin, ReferenceBranch::planckian}, {}, 0.0,
                         0.0, 0};
    auto d = synthesize_daylight(kelvin, comps, grid);
    return Reference{std::move(d.spd), {kelvin, ReferenceBranch::daylight}, d.xy_d, d.m1, d.m2,
                     d.clamped};
}

} // namespace lumispec
