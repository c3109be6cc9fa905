#include "lumispec/optics.hpp"

#include "lumispec/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace lumispec {

namespace {

// Wavelengths within this many nm of a band edge count as on the edge.
constexpr double band_slack_nm = 1e-9;

void check_band(double lo, double hi)
{
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo > 0.0))
        throw Error(ErrorKind::domain, "wavelength band must be positive and finite");
    if (!(lo < hi))
        throw Error(ErrorKind::domain,
                    fmt::format("degenerate wavelength band [{}, {}] nm", lo, hi));
}

void check_in_band(double lambda_nm, const OpticalDesign& d)
{
    if (!(lambda_nm >= d.lambda_low_nm - band_slack_nm)
        || !(lambda_nm <= d.lambda_high_nm + band_slack_nm))
        throw Error(ErrorKind::domain, fmt::format("{} nm outside design band [{}, {}] nm",
                                                   lambda_nm, d.lambda_low_nm, d.lambda_high_nm));
}

OpticalDesign base_design(Arrangement a, const GratingSpec& g, const SensorSpec& s, double lo,
                          double hi)
{
    if (!(s.length_mm > 0.0) || s.pixel_count < 2)
        throw Error(ErrorKind::domain, "sensor needs positive length and at least 2 pixels");
    check_band(lo, hi);
    OpticalDesign d;
    d.arrangement = a;
    d.grating = g;
    d.sensor = s;
    d.lambda_low_nm = lo;
    d.lambda_high_nm = hi;
    d.theta_low = diffraction_angle(lo, g);
    d.theta_high = diffraction_angle(hi, g);
    return d;
}

double asin_ratio(double lambda_nm, const GratingSpec& g)
{
    return std::asin(g.order * lambda_nm * 1e-3 / g.pitch_um);
}

} // namespace

GratingSpec GratingSpec::from_lines_per_mm(double lines_per_mm, int order)
{
    if (!(lines_per_mm > 0.0))
        throw Error(ErrorKind::domain, "grating density must be positive");
    return GratingSpec{1000.0 / lines_per_mm, order};
}

std::string_view to_string(Arrangement a)
{
    return a == Arrangement::parallel ? "parallel" : "inclined";
}

double diffraction_angle(double lambda_nm, const GratingSpec& g)
{
    if (!(g.pitch_um > 0.0) || g.order < 1)
        throw Error(ErrorKind::domain, "grating needs positive pitch and order >= 1");
    if (!(lambda_nm >= 0.0))
        throw Error(ErrorKind::domain, "wavelength must be nonnegative");
    const double ratio = g.order * lambda_nm * 1e-3 / g.pitch_um;
    if (ratio >= 1.0)
        throw Error(ErrorKind::no_first_order,
                    fmt::format("no first-order maximum: m*lambda = {} um >= d = {} um",
                                g.order * lambda_nm * 1e-3, g.pitch_um));
    return std::asin(ratio);
}

OpticalDesign design_parallel(const GratingSpec& g, const SensorSpec& s, double lambda_low_nm,
                              double lambda_high_nm)
{
    auto d = base_design(Arrangement::parallel, g, s, lambda_low_nm, lambda_high_nm);
    const double d1 = s.length_mm / (std::tan(d.theta_high) - std::tan(d.theta_low));
    d.d1_mm = d1;
    d.h1_mm = d1 * std::tan(d.theta_low);
    return d;
}

OpticalDesign design_inclined(const GratingSpec& g, const SensorSpec& s, double lambda_low_nm,
                              double lambda_high_nm)
{
    auto d = base_design(Arrangement::inclined, g, s, lambda_low_nm, lambda_high_nm);
    const double theta2 = (d.theta_low + d.theta_high) / 2.0;
    d.theta2 = theta2;
    d.d2_mm = s.length_mm / (2.0 * std::tan(d.theta_high - theta2));
    return d;
}

double position_parallel(double lambda_nm, const OpticalDesign& design)
{
    if (design.arrangement != Arrangement::parallel)
        throw Error(ErrorKind::domain, "position_parallel needs a parallel design");
    check_in_band(lambda_nm, design);
    return *design.d1_mm * std::tan(asin_ratio(lambda_nm, design.grating)) - *design.h1_mm;
}

double position_inclined(double lambda_nm, const OpticalDesign& design)
{
    if (design.arrangement != Arrangement::inclined)
        throw Error(ErrorKind::domain, "position_inclined needs an inclined design");
    check_in_band(lambda_nm, design);
    return design.sensor.length_mm / 2.0
        - *design.d2_mm * std::tan(*design.theta2 - asin_ratio(lambda_nm, design.grating));
}

double position(double lambda_nm, const OpticalDesign& design)
{
    return design.arrangement == Arrangement::parallel ? position_parallel(lambda_nm, design)
                                                       : position_inclined(lambda_nm, design);
}

double position_slope(double lambda_nm, const OpticalDesign& design)
{
    check_in_band(lambda_nm, design);
    // Work in micrometres so d and lambda share units; d(theta)/d(lambda) is
    // m / (d * sqrt(1 - (m lambda / d)^2)) per um, i.e. 1e-3 of that per nm.
    const double m = design.grating.order;
    const double pitch = design.grating.pitch_um;
    const double lam = m * lambda_nm * 1e-3;
    const double root = std::sqrt(1.0 - (lam / pitch) * (lam / pitch));
    if (design.arrangement == Arrangement::parallel) {
        // D1 d^2 / (d^2 - lambda^2)^(3/2), written as d D1 / ((d^2 - lambda^2) root).
        const double per_um = pitch * *design.d1_mm / ((pitch * pitch - lam * lam) * root);
        return per_um * m * 1e-3;
    }
    const double c = std::cos(*design.theta2 - std::asin(lam / pitch));
    const double per_um = *design.d2_mm / (c * c) / (pitch * root);
    return per_um * m * 1e-3;
}

double collimator_aperture(double delta_nm, const SensorSpec& s, double lambda_low_nm,
                           double lambda_high_nm, double theta2)
{
    if (!(delta_nm > 0.0))
        throw Error(ErrorKind::domain, "resolution delta must be positive");
    check_band(lambda_low_nm, lambda_high_nm);
    return delta_nm * s.length_mm
        / ((lambda_high_nm - lambda_low_nm) * std::sin(std::numbers::pi - theta2));
}

double linearity_metric(const std::function<double(double)>& slope, double lambda_low_nm,
                        double lambda_high_nm, std::size_t samples)
{
    if (samples < 2)
        throw Error(ErrorKind::domain, "linearity metric needs at least 2 samples");
    double lo = slope(lambda_low_nm);
    double hi = lo;
    const double step = (lambda_high_nm - lambda_low_nm) / static_cast<double>(samples - 1);
    for (std::size_t i = 1; i < samples; ++i) {
        const double w = i + 1 == samples ? lambda_high_nm
                                          : lambda_low_nm + static_cast<double>(i) * step;
        const double v = slope(w);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return hi / lo;
}

double linearity_metric(const OpticalDesign& design, double lambda_low_nm, double lambda_high_nm,
                        std::size_t samples)
{
    return linearity_metric([&](double w) { return position_slope(w, design); }, lambda_low_nm,
                            lambda_high_nm, samples);
}

} // namespace lumispec
