#pragma once

#include <functional>
#include <optional>
#include <string_view>

namespace lumispec {

struct GratingSpec {
    double pitch_um = 0.0; // slit spacing d
    int order = 1;         // diffraction order m

    static GratingSpec from_lines_per_mm(double lines_per_mm, int order = 1);
};

struct SensorSpec {
    double length_mm = 0.0;        // useful detector length S
    std::size_t pixel_count = 1500;
};

enum class Arrangement { parallel, inclined };

std::string_view to_string(Arrangement a);

struct OpticalDesign {
    Arrangement arrangement = Arrangement::inclined;
    GratingSpec grating;
    SensorSpec sensor;
    double lambda_low_nm = 0.0;
    double lambda_high_nm = 0.0;
    double theta_low = 0.0;  // rad
    double theta_high = 0.0; // rad
    // Inclined arrangement: sensor normal at the mean angle, distance D2.
    std::optional<double> theta2;
    std::optional<double> d2_mm;
    // Parallel arrangement: grating-sensor distance D1 and offset h1.
    std::optional<double> d1_mm;
    std::optional<double> h1_mm;
};

/// asin(m * lambda / d). Throws no_first_order when m * lambda >= d.
double diffraction_angle(double lambda_nm, const GratingSpec& g);

/// Sensor parallel to the grating: D1 = S / (tan thH - tan thL), h1 = D1 tan thL.
OpticalDesign design_parallel(const GratingSpec& g, const SensorSpec& s, double lambda_low_nm,
                              double lambda_high_nm);

/// Sensor perpendicular to the mean angle: th2 = (thL + thH) / 2,
/// D2 = S / (2 tan(thH - th2)).
OpticalDesign design_inclined(const GratingSpec& g, const SensorSpec& s, double lambda_low_nm,
                              double lambda_high_nm);

// Position of the first-order maximum along the sensor, 0 at lambda_low and
// S at lambda_high. Throws domain for wavelengths outside the design band.
double position_parallel(double lambda_nm, const OpticalDesign& design);
double position_inclined(double lambda_nm, const OpticalDesign& design);
double position(double lambda_nm, const OpticalDesign& design);

/// Closed-form ds/dlambda in mm per nm for the design's arrangement.
double position_slope(double lambda_nm, const OpticalDesign& design);

/// a ~= delta * S / ((lambda_high - lambda_low) * sin(pi - theta2)).
double collimator_aperture(double delta_nm, const SensorSpec& s, double lambda_low_nm,
                           double lambda_high_nm, double theta2);

/// max(slope) / min(slope) over `samples` uniformly spaced wavelengths.
double linearity_metric(const std::function<double(double)>& slope, double lambda_low_nm,
                        double lambda_high_nm, std::size_t samples);
double linearity_metric(const OpticalDesign& design, double lambda_low_nm, double lambda_high_nm,
                        std::size_t samples);

} // namespace lumispec
