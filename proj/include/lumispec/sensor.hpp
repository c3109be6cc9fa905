#pragma once

#include "lumispec/spectral.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <vector>

namespace lumispec {

inline constexpr std::size_t dark_pixel_count = 13;        // D16..D28
inline constexpr std::size_t effective_pixel_count = 1500; // S1..S1500
inline constexpr int adc_bit_depth = 12;
inline constexpr int adc_max_count = (1 << adc_bit_depth) - 1;

// Simulator convention: dark level of the inverted output, in ADC counts.
inline constexpr double simulated_baseline_counts = 3800.0;
// Exposure that `auto_exposure` aims for at the brightest pixel.
inline constexpr double default_peak_signal_counts = 3000.0;

// Capture settings used on the original device; informational only.
inline constexpr double reference_integration_time_ms = 250.0;
inline constexpr double reference_min_illuminance_lux = 200.0;

/// One read-out of the linear CCD: dark-shielded and effective pixel counts.
class RawSensorFrame {
public:
    RawSensorFrame(std::vector<std::uint16_t> dark, std::vector<std::uint16_t> effective);

    std::span<const std::uint16_t> dark() const noexcept { return dark_; }
    std::span<const std::uint16_t> effective() const noexcept { return effective_; }

    bool operator==(const RawSensorFrame&) const = default;

private:
    std::vector<std::uint16_t> dark_;
    std::vector<std::uint16_t> effective_;
};

/// Two-point linear map from pixel index to wavelength.
class WavelengthCalibration {
public:
    WavelengthCalibration(double lambda_first_nm, double lambda_last_nm);

    double lambda_first() const noexcept { return first_; }
    double lambda_last() const noexcept { return last_; }

    // Uniform grid holding one sample per effective pixel.
    WavelengthGrid pixel_grid() const;

    bool operator==(const WavelengthCalibration&) const = default;

private:
    double first_;
    double last_;
};

/// Anchors of the prototype's calibration (pixel 1 and pixel 1500).
WavelengthCalibration default_calibration();

/// Quintic photodiode responsivity in lambda (metres), highest power first.
class ResponsivityModel {
public:
    ResponsivityModel(std::array<double, 6> coefficients, double band_low_nm, double band_high_nm);

    const std::array<double, 6>& coefficients() const noexcept { return coefficients_; }
    double band_low() const noexcept { return band_low_; }
    double band_high() const noexcept { return band_high_; }

private:
    std::array<double, 6> coefficients_;
    double band_low_;
    double band_high_;
};

/// TCD1103 fit, valid over 391-723 nm.
const ResponsivityModel& tcd1103_responsivity();

struct DarkCalibration {
    double baseline = 0.0;          // mean of the dark pixels
    std::vector<double> intensity;  // max(0, baseline - count), per effective pixel
};

DarkCalibration dark_calibrate(const RawSensorFrame& frame);

/// Wavelength of a (possibly fractional) 1-based pixel index.
double pixel_to_wavelength(double index, const WavelengthCalibration& calib);

/// Throws domain ("responsivity extrapolation") outside the model's band.
double responsivity(double lambda_nm, const ResponsivityModel& model);

// Per-pixel intensity divided by R(lambda), on the calibration's pixel grid.
Spd intensity_to_sensor_spd(std::span<const double> intensity, const WavelengthCalibration& calib,
                            const ResponsivityModel& model);
Spd frame_to_sensor_spd(const RawSensorFrame& frame, const WavelengthCalibration& calib,
                        const ResponsivityModel& model);

/// Dark calibration and responsivity compensation, resampled to the canonical grid.
Spd frame_to_spd(const RawSensorFrame& frame, const WavelengthCalibration& calib,
                 const ResponsivityModel& model);

// Noise-free analog signal S(lambda) R(lambda) * exposure per effective pixel,
// in ADC counts below the baseline.
std::vector<double> simulate_signal(const Spd& spd, const WavelengthCalibration& calib,
                                    const ResponsivityModel& model, double exposure_scale);

/// Exposure putting the brightest pixel `peak_counts` below the baseline.
double auto_exposure(const Spd& spd, const WavelengthCalibration& calib,
                     const ResponsivityModel& model,
                     double peak_counts = default_peak_signal_counts);

/// Forward model of a capture: counts = round(3800 - signal + noise), with
/// dark pixels at 3800 + noise. Throws saturation if any pixel would fall
/// below 0 counts.
RawSensorFrame simulate_frame(const Spd& spd, const WavelengthCalibration& calib,
                              const ResponsivityModel& model, double exposure_scale,
                              double noise_sigma, std::mt19937_64& rng);
RawSensorFrame simulate_frame(const Spd& spd, const WavelengthCalibration& calib,
                              const ResponsivityModel& model, double exposure_scale,
                              double noise_sigma, std::uint64_t seed);

// Frame text format: header `lumispec-frame v1 bitdepth=12 dark=13
// effective=1500`, then 13 dark and 1500 effective counts, one per line.
RawSensorFrame read_frame(std::istream& in);
void write_frame(std::ostream& out, const RawSensorFrame& frame);

// Key-value text with `lambda_first_nm` and `lambda_last_nm`.
WavelengthCalibration read_calibration(std::istream& in);
void write_calibration(std::ostream& out, const WavelengthCalibration& calib);

} // namespace lumispec
