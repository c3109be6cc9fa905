#include "lumispec/sensor.hpp"

#include "lumispec/error.hpp"
#include "csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>

#include <fmt/format.h>

namespace lumispec {

namespace {

constexpr double band_slack_nm = 1e-9;

constexpr std::string_view frame_header = "lumispec-frame v1 bitdepth=12 dark=13 effective=1500";

void check_counts(std::span<const std::uint16_t> counts, std::size_t expected, const char* what)
{
    if (counts.size() != expected)
        throw Error(ErrorKind::parse,
                    fmt::format("frame needs {} {} counts, got {}", expected, what, counts.size()));
    for (auto c : counts)
        if (c > adc_max_count)
            throw Error(ErrorKind::parse,
                        fmt::format("{} count {} exceeds 12-bit range", what, c));
}

} // namespace

RawSensorFrame::RawSensorFrame(std::vector<std::uint16_t> dark, std::vector<std::uint16_t> effective)
    : dark_(std::move(dark)), effective_(std::move(effective))
{
    check_counts(dark_, dark_pixel_count, "dark");
    check_counts(effective_, effective_pixel_count, "effective");
}

WavelengthCalibration::WavelengthCalibration(double lambda_first_nm, double lambda_last_nm)
    : first_(lambda_first_nm), last_(lambda_last_nm)
{
    if (!std::isfinite(first_) || !std::isfinite(last_) || !(first_ > 0.0) || !(first_ < last_))
        throw Error(ErrorKind::parse,
                    fmt::format("calibration needs 0 < lambda_first < lambda_last, got {} and {}",
                                first_, last_));
}

WavelengthGrid WavelengthCalibration::pixel_grid() const
{
    return WavelengthGrid(first_, (last_ - first_) / static_cast<double>(effective_pixel_count - 1),
                          effective_pixel_count);
}

WavelengthCalibration default_calibration()
{
    return WavelengthCalibration(391.0, 723.0);
}

ResponsivityModel::ResponsivityModel(std::array<double, 6> coefficients, double band_low_nm,
                                     double band_high_nm)
    : coefficients_(coefficients), band_low_(band_low_nm), band_high_(band_high_nm)
{
    if (!(band_low_ < band_high_))
        throw Error(ErrorKind::domain, "responsivity band is empty");
    constexpr int probes = 2000;
    for (int i = 0; i <= probes; ++i) {
        const double w = band_low_ + (band_high_ - band_low_) * i / probes;
        if (!(responsivity(w, *this) > 0.0))
            throw Error(ErrorKind::domain,
                        fmt::format("responsivity is not positive at {:.2f} nm", w));
    }
}

const ResponsivityModel& tcd1103_responsivity()
{
    static const ResponsivityModel model({-1.783e32, 4.289e26, -3.919e20, 1.575e14, -2.170e7, 0.2012},
                                         391.0, 723.0);
    return model;
}

DarkCalibration dark_calibrate(const RawSensorFrame& frame)
{
    const auto dark = frame.dark();
    const double baseline = std::accumulate(dark.begin(), dark.end(), 0.0)
        / static_cast<double>(dark.size());
    DarkCalibration out{baseline, {}};
    out.intensity.reserve(frame.effective().size());
    for (auto count : frame.effective())
        out.intensity.push_back(std::max(0.0, baseline - static_cast<double>(count)));
    return out;
}

double pixel_to_wavelength(double index, const WavelengthCalibration& calib)
{
    if (!(index >= 1.0) || !(index <= static_cast<double>(effective_pixel_count)))
        throw Error(ErrorKind::domain, fmt::format("pixel index {} outside 1..1500", index));
    const double t = (index - 1.0) / static_cast<double>(effective_pixel_count - 1);
    return std::lerp(calib.lambda_first(), calib.lambda_last(), t);
}

double responsivity(double lambda_nm, const ResponsivityModel& model)
{
    if (!(lambda_nm >= model.band_low() - band_slack_nm)
        || !(lambda_nm <= model.band_high() + band_slack_nm))
        throw Error(ErrorKind::domain,
                    fmt::format("responsivity extrapolation: {} nm outside [{}, {}] nm", lambda_nm,
                                model.band_low(), model.band_high()));
    const double lambda = lambda_nm * 1e-9;
    double r = 0.0;
    for (double c : model.coefficients())
        r = r * lambda + c;
    return r;
}

Spd intensity_to_sensor_spd(std::span<const double> intensity, const WavelengthCalibration& calib,
                            const ResponsivityModel& model)
{
    if (intensity.size() != effective_pixel_count)
        throw Error(ErrorKind::domain, "intensity vector must hold one value per effective pixel");
    std::vector<double> v(intensity.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = intensity[i]
            / responsivity(pixel_to_wavelength(static_cast<double>(i + 1), calib), model);
    return Spd(calib.pixel_grid(), std::move(v));
}

Spd frame_to_sensor_spd(const RawSensorFrame& frame, const WavelengthCalibration& calib,
                        const ResponsivityModel& model)
{
    return intensity_to_sensor_spd(dark_calibrate(frame).intensity, calib, model);
}

Spd frame_to_spd(const RawSensorFrame& frame, const WavelengthCalibration& calib,
                 const ResponsivityModel& model)
{
    return resample(frame_to_sensor_spd(frame, calib, model), canonical_grid());
}

std::vector<double> simulate_signal(const Spd& spd, const WavelengthCalibration& calib,
                                    const ResponsivityModel& model, double exposure_scale)
{
    if (!(exposure_scale > 0.0) || !std::isfinite(exposure_scale))
        throw Error(ErrorKind::domain, "exposure scale must be positive and finite");
    const Spd on_pixels = resample(spd, calib.pixel_grid());
    if (on_pixels.is_zero())
        throw Error(ErrorKind::degenerate_spd,
                    fmt::format("degenerate SPD: no power within {}-{} nm", calib.lambda_first(),
                                calib.lambda_last()));
    std::vector<double> signal(effective_pixel_count);
    for (std::size_t i = 0; i < signal.size(); ++i)
        signal[i] = on_pixels[i]
            * responsivity(pixel_to_wavelength(static_cast<double>(i + 1), calib), model)
            * exposure_scale;
    return signal;
}

double auto_exposure(const Spd& spd, const WavelengthCalibration& calib,
                     const ResponsivityModel& model, double peak_counts)
{
    const auto unit = simulate_signal(spd, calib, model, 1.0);
    return peak_counts / *std::max_element(unit.begin(), unit.end());
}

RawSensorFrame simulate_frame(const Spd& spd, const WavelengthCalibration& calib,
                              const ResponsivityModel& model, double exposure_scale,
                              double noise_sigma, std::mt19937_64& rng)
{
    if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma))
        throw Error(ErrorKind::domain, "noise sigma must be nonnegative");
    const auto signal = simulate_signal(spd, calib, model, exposure_scale);
    std::normal_distribution<double> noise(0.0, noise_sigma > 0.0 ? noise_sigma : 1.0);
    auto draw = [&] { return noise_sigma > 0.0 ? noise(rng) : 0.0; };
    auto to_count = [](double level) {
        return static_cast<std::uint16_t>(std::clamp(level, 0.0, double(adc_max_count)));
    };

    std::vector<std::uint16_t> dark(dark_pixel_count);
    for (auto& d : dark)
        d = to_count(std::round(simulated_baseline_counts + draw()));

    std::vector<std::uint16_t> effective(effective_pixel_count);
    for (std::size_t i = 0; i < effective.size(); ++i) {
        const double level = std::round(simulated_baseline_counts - signal[i] + draw());
        if (level < 0.0)
            throw Error(ErrorKind::saturation,
                        fmt::format("saturation: pixel {} would read {:.0f} counts", i + 1, level));
        effective[i] = to_count(level);
    }
    return RawSensorFrame(std::move(dark), std::move(effective));
}

RawSensorFrame simulate_frame(const Spd& spd, const WavelengthCalibration& calib,
                              const ResponsivityModel& model, double exposure_scale,
                              double noise_sigma, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    return simulate_frame(spd, calib, model, exposure_scale, noise_sigma, rng);
}

RawSensorFrame read_frame(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line))
        throw Error(ErrorKind::parse, "frame: empty input");
    if (detail::trim(line) != frame_header)
        throw Error(ErrorKind::parse, fmt::format("frame: line 1: expected header '{}'", frame_header));

    std::vector<std::uint16_t> counts;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = detail::trim(line);
        if (t.empty())
            continue;
        int value = -1;
        const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
        if (ec != std::errc() || end != t.data() + t.size() || value < 0 || value > adc_max_count)
            throw Error(ErrorKind::parse,
                        fmt::format("frame: line {}: '{}' is not a 12-bit count", line_no, t));
        counts.push_back(static_cast<std::uint16_t>(value));
    }
    if (counts.size() != dark_pixel_count + effective_pixel_count)
        throw Error(ErrorKind::parse,
                    fmt::format("frame: expected {} dark + {} effective counts, found {} values",
                                dark_pixel_count, effective_pixel_count, counts.size()));
    std::vector<std::uint16_t> dark(counts.begin(), counts.begin() + dark_pixel_count);
    std::vector<std::uint16_t> effective(counts.begin() + dark_pixel_count, counts.end());
    return RawSensorFrame(std::move(dark), std::move(effective));
}

void write_frame(std::ostream& out, const RawSensorFrame& frame)
{
    out << frame_header << '\n';
    for (auto c : frame.dark())
        out << c << '\n';
    for (auto c : frame.effective())
        out << c << '\n';
}

WavelengthCalibration read_calibration(std::istream& in)
{
    std::optional<double> first, last;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = detail::trim(line);
        if (line.empty())
            continue;
        const auto sep = line.find_first_of("=:");
        if (sep == std::string::npos)
            throw Error(ErrorKind::parse,
                        fmt::format("calibration: line {}: expected 'key = value'", line_no));
        const std::string key = detail::trim(line.substr(0, sep));
        const std::string text = detail::trim(line.substr(sep + 1));
        double value = 0.0;
        const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || end != text.data() + text.size())
            throw Error(ErrorKind::parse,
                        fmt::format("calibration: line {}: '{}' is not a number", line_no, text));
        if (key == "lambda_first_nm")
            first = value;
        else if (key == "lambda_last_nm")
            last = value;
        else
            throw Error(ErrorKind::parse,
                        fmt::format("calibration: line {}: unknown key '{}'", line_no, key));
    }
    if (!first || !last)
        throw Error(ErrorKind::parse, "calibration: needs lambda_first_nm and lambda_last_nm");
    return WavelengthCalibration(*first, *last);
}

void write_calibration(std::ostream& out, const WavelengthCalibration& calib)
{
    out << fmt::format("lambda_first_nm = {:.17g}\nlambda_last_nm = {:.17g}\n", calib.lambda_first(),
                       calib.lambda_last());
}

} // namespace lumispec
