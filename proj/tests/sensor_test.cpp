#include "lumispec/error.hpp"
#include "lumispec/illuminant.hpp"
#include "lumispec/sensor.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

using namespace lumispec;

namespace {

const ResponsivityModel& model()
{
    return tcd1103_responsivity();
}

RawSensorFrame uniform_frame(std::uint16_t dark, std::uint16_t effective)
{
    return RawSensorFrame(std::vector<std::uint16_t>(dark_pixel_count, dark),
                          std::vector<std::uint16_t>(effective_pixel_count, effective));
}

// R(lambda) written out term by term, lambda in metres.
double responsivity_oracle(double nm)
{
    const double l = nm * 1e-9;
    return -1.783e32 * std::pow(l, 5) + 4.289e26 * std::pow(l, 4) - 3.919e20 * std::pow(l, 3) +
           1.575e14 * l * l - 2.170e7 * l + 0.2012;
}

std::string frame_text(std::size_t dark, std::size_t effective, const std::string& header =
                           "lumispec-frame v1 bitdepth=12 dark=13 effective=1500")
{
    std::string t = header + "\n";
    for (std::size_t i = 0; i < dark; ++i)
        t += "3800\n";
    for (std::size_t i = 0; i < effective; ++i)
        t += "1000\n";
    return t;
}

} // namespace

TEST(RawSensorFrame, ValidatesShapeAndRange)
{
    EXPECT_NO_THROW(uniform_frame(0, 4095));
    EXPECT_THROW(RawSensorFrame(std::vector<std::uint16_t>(12, 0),
                                std::vector<std::uint16_t>(effective_pixel_count, 0)),
                 Error);
    EXPECT_THROW(RawSensorFrame(std::vector<std::uint16_t>(dark_pixel_count, 0),
                                std::vector<std::uint16_t>(1499, 0)),
                 Error);
    EXPECT_THROW(uniform_frame(4096, 0), Error);
}

TEST(DarkCalibrate, InversionAndClamp)
{
    const auto none = dark_calibrate(uniform_frame(2000, 2000));
    EXPECT_EQ(none.baseline, 2000.0);
    EXPECT_TRUE(std::all_of(none.intensity.begin(), none.intensity.end(), [](double v) { return v == 0.0; }));

    const auto lit = dark_calibrate(uniform_frame(2000, 1500));
    EXPECT_TRUE(std::all_of(lit.intensity.begin(), lit.intensity.end(), [](double v) { return v == 500.0; }));

    const auto negative = dark_calibrate(uniform_frame(2000, 2100));
    EXPECT_TRUE(std::all_of(negative.intensity.begin(), negative.intensity.end(), [](double v) { return v == 0.0; }));
}

TEST(DarkCalibrate, BaselineIsDarkMeanAndOutputNonNegative)
{
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> count(0, 4095);
    for (int t = 0; t < 20; ++t) {
        std::vector<std::uint16_t> dark(dark_pixel_count), eff(effective_pixel_count);
        double sum = 0.0;
        for (auto& d : dark) {
            d = static_cast<std::uint16_t>(count(rng));
            sum += d;
        }
        for (auto& e : eff)
            e = static_cast<std::uint16_t>(count(rng));
        const auto cal = dark_calibrate(RawSensorFrame(dark, eff));
        EXPECT_DOUBLE_EQ(cal.baseline, sum / 13.0);
        for (std::size_t i = 0; i < eff.size(); ++i)
            EXPECT_EQ(cal.intensity[i], std::max(0.0, cal.baseline - eff[i]));
    }
}

TEST(PixelToWavelength, AnchorsAndMidpoint)
{
    const auto c = default_calibration();
    EXPECT_EQ(pixel_to_wavelength(1, c), 391.0);
    EXPECT_EQ(pixel_to_wavelength(1500, c), 723.0);
    EXPECT_NEAR(pixel_to_wavelength(750.5, c), 557.0, 1e-12);
    EXPECT_THROW(pixel_to_wavelength(0, c), Error);
    EXPECT_THROW(pixel_to_wavelength(1501, c), Error);
}

TEST(PixelToWavelength, StrictlyIncreasingAndAffine)
{
    const auto c = default_calibration();
    const double step = (723.0 - 391.0) / 1499.0;
    double prev = 0.0;
    for (int i = 1; i <= 1500; ++i) {
        const double l = pixel_to_wavelength(i, c);
        EXPECT_GT(l, prev);
        EXPECT_NEAR(l, 391.0 + (i - 1) * step, 1e-10);
        prev = l;
    }
    const auto g = c.pixel_grid();
    EXPECT_EQ(g.count(), 1500u);
    EXPECT_NEAR(g.at(1499), 723.0, 1e-10);
}

TEST(WavelengthCalibration, RejectsInvertedAnchors)
{
    EXPECT_THROW(WavelengthCalibration(723.0, 391.0), Error);
    EXPECT_THROW(WavelengthCalibration(500.0, 500.0), Error);
}

TEST(Responsivity, PolynomialValuesAndBandGuard)
{
    EXPECT_NEAR(responsivity(400.0, model()), 0.793, 0.001);
    EXPECT_NEAR(responsivity(400.0, model()), responsivity_oracle(400.0), 1e-9);
    // The fitted coefficients evaluate to 0.7765 here.
    EXPECT_NEAR(responsivity(700.0, model()), 0.776509, 1e-6);
    EXPECT_NEAR(responsivity(700.0, model()), responsivity_oracle(700.0), 1e-9);
    try {
        responsivity(380.0, model());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::domain);
        EXPECT_NE(std::string(e.what()).find("responsivity extrapolation"), std::string::npos);
    }
    EXPECT_THROW(responsivity(724.0, model()), Error);
}

TEST(Responsivity, PositiveOverBand)
{
    for (double l = 391.0; l <= 723.0; l += 0.5)
        EXPECT_GT(responsivity(l, model()), 0.0);
}

TEST(SimulateFrame, ResponsivityFlatSourceGivesEqualCounts)
{
    // A source proportional to 1/R makes the forward model constant.
    const auto calib = default_calibration();
    const auto grid = calib.pixel_grid();
    std::vector<double> v(grid.count());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = 1.0 / responsivity(grid.at(i), model());
    const Spd s(grid, v);
    const auto f = simulate_frame(s, calib, model(), auto_exposure(s, calib, model()), 0.0, 1);
    const auto eff = f.effective();
    EXPECT_TRUE(std::all_of(eff.begin(), eff.end(), [&](auto c) { return c == eff[0]; }));
    EXPECT_EQ(eff[0], 800);
}

TEST(SimulateFrame, SpectrallyFlatSourceFollowsResponsivity)
{
    const auto calib = default_calibration();
    const double scale = 3000.0;
    const auto f = simulate_frame(test::constant_spd(1.0), calib, model(), scale, 0.0, 1);
    for (int i = 1; i <= 1500; i += 37) {
        const double expected = std::round(3800.0 - scale * responsivity(pixel_to_wavelength(i, calib), model()));
        EXPECT_EQ(f.effective()[static_cast<std::size_t>(i - 1)], expected);
    }
    EXPECT_TRUE(std::all_of(f.dark().begin(), f.dark().end(), [](auto c) { return c == 3800; }));
}

TEST(SimulateFrame, DeterministicForSeed)
{
    const auto calib = default_calibration();
    const Spd s = planck_spd(3000.0);
    const double e = auto_exposure(s, calib, model());
    EXPECT_EQ(simulate_frame(s, calib, model(), e, 2.0, 7), simulate_frame(s, calib, model(), e, 2.0, 7));
    EXPECT_FALSE(simulate_frame(s, calib, model(), e, 2.0, 7) == simulate_frame(s, calib, model(), e, 2.0, 8));
}

TEST(SimulateFrame, AutoExposurePlacesPeak3000CountsBelowBaseline)
{
    const auto calib = default_calibration();
    const Spd s = planck_spd(3000.0);
    const auto f = simulate_frame(s, calib, model(), auto_exposure(s, calib, model()), 0.0, 1);
    EXPECT_EQ(*std::min_element(f.effective().begin(), f.effective().end()), 800);
}

TEST(SimulateFrame, OverExposureIsSaturation)
{
    const auto calib = default_calibration();
    const Spd s = planck_spd(3000.0);
    const double e = auto_exposure(s, calib, model()) * 1.5;
    try {
        simulate_frame(s, calib, model(), e, 0.0, 1);
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::saturation);
    }
}

TEST(SimulateFrame, DegenerateAndInvalidInputs)
{
    const auto calib = default_calibration();
    EXPECT_THROW(simulate_frame(test::constant_spd(0.0), calib, model(), 1.0, 0.0, 1), Error);
    EXPECT_THROW(simulate_frame(test::constant_spd(1.0), calib, model(), -1.0, 0.0, 1), Error);
    EXPECT_THROW(simulate_frame(test::constant_spd(1.0), calib, model(), 1.0, -2.0, 1), Error);
}

TEST(RoundTrip, AnalogPathIsExactOnPixelGrid)
{
    const auto calib = default_calibration();
    std::mt19937_64 rng(42);
    for (int t = 0; t < 20; ++t) {
        const Spd s = test::random_bumps(rng);
        const auto signal = simulate_signal(s, calib, model(), 1234.5);
        const auto back = normalize_peak(intensity_to_sensor_spd(signal, calib, model()));
        const auto truth = normalize_peak(resample(s, calib.pixel_grid()));
        for (std::size_t i = 0; i < back.size(); ++i)
            ASSERT_NEAR(back[i], truth[i], 1e-6 * truth.max_value()) << i;
    }
}

TEST(RoundTrip, QuantizedPathWithinHalfCountBound)
{
    const auto calib = default_calibration();
    std::mt19937_64 rng(43);
    for (int t = 0; t < 10; ++t) {
        const Spd s = test::random_bumps(rng);
        const double e = auto_exposure(s, calib, model());
        const auto signal = simulate_signal(s, calib, model(), e);
        const auto back = frame_to_sensor_spd(simulate_frame(s, calib, model(), e, 0.0, 1), calib, model());
        const auto truth = resample(s, calib.pixel_grid());
        // Rounding moves each count by at most half a count, so the relative
        // error of a pixel is bounded by 0.5 / its analog signal.
        for (std::size_t i = 0; i < back.size(); ++i)
            ASSERT_LE(std::abs(back[i] / e - truth[i]) / truth[i], 0.5 / signal[i] + 1e-12) << i;
    }
}

TEST(FrameToSpd, CanonicalGridAndZeroOutsideSensorBand)
{
    const auto calib = default_calibration();
    const Spd s = planck_spd(3000.0);
    const auto f = simulate_frame(s, calib, model(), auto_exposure(s, calib, model()), 0.0, 1);
    const auto out = frame_to_spd(f, calib, model());
    EXPECT_EQ(out.grid(), canonical_grid());
    EXPECT_EQ(out[0], 0.0);  // 380 nm
    EXPECT_EQ(out[80], 0.0); // 780 nm
    EXPECT_GT(out[4], 0.0);  // 400 nm
}

TEST(FrameIo, RoundTripAndHeaderChecks)
{
    const auto calib = default_calibration();
    const Spd s = planck_spd(3000.0);
    const auto f = simulate_frame(s, calib, model(), auto_exposure(s, calib, model()), 2.0, 5);
    std::stringstream ss;
    write_frame(ss, f);
    EXPECT_EQ(read_frame(ss), f);

    auto parse = [](const std::string& t) {
        std::istringstream in(t);
        return read_frame(in);
    };
    EXPECT_NO_THROW(parse(frame_text(13, 1500)));
    EXPECT_THROW(parse(frame_text(12, 1500)), Error);
    EXPECT_THROW(parse(frame_text(13, 1499)), Error);
    EXPECT_THROW(parse(frame_text(13, 1501)), Error);
    EXPECT_THROW(parse(frame_text(13, 1500, "lumispec-frame v2 bitdepth=12 dark=13 effective=1500")), Error);
    EXPECT_THROW(parse(""), Error);
    EXPECT_NO_THROW(parse(frame_text(13, 1500) + "\n"));
    EXPECT_THROW(parse(frame_text(13, 1500) + "abc\n"), Error);
    std::string over = frame_text(13, 1500);
    over.replace(over.find("1000"), 4, "4096");
    EXPECT_THROW(parse(over), Error);
}

TEST(CalibrationIo, RoundTripAndMissingKey)
{
    const WavelengthCalibration c(390.25, 724.5);
    std::stringstream ss;
    write_calibration(ss, c);
    EXPECT_EQ(read_calibration(ss), c);

    std::istringstream colon("lambda_first_nm: 391\nlambda_last_nm: 723\n");
    EXPECT_EQ(read_calibration(colon), default_calibration());
    std::istringstream missing("lambda_first_nm = 391\n");
    EXPECT_THROW(read_calibration(missing), Error);
}
