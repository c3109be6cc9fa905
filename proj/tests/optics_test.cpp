#include "lumispec/error.hpp"
#include "lumispec/optics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace lumispec;

namespace {

constexpr double deg = std::numbers::pi / 180.0;

GratingSpec prototype_grating()
{
    return GratingSpec::from_lines_per_mm(600.0);
}

SensorSpec prototype_sensor()
{
    return SensorSpec{8.25, 1500};
}

ErrorKind kind_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::parse;
}

} // namespace

TEST(DiffractionAngle, FirstOrderAt550nm)
{
    const GratingSpec g{1.6667, 1};
    EXPECT_NEAR(diffraction_angle(550.0, g) / deg, 19.27, 0.005);
    EXPECT_NEAR(diffraction_angle(550.0, prototype_grating()), std::asin(0.33), 1e-12);
    EXPECT_NEAR(diffraction_angle(550.0, g), std::asin(0.55 / 1.6667), 1e-15);
    EXPECT_NEAR(diffraction_angle(1e-6, g), 0.0, 1e-9);
}

TEST(DiffractionAngle, NoFirstOrderBeyondPitch)
{
    const GratingSpec g{1.6667, 1};
    EXPECT_EQ(kind_of([&] { diffraction_angle(1700.0, g); }), ErrorKind::no_first_order);
    EXPECT_EQ(kind_of([&] { diffraction_angle(1666.7, g); }), ErrorKind::no_first_order);
    EXPECT_EQ(kind_of([&] { diffraction_angle(900.0, GratingSpec{1.6667, 2}); }),
              ErrorKind::no_first_order);
}

TEST(DesignParallel, PrototypeParameters)
{
    const auto d = design_parallel(prototype_grating(), prototype_sensor(), 380.0, 720.0);
    EXPECT_EQ(d.arrangement, Arrangement::parallel);
    EXPECT_NEAR(*d.d1_mm, 33.696148, 1e-5);
    EXPECT_NEAR(*d.h1_mm, 7.890550, 1e-5);
    EXPECT_NEAR(d.theta_low / deg, 13.17935, 1e-4);
    EXPECT_NEAR(d.theta_high / deg, 25.59455, 1e-4);
    const double span = *d.d1_mm * std::tan(d.theta_high) - *d.d1_mm * std::tan(d.theta_low);
    EXPECT_NEAR(span / 8.25, 1.0, 1e-9);
    EXPECT_FALSE(d.theta2.has_value());
}

TEST(DesignInclined, PrototypeParameters)
{
    const auto d = design_inclined(prototype_grating(), prototype_sensor(), 380.0, 720.0);
    EXPECT_EQ(d.arrangement, Arrangement::inclined);
    EXPECT_NEAR(*d.d2_mm, 37.9, 0.05);
    EXPECT_NEAR(*d.d2_mm, 37.924416, 1e-5);
    EXPECT_NEAR(*d.theta2 / deg, 19.386952, 1e-5);
    EXPECT_EQ(*d.theta2, (d.theta_low + d.theta_high) / 2.0);
    EXPECT_NEAR(d.theta_high - *d.theta2, *d.theta2 - d.theta_low, 1e-15);
    EXPECT_NEAR(2.0 * *d.d2_mm * std::tan(d.theta_high - *d.theta2) / 8.25, 1.0, 1e-9);
}

TEST(Design, DegenerateOrNonDiffractingBand)
{
    for (auto f : {design_parallel, design_inclined}) {
        EXPECT_THROW(f(prototype_grating(), prototype_sensor(), 500.0, 500.0), Error);
        EXPECT_THROW(f(prototype_grating(), prototype_sensor(), 720.0, 380.0), Error);
        EXPECT_EQ(kind_of([&] { f(GratingSpec::from_lines_per_mm(2000.0), prototype_sensor(), 380.0, 720.0); }),
                  ErrorKind::no_first_order);
    }
}

TEST(Position, EndpointsAndMidpoint)
{
    const double S = 8.25;
    for (auto f : {design_parallel, design_inclined}) {
        const auto d = f(prototype_grating(), prototype_sensor(), 380.0, 720.0);
        EXPECT_NEAR(position(380.0, d), 0.0, 1e-9 * S);
        EXPECT_NEAR(position(720.0, d), S, 1e-9 * S);
    }
    const auto inc = design_inclined(prototype_grating(), prototype_sensor(), 380.0, 720.0);
    const double mid_nm = std::sin(*inc.theta2) * prototype_grating().pitch_um * 1000.0;
    EXPECT_NEAR(position_inclined(mid_nm, inc), S / 2.0, 1e-9 * S);
}

TEST(Position, StrictlyIncreasingSweep)
{
    for (auto f : {design_parallel, design_inclined}) {
        const auto d = f(prototype_grating(), prototype_sensor(), 380.0, 720.0);
        double prev = -1.0;
        for (int i = 0; i < 100; ++i) {
            const double s = position(380.0 + 340.0 * i / 99.0, d);
            EXPECT_GT(s, prev);
            prev = s;
        }
    }
}

TEST(Position, OutOfBandAndWrongArrangement)
{
    const auto par = design_parallel(prototype_grating(), prototype_sensor(), 380.0, 720.0);
    const auto inc = design_inclined(prototype_grating(), prototype_sensor(), 380.0, 720.0);
    EXPECT_EQ(kind_of([&] { position(379.0, par); }), ErrorKind::domain);
    EXPECT_EQ(kind_of([&] { position(721.0, inc); }), ErrorKind::domain);
    EXPECT_EQ(kind_of([&] { position_slope(300.0, inc); }), ErrorKind::domain);
    EXPECT_THROW(position_parallel(500.0, inc), Error);
    EXPECT_THROW(position_inclined(500.0, par), Error);
}

TEST(PositionSlope, MatchesCentredFiniteDifference)
{
    const double h = 0.01;
    for (auto f : {design_parallel, design_inclined}) {
        const auto d = f(prototype_grating(), prototype_sensor(), 380.0, 720.0);
        for (int i = 0; i < 20; ++i) {
            const double l = 381.0 + 338.0 * i / 19.0;
            const double fd = (position(l + h, d) - position(l - h, d)) / (2.0 * h);
            const double slope = position_slope(l, d);
            EXPECT_GT(slope, 0.0);
            EXPECT_NEAR(slope / fd, 1.0, 1e-6) << l;
        }
    }
}

TEST(Linearity, InclinedBeatsParallelForPrototypeParameters)
{
    const auto par = design_parallel(prototype_grating(), prototype_sensor(), 380.0, 720.0);
    const auto inc = design_inclined(prototype_grating(), prototype_sensor(), 380.0, 720.0);
    const double lp = linearity_metric(par, 380.0, 720.0, 341);
    const double li = linearity_metric(inc, 380.0, 720.0, 341);
    EXPECT_LT(li, lp);
    EXPECT_GE(li, 1.0);
    EXPECT_NEAR(lp, 1.258, 0.01);
    EXPECT_NEAR(li, 1.08, 0.01);
}

TEST(Linearity, SyntheticMappings)
{
    EXPECT_EQ(linearity_metric([](double) { return 0.02; }, 380.0, 720.0, 50), 1.0);
    EXPECT_DOUBLE_EQ(linearity_metric([](double l) { return l; }, 400.0, 800.0, 2), 2.0);
    EXPECT_THROW(linearity_metric([](double) { return 1.0; }, 380.0, 720.0, 1), Error);
}

TEST(Linearity, InclinedNeverWorseOverRandomDesigns)
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> pitch(1.0, 3.0), length(5.0, 15.0);
    std::uniform_real_distribution<double> low(350.0, 450.0), high(600.0, 780.0);
    for (int i = 0; i < 500; ++i) {
        const GratingSpec g{pitch(rng), 1};
        const SensorSpec s{length(rng), 1500};
        const double l = low(rng);
        const double h = std::min(high(rng), 0.999 * g.pitch_um * 1000.0);
        const double lp = linearity_metric(design_parallel(g, s, l, h), l, h, 101);
        const double li = linearity_metric(design_inclined(g, s, l, h), l, h, 101);
        ASSERT_LE(li, lp) << "d=" << g.pitch_um << " S=" << s.length_mm << " band " << l << "-" << h;
    }
}

TEST(CollimatorAperture, PrototypeValueAndScaling)
{
    const SensorSpec s = prototype_sensor();
    const double th2 = 19.386952 * deg;
    const double a = collimator_aperture(2.5, s, 380.0, 720.0, th2);
    EXPECT_NEAR(a, 0.18, 0.005);
    EXPECT_NEAR(a, 0.182745706, 1e-6);
    EXPECT_NEAR(collimator_aperture(5.0, s, 380.0, 720.0, th2), 2.0 * a, 1e-12);
    EXPECT_NEAR(collimator_aperture(2.5, s, 380.0, 1060.0, th2), a / 2.0, 1e-12);
    EXPECT_THROW(collimator_aperture(2.5, s, 500.0, 500.0, th2), Error);
    EXPECT_THROW(collimator_aperture(0.0, s, 380.0, 720.0, th2), Error);
}
