#include "lumispec/pipeline.hpp"

namespace lumispec {

namespace {

Spd reference_of(const CriReport& report, const Datasets& data)
{
    return canonical_form(reference_for(report.reference.cct, data.daylight).spd);
}

} // namespace

PipelineResult run_pipeline(const Spd& spd, const Datasets& data, const CriOptions& options)
{
    PipelineTrace trace;
    CriReport report = general_cri(spd, data, options, &trace);
    Spd ref = reference_of(report, data);
    return PipelineResult{std::move(report), std::move(trace), resample(spd, canonical_grid()),
                          std::move(ref)};
}

PipelineResult run_pipeline(const RawSensorFrame& frame, const WavelengthCalibration& calib,
                            const Datasets& data, const CriOptions& options,
                            const ResponsivityModel& model)
{
    PipelineTrace trace;

    const DarkCalibration dark = dark_calibrate(frame);
    {
        auto& s = trace.begin_step(1, "dark_calibration");
        std::vector<double> dark_counts(frame.dark().begin(), frame.dark().end());
        s.put("dark_counts", dark_counts);
        s.put("dark_baseline", dark.baseline);
        s.put("intensity", dark.intensity);
    }

    const Spd spd = at_step(2, "responsivity", [&] {
        return resample(intensity_to_sensor_spd(dark.intensity, calib, model), canonical_grid());
    });
    {
        auto& s = trace.begin_step(2, "responsivity");
        s.put("lambda_first_nm", calib.lambda_first());
        s.put("lambda_last_nm", calib.lambda_last());
        std::vector<double> factors(effective_pixel_count);
        for (std::size_t i = 0; i < factors.size(); ++i)
            factors[i] =
                1.0 / responsivity(pixel_to_wavelength(static_cast<double>(i + 1), calib), model);
        s.put("compensation_factors", factors);
        s.put("spd", spd.values());
    }

    CriReport report = general_cri(spd, data, options, &trace);
    Spd ref = reference_of(report, data);
    return PipelineResult{std::move(report), std::move(trace), spd, std::move(ref)};
}

} // namespace lumispec
