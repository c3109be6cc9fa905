#pragma once

#include "lumispec/cri.hpp"
#include "lumispec/sensor.hpp"
#include "lumispec/trace.hpp"

namespace lumispec {

struct PipelineResult {
    CriReport report;
    PipelineTrace trace;
    Spd spd;           // the analysed SPD on the canonical grid
    Spd reference_spd; // reference illuminant used in step 4
};

/// Full analysis of an SPD (steps 3-10).
PipelineResult run_pipeline(const Spd& spd, const Datasets& data, const CriOptions& options = {});

/// Full analysis of a raw frame: dark calibration and responsivity
/// compensation (steps 1-2), then steps 3-10.
PipelineResult run_pipeline(const RawSensorFrame& frame, const WavelengthCalibration& calib,
                            const Datasets& data, const CriOptions& options = {},
                            const ResponsivityModel& model = tcd1103_responsivity());

} // namespace lumispec
