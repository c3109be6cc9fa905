#pragma once

#include "lumispec/cct.hpp"
#include "lumispec/cie_data.hpp"
#include "lumispec/colorimetry.hpp"
#include "lumispec/illuminant.hpp"
#include "lumispec/trace.hpp"

#include <array>
#include <optional>

namespace lumispec {

/// von Kries quantities c = (4 - u - 10v)/v and d = (1.708v + 0.404 - 1.481u)/v.
struct AdaptationCoefficients {
    double c = 0.0;
    double d = 0.0;

    bool operator==(const AdaptationCoefficients&) const = default;
};

AdaptationCoefficients adaptation_cd(const ChromaticityUV& uv);

/// Maps a sample chromaticity seen under the test illuminant into the
/// reference illuminant's adapted state.
ChromaticityUV adapt_sample(const ChromaticityUV& sample_under_test,
                            const AdaptationCoefficients& test,
                            const AdaptationCoefficients& reference);

/// Euclidean distance in (U*, V*, W*).
double color_difference(const Cie1964Coords& reference, const Cie1964Coords& test);

/// R_i = 100 - 4.6 dE. Not clamped.
double special_index(double delta_e);

struct IlluminantAudit {
    Tristimulus xyz;
    double k = 0.0; // Y normalization constant, reused for the samples
    ChromaticityXY xy;
    ChromaticityUV uv;
    AdaptationCoefficients cd;

    bool operator==(const IlluminantAudit&) const = default;
};

struct SampleAudit {
    Tristimulus test_xyz;
    Tristimulus ref_xyz;
    ChromaticityUV test_uv;
    AdaptationCoefficients test_cd;
    ChromaticityUV test_uv_adapted;
    ChromaticityUV ref_uv;
    Cie1964Coords test_coords;
    Cie1964Coords ref_coords;
    double delta_e = 0.0;

    bool operator==(const SampleAudit&) const = default;
};

struct CriReport {
    // Either estimator may be absent if its model rejects the chromaticity;
    // the one named by `cct_method` is always present.
    std::optional<CctEstimate> cct_polynomial;
    std::optional<CctEstimate> cct_exponential;
    CctMethod cct_method = CctMethod::exponential;
    bool reference_cct_overridden = false;
    ReferenceSpec reference;
    IlluminantAudit test;
    IlluminantAudit ref;
    std::array<SampleAudit, tcs_count> samples;
    std::array<double, tcs_count> special_indices{};
    double ra = 0.0;

    double selected_cct() const;
    bool has_negative_index() const;

    bool operator==(const CriReport&) const = default;
};

struct CriOptions {
    CctMethod cct_method = CctMethod::exponential;
    // Regenerate the reference at this temperature instead of the estimate.
    std::optional<double> reference_cct;
};

/// Steps 3-10 of the analysis: CCT, reference SPD, tristimulus of both
/// illuminants and the eight samples, chromatic adaptation, CIE 1964
/// coordinates, special indices and Ra. Intermediates go to `trace` if given.
CriReport general_cri(const Spd& test_spd, const Datasets& data, const CriOptions& options = {},
                      PipelineTrace* trace = nullptr);

} // namespace lumispec
