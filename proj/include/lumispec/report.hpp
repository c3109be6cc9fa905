#pragma once

#include "lumispec/cri.hpp"
#include "lumispec/optics.hpp"
#include "lumispec/spectral.hpp"

#include <iosfwd>
#include <string_view>

namespace lumispec {

// Report precision: CCT 0 decimals, R_i and Ra 2 decimals, chromaticities 3.

/// `key: value` lines mirroring the columns of a lamp measurement table.
void write_text_report(std::ostream& out, const CriReport& report, std::string_view source);

/// One row per test colour sample, then a summary row.
void write_audit_csv(std::ostream& out, const CriReport& report);

/// (x, y) and (u, v) of the test and reference illuminants and each sample.
void write_chromaticity_csv(std::ostream& out, const CriReport& report);

/// Test and reference SPDs, each peak-normalized, as CSV columns.
void write_spd_plot_csv(std::ostream& out, const Spd& test, const Spd& reference);

/// Static line plot of the same two curves.
void write_spd_plot_svg(std::ostream& out, const Spd& test, const Spd& reference);

struct DesignSummary {
    OpticalDesign parallel;
    OpticalDesign inclined;
    Arrangement selected = Arrangement::inclined;
    double delta_nm = 0.0;
    double aperture_mm = 0.0;
    double linearity_parallel = 0.0;
    double linearity_inclined = 0.0;
};

DesignSummary summarize_design(const GratingSpec& g, const SensorSpec& s, double lambda_low_nm,
                               double lambda_high_nm, double delta_nm, Arrangement selected,
                               std::size_t linearity_samples = 341);

void write_design_report(std::ostream& out, const DesignSummary& d);

/// Position and slope of both arrangements over `samples` wavelengths.
void write_design_sweep_csv(std::ostream& out, const DesignSummary& d, std::size_t samples = 341);

} // namespace lumispec
