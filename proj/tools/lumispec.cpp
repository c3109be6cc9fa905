// lumispec: CCT/CRI analysis, spectrometer design and CCD frame simulation.
//
// Exit codes: 0 success, 1 parse or usage error, 2 degenerate SPD,
// 3 CCT out of range, 4 no first-order maximum, 5 saturation.

#include "lumispec/cie_data.hpp"
#include "lumispec/error.hpp"
#include "lumispec/pipeline.hpp"
#include "lumispec/report.hpp"
#include "lumispec/sensor.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <fmt/format.h>

namespace fs = std::filesystem;
using namespace lumispec;

namespace {

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::parse:
    case ErrorKind::domain:
        return 1;
    case ErrorKind::degenerate_spd:
        return 2;
    case ErrorKind::cct_out_of_range:
        return 3;
    case ErrorKind::no_first_order:
        return 4;
    case ErrorKind::saturation:
        return 5;
    }
    return 1;
}

std::ifstream open_input(const std::string& path, const char* what)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::parse, fmt::format("cannot open {} '{}'", what, path));
    return in;
}

std::ofstream open_output(const fs::path& path)
{
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorKind::parse, fmt::format("cannot write '{}'", path.string()));
    return out;
}

WavelengthCalibration load_calibration(const std::string& path)
{
    if (path.empty())
        return default_calibration();
    auto in = open_input(path, "calibration");
    return read_calibration(in);
}

Datasets load_data(const std::string& manifest)
{
    return manifest.empty() ? bundled_datasets() : load_datasets(manifest);
}

struct AnalyzeArgs {
    std::string input;
    std::string kind = "spd";
    std::string calib;
    std::string cct_method = "exp";
    std::optional<double> reference_cct;
    std::string out_dir;
    std::string trace_path;
    std::string manifest;
};

int cmd_analyze(const AnalyzeArgs& a)
{
    const Datasets data = load_data(a.manifest);
    CriOptions options;
    options.cct_method = a.cct_method == "poly" ? CctMethod::polynomial : CctMethod::exponential;
    options.reference_cct = a.reference_cct;

    PipelineResult result = [&] {
        auto in = open_input(a.input, "input");
        if (a.kind == "frame") {
            if (a.calib.empty())
                throw Error(ErrorKind::parse, "--kind frame requires --calib");
            const auto calib = load_calibration(a.calib);
            const auto frame = read_frame(in);
            return run_pipeline(frame, calib, data, options);
        }
        return run_pipeline(read_spd_csv(in), data, options);
    }();
    const CriReport& r = result.report;

    write_text_report(std::cout, r, a.input);
    if (r.cct_exponential && !r.cct_exponential->within_validity)
        std::cerr << fmt::format("warning: exponential CCT {:.0f} K is outside 3000-50000 K\n",
                                 r.cct_exponential->kelvin);
    if (r.has_negative_index())
        std::cerr << "warning: negative special colour rendering index\n";
    if (const auto* step = result.trace.step(4); step && step->find("clamped_values")) {
        if (const double n = step->number("clamped_values"); n > 0)
            std::cerr << fmt::format("warning: {} negative daylight values clamped to zero\n", n);
    }

    if (!a.out_dir.empty()) {
        const fs::path dir(a.out_dir);
        auto report = open_output(dir / "report.txt");
        write_text_report(report, r, a.input);
        auto audit = open_output(dir / "audit.csv");
        write_audit_csv(audit, r);
        auto chroma = open_output(dir / "chromaticity.csv");
        write_chromaticity_csv(chroma, r);
        auto plot = open_output(dir / "spd_plot.csv");
        write_spd_plot_csv(plot, result.spd, result.reference_spd);
        auto svg = open_output(dir / "spd_plot.svg");
        write_spd_plot_svg(svg, result.spd, result.reference_spd);
    }
    if (!a.trace_path.empty()) {
        auto out = open_output(a.trace_path);
        write_trace(out, result.trace);
    }
    return 0;
}

struct DesignArgs {
    double lines_per_mm = 600.0;
    double sensor_mm = 8.25;
    double lambda_low = 380.0;
    double lambda_high = 720.0;
    double delta = 2.5;
    std::string arrangement = "inclined";
    std::size_t samples = 341;
    std::string out_dir;
};

int cmd_design(const DesignArgs& a)
{
    const auto grating = GratingSpec::from_lines_per_mm(a.lines_per_mm);
    const SensorSpec sensor{a.sensor_mm, effective_pixel_count};
    const auto selected =
        a.arrangement == "parallel" ? Arrangement::parallel : Arrangement::inclined;
    const auto summary = summarize_design(grating, sensor, a.lambda_low, a.lambda_high, a.delta,
                                          selected, a.samples);
    write_design_report(std::cout, summary);
    if (!a.out_dir.empty()) {
        auto out = open_output(fs::path(a.out_dir) / "design_sweep.csv");
        write_design_sweep_csv(out, summary, a.samples);
    }
    return 0;
}

struct SimulateArgs {
    std::string input;
    std::string calib;
    double noise = 0.0;
    std::uint64_t seed = 1;
    std::optional<double> exposure;
    std::string out;
};

int cmd_simulate(const SimulateArgs& a)
{
    auto in = open_input(a.input, "input");
    const Spd spd = read_spd_csv(in);
    const auto calib = load_calibration(a.calib);
    const auto& model = tcd1103_responsivity();
    const double exposure = a.exposure ? *a.exposure : auto_exposure(spd, calib, model);
    const auto frame = simulate_frame(spd, calib, model, exposure, a.noise, a.seed);
    auto out = open_output(a.out);
    write_frame(out, frame);
    return 0;
}

struct CaptureArgs {
    std::string input;
    std::string calib;
    std::string out;
};

int cmd_capture(const CaptureArgs& a)
{
    auto in = open_input(a.input, "frame");
    const auto frame = read_frame(in);
    const auto calib = load_calibration(a.calib);
    const Spd spd = frame_to_spd(frame, calib, tcd1103_responsivity());
    if (spd.is_zero())
        std::cerr << "warning: frame carries no light above the dark level; SPD is all zero\n";
    auto out = open_output(a.out);
    write_spd_csv(out, spd);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lighting-quality metrology: CCT, CRI, spectrometer design, CCD simulation"};
    app.require_subcommand(1);

    AnalyzeArgs analyze;
    auto* an = app.add_subcommand("analyze", "Compute CCT and CRI of an SPD or raw frame");
    an->add_option("--input", analyze.input, "SPD CSV or frame file")->required();
    an->add_option("--kind", analyze.kind, "Input kind")
        ->check(CLI::IsMember({"spd", "frame"}));
    an->add_option("--calib", analyze.calib, "Wavelength calibration file (frames)");
    an->add_option("--cct-method", analyze.cct_method, "Estimator driving the reference")
        ->check(CLI::IsMember({"poly", "exp"}));
    an->add_option("--reference-cct", analyze.reference_cct,
                   "Generate the reference at this CCT instead of the estimate");
    an->add_option("--out", analyze.out_dir, "Directory for report, audit CSV and plot data");
    an->add_option("--trace", analyze.trace_path, "Write the step-by-step pipeline trace");
    an->add_option("--data", analyze.manifest, "Dataset manifest (defaults to bundled data)");

    DesignArgs design;
    auto* de = app.add_subcommand("design", "Lens-free grating spectrometer geometry");
    de->add_option("--lines-per-mm", design.lines_per_mm, "Grating density");
    de->add_option("--sensor-mm", design.sensor_mm, "Useful sensor length");
    de->add_option("--lambda-low", design.lambda_low, "Lower wavelength (nm)");
    de->add_option("--lambda-high", design.lambda_high, "Upper wavelength (nm)");
    de->add_option("--delta", design.delta, "Target resolution (nm)");
    de->add_option("--arrangement", design.arrangement, "Arrangement to build")
        ->check(CLI::IsMember({"parallel", "inclined"}));
    de->add_option("--samples", design.samples, "Sweep points")->check(CLI::Range(2, 100000));
    de->add_option("--out", design.out_dir, "Directory for design_sweep.csv");

    SimulateArgs simulate;
    auto* si = app.add_subcommand("simulate", "Synthesize a raw CCD frame from an SPD");
    si->add_option("--input", simulate.input, "SPD CSV")->required();
    si->add_option("--calib", simulate.calib, "Wavelength calibration (default 391-723 nm)");
    si->add_option("--noise", simulate.noise, "Gaussian ADC noise sigma (counts)");
    si->add_option("--seed", simulate.seed, "Noise seed");
    si->add_option("--exposure", simulate.exposure,
                   "Counts per unit S*R (default: brightest pixel 3000 counts below dark)");
    si->add_option("--out", simulate.out, "Frame file to write")->required();

    CaptureArgs capture;
    auto* ca = app.add_subcommand("capture", "Convert a raw frame into an SPD CSV");
    ca->add_option("--input", capture.input, "Frame file")->required();
    ca->add_option("--calib", capture.calib, "Wavelength calibration (default 391-723 nm)");
    ca->add_option("--out", capture.out, "SPD CSV to write")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*an)
            return cmd_analyze(analyze);
        if (*de)
            return cmd_design(design);
        if (*si)
            return cmd_simulate(simulate);
        return cmd_capture(capture);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
