#include "lumispec/report.hpp"

#include <algorithm>
#include <numbers>
#include <ostream>
#include <string>

#include <fmt/format.h>

namespace lumispec {

namespace {

std::string kelvin_or_na(const std::optional<CctEstimate>& e)
{
    return e ? fmt::format("{:.0f}", e->kelvin) : std::string("n/a");
}

double degrees(double rad)
{
    return rad * 180.0 / std::numbers::pi;
}

} // namespace

void write_text_report(std::ostream& out, const CriReport& r, std::string_view source)
{
    out << fmt::format("source: {}\n", source);
    out << fmt::format("x: {:.3f}\ny: {:.3f}\n", r.test.xy.x, r.test.xy.y);
    out << fmt::format("u: {:.3f}\nv: {:.3f}\n", r.test.uv.u, r.test.uv.v);
    out << fmt::format("cct_exponential_k: {}\n", kelvin_or_na(r.cct_exponential));
    if (r.cct_exponential && !r.cct_exponential->within_validity)
        out << "cct_exponential_note: outside stated validity (3000-50000 K)\n";
    out << fmt::format("cct_polynomial_k: {}\n", kelvin_or_na(r.cct_polynomial));
    out << fmt::format("cct_method: {}\n", to_string(r.cct_method));
    out << fmt::format("reference_cct_k: {:.0f}\n", r.reference.cct);
    out << fmt::format("reference_branch: {}\n", to_string(r.reference.branch));
    out << fmt::format("reference_cct_overridden: {}\n", r.reference_cct_overridden ? "yes" : "no");
    for (std::size_t i = 0; i < tcs_count; ++i)
        out << fmt::format("R{}: {:.2f}\n", i + 1, r.special_indices[i]);
    out << fmt::format("Ra: {:.2f}\n", r.ra);

    std::string negatives;
    for (std::size_t i = 0; i < tcs_count; ++i)
        if (r.special_indices[i] < 0.0)
            negatives += fmt::format("{}R{}", negatives.empty() ? "" : " ", i + 1);
    out << fmt::format("negative_indices: {}\n", negatives.empty() ? "none" : negatives);
}

void write_audit_csv(std::ostream& out, const CriReport& r)
{
    out << "sample,R,delta_e,test_Y,ref_Y,test_u,test_v,adapted_u,adapted_v,ref_u,ref_v,"
           "test_W,test_U,test_V,ref_W,ref_U,ref_V\n";
    for (std::size_t i = 0; i < tcs_count; ++i) {
        const auto& a = r.samples[i];
        out << fmt::format(
            "TCS{:02d},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},"
            "{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f}\n",
            i + 1, r.special_indices[i], a.delta_e, a.test_xyz.Y, a.ref_xyz.Y, a.test_uv.u,
            a.test_uv.v, a.test_uv_adapted.u, a.test_uv_adapted.v, a.ref_uv.u, a.ref_uv.v,
            a.test_coords.w_star, a.test_coords.u_star, a.test_coords.v_star, a.ref_coords.w_star,
            a.ref_coords.u_star, a.ref_coords.v_star);
    }
    out << fmt::format("Ra,{:.6f},,,,{:.6f},{:.6f},,,{:.6f},{:.6f},,,,,,\n", r.ra, r.test.uv.u,
                       r.test.uv.v, r.ref.uv.u, r.ref.uv.v);
}

void write_chromaticity_csv(std::ostream& out, const CriReport& r)
{
    out << "label,x,y,u,v\n";
    out << fmt::format("test,{:.6f},{:.6f},{:.6f},{:.6f}\n", r.test.xy.x, r.test.xy.y, r.test.uv.u,
                       r.test.uv.v);
    out << fmt::format("reference,{:.6f},{:.6f},{:.6f},{:.6f}\n", r.ref.xy.x, r.ref.xy.y,
                       r.ref.uv.u, r.ref.uv.v);
    for (std::size_t i = 0; i < tcs_count; ++i) {
        const auto& a = r.samples[i];
        const auto xy_t = chromaticity_xy(a.test_xyz);
        const auto xy_r = chromaticity_xy(a.ref_xyz);
        out << fmt::format("TCS{:02d}_test,{:.6f},{:.6f},{:.6f},{:.6f}\n", i + 1, xy_t.x, xy_t.y,
                           a.test_uv.u, a.test_uv.v);
        out << fmt::format("TCS{:02d}_reference,{:.6f},{:.6f},{:.6f},{:.6f}\n", i + 1, xy_r.x,
                           xy_r.y, a.ref_uv.u, a.ref_uv.v);
    }
}

void write_spd_plot_csv(std::ostream& out, const Spd& test, const Spd& reference)
{
    const Spd t = normalize_peak(resample(test, canonical_grid()));
    const Spd r = normalize_peak(resample(reference, canonical_grid()));
    out << "wavelength_nm,test,reference\n";
    for (std::size_t i = 0; i < t.size(); ++i)
        out << fmt::format("{:g},{:.6f},{:.6f}\n", t.grid().at(i), t[i], r[i]);
}

void write_spd_plot_svg(std::ostream& out, const Spd& test, const Spd& reference)
{
    constexpr double width = 640, height = 360, margin = 40;
    const Spd t = normalize_peak(resample(test, canonical_grid()));
    const Spd r = normalize_peak(resample(reference, canonical_grid()));
    const auto& g = t.grid();
    auto points = [&](const Spd& s) {
        std::string p;
        for (std::size_t i = 0; i < s.size(); ++i) {
            const double px = margin + (g.at(i) - g.start()) / (g.last() - g.start()) * (width - 2 * margin);
            const double py = height - margin - s[i] * (height - 2 * margin);
            p += fmt::format("{}{:.1f},{:.1f}", i ? " " : "", px, py);
        }
        return p;
    };
    out << fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
                       "viewBox=\"0 0 {} {}\">\n",
                       width, height, width, height);
    out << fmt::format("<rect x=\"{0}\" y=\"{0}\" width=\"{1}\" height=\"{2}\" fill=\"none\" "
                       "stroke=\"#888\"/>\n",
                       margin, width - 2 * margin, height - 2 * margin);
    out << fmt::format("<polyline fill=\"none\" stroke=\"#999\" stroke-dasharray=\"4 3\" "
                       "points=\"{}\"/>\n",
                       points(r));
    out << fmt::format("<polyline fill=\"none\" stroke=\"#c33\" points=\"{}\"/>\n", points(t));
    out << fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"12\">{:g} nm</text>\n", margin,
                       height - margin / 3, g.start());
    out << fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"end\">{:g} nm</text>\n",
                       width - margin, height - margin / 3, g.last());
    out << fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"12\">test (solid), reference "
                       "(dashed), peak-normalized</text>\n",
                       margin, margin - 10);
    out << "</svg>\n";
}

DesignSummary summarize_design(const GratingSpec& g, const SensorSpec& s, double lambda_low_nm,
                               double lambda_high_nm, double delta_nm, Arrangement selected,
                               std::size_t linearity_samples)
{
    DesignSummary d{design_parallel(g, s, lambda_low_nm, lambda_high_nm),
                    design_inclined(g, s, lambda_low_nm, lambda_high_nm),
                    selected,
                    delta_nm,
                    0.0,
                    0.0,
                    0.0};
    d.aperture_mm =
        collimator_aperture(delta_nm, s, lambda_low_nm, lambda_high_nm, *d.inclined.theta2);
    d.linearity_parallel =
        linearity_metric(d.parallel, lambda_low_nm, lambda_high_nm, linearity_samples);
    d.linearity_inclined =
        linearity_metric(d.inclined, lambda_low_nm, lambda_high_nm, linearity_samples);
    return d;
}

void write_design_report(std::ostream& out, const DesignSummary& d)
{
    const auto& p = d.parallel;
    const auto& q = d.inclined;
    out << fmt::format("grating_pitch_um: {:.4f}\n", p.grating.pitch_um);
    out << fmt::format("diffraction_order: {}\n", p.grating.order);
    out << fmt::format("sensor_length_mm: {:.3f}\n", p.sensor.length_mm);
    out << fmt::format("lambda_low_nm: {:g}\nlambda_high_nm: {:g}\n", p.lambda_low_nm,
                       p.lambda_high_nm);
    out << fmt::format("theta_low_deg: {:.2f}\ntheta_high_deg: {:.2f}\n", degrees(p.theta_low),
                       degrees(p.theta_high));
    out << fmt::format("parallel_D1_mm: {:.2f}\nparallel_h1_mm: {:.2f}\n", *p.d1_mm, *p.h1_mm);
    out << fmt::format("inclined_theta2_deg: {:.2f}\ninclined_D2_mm: {:.2f}\n",
                       degrees(*q.theta2), *q.d2_mm);
    out << fmt::format("resolution_delta_nm: {:g}\n", d.delta_nm);
    out << fmt::format("aperture_mm: {:.3f}\n", d.aperture_mm);
    out << fmt::format("linearity_parallel: {:.4f}\nlinearity_inclined: {:.4f}\n",
                       d.linearity_parallel, d.linearity_inclined);
    out << fmt::format("selected_arrangement: {}\n", to_string(d.selected));
}

void write_design_sweep_csv(std::ostream& out, const DesignSummary& d, std::size_t samples)
{
    const double lo = d.parallel.lambda_low_nm;
    const double hi = d.parallel.lambda_high_nm;
    out << "wavelength_nm,s_parallel_mm,s_inclined_mm,slope_parallel_mm_per_nm,"
           "slope_inclined_mm_per_nm\n";
    const std::size_t n = std::max<std::size_t>(samples, 2);
    for (std::size_t i = 0; i < n; ++i) {
        const double w = i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / (n - 1);
        out << fmt::format("{:.4f},{:.6f},{:.6f},{:.8f},{:.8f}\n", w, position(w, d.parallel),
                           position(w, d.inclined), position_slope(w, d.parallel),
                           position_slope(w, d.inclined));
    }
}

} // namespace lumispec
