#include "lumispec/cri.hpp"

#include "lumispec/error.hpp"

#include <cmath>

namespace lumispec {

AdaptationCoefficients adaptation_cd(const ChromaticityUV& uv)
{
    if (!(uv.v > 0.0) || !std::isfinite(uv.v))
        throw Error(ErrorKind::domain, "chromatic adaptation needs v > 0");
    return AdaptationCoefficients{(4.0 - uv.u - 10.0 * uv.v) / uv.v,
                                  (1.708 * uv.v + 0.404 - 1.481 * uv.u) / uv.v};
}

ChromaticityUV adapt_sample(const ChromaticityUV& sample_under_test,
                            const AdaptationCoefficients& test,
                            const AdaptationCoefficients& reference)
{
    if (test.c == 0.0 || test.d == 0.0)
        throw Error(ErrorKind::domain, "adaptation singularity: zero test coefficient");
    const auto sample = adaptation_cd(sample_under_test);
    const double c = reference.c / test.c * sample.c;
    const double d = reference.d / test.d * sample.d;
    const double den = 16.518 + 1.481 * c - d;
    if (den == 0.0 || !std::isfinite(den))
        throw Error(ErrorKind::domain, "adaptation singularity: zero denominator");
    return ChromaticityUV{(10.872 + 0.404 * c - 4.0 * d) / den, 5.520 / den};
}

double color_difference(const Cie1964Coords& reference, const Cie1964Coords& test)
{
    const double du = reference.u_star - test.u_star;
    const double dv = reference.v_star - test.v_star;
    const double dw = reference.w_star - test.w_star;
    return std::sqrt(du * du + dv * dv + dw * dw);
}

double special_index(double delta_e)
{
    return 100.0 - 4.6 * delta_e;
}

double CriReport::selected_cct() const
{
    return cct_method == CctMethod::polynomial ? cct_polynomial->kelvin : cct_exponential->kelvin;
}

bool CriReport::has_negative_index() const
{
    for (double r : special_indices)
        if (r < 0.0)
            return true;
    return false;
}

namespace {

std::optional<CctEstimate> try_estimate(const ChromaticityXY& xy, CctMethod method,
                                        CctMethod required)
{
    if (method == required)
        return estimate_cct(xy, method);
    try {
        return estimate_cct(xy, method);
    } catch (const Error&) {
        return std::nullopt;
    }
}

IlluminantAudit audit_illuminant(const Spd& spd, const ColorMatchingFunctions& cmf)
{
    IlluminantAudit a;
    a.k = luminance_normalization(spd, cmf);
    a.xyz = tristimulus(spd, cmf);
    a.xy = chromaticity_xy(a.xyz);
    a.uv = uv_from_xy(a.xy);
    return a;
}

template <class F>
std::array<double, tcs_count> per_sample(const std::array<SampleAudit, tcs_count>& s, F&& f)
{
    std::array<double, tcs_count> out{};
    for (std::size_t i = 0; i < tcs_count; ++i)
        out[i] = f(s[i]);
    return out;
}

} // namespace

CriReport general_cri(const Spd& test_spd, const Datasets& data, const CriOptions& options,
                      PipelineTrace* trace)
{
    CriReport report;
    report.cct_method = options.cct_method;
    PipelineTrace scratch;
    PipelineTrace& tr = trace ? *trace : scratch;

    // 3: CCT from the test chromaticity.
    const Spd test = at_step(3, "cct", [&] {
        Spd canon = canonical_form(test_spd);
        report.test = audit_illuminant(canon, data.cmf);
        report.cct_polynomial =
            try_estimate(report.test.xy, CctMethod::polynomial, options.cct_method);
        report.cct_exponential =
            try_estimate(report.test.xy, CctMethod::exponential, options.cct_method);
        return canon;
    });
    {
        auto& s = tr.begin_step(3, "cct");
        s.put("x", report.test.xy.x);
        s.put("y", report.test.xy.y);
        if (report.cct_polynomial)
            s.put("cct_polynomial_k", report.cct_polynomial->kelvin);
        if (report.cct_exponential) {
            s.put("cct_exponential_k", report.cct_exponential->kelvin);
            s.put("cct_exponential_within_validity",
                  report.cct_exponential->within_validity ? 1.0 : 0.0);
        }
        s.put("method", std::string(to_string(options.cct_method)));
        s.put("selected_cct_k", report.selected_cct());
    }

    // 4: reference illuminant.
    const double ref_cct = options.reference_cct.value_or(report.selected_cct());
    report.reference_cct_overridden = options.reference_cct.has_value();
    const Reference reference =
        at_step(4, "reference", [&] { return reference_for(ref_cct, data.daylight); });
    const Spd ref = canonical_form(reference.spd);
    report.reference = reference.spec;
    {
        auto& s = tr.begin_step(4, "reference");
        s.put("reference_cct_k", ref_cct);
        s.put("overridden", report.reference_cct_overridden ? 1.0 : 0.0);
        s.put("branch", std::string(to_string(reference.spec.branch)));
        if (reference.spec.branch == ReferenceBranch::daylight) {
            s.put("x_d", reference.xy_d.x);
            s.put("y_d", reference.xy_d.y);
            s.put("m1", reference.m1);
            s.put("m2", reference.m2);
            s.put("clamped_values", static_cast<double>(reference.clamped));
        }
        s.put("reference_spd", ref.values());
    }

    // 5: tristimulus values normalized to Y = 100 for both illuminants and
    // every sample under both.
    at_step(5, "tristimulus", [&] {
        report.ref = audit_illuminant(ref, data.cmf);
        for (std::size_t i = 0; i < tcs_count; ++i) {
            const auto& rho = data.tcs.reflectance[i];
            report.samples[i].test_xyz = tristimulus_reflected(test, rho, data.cmf, report.test.k);
            report.samples[i].ref_xyz = tristimulus_reflected(ref, rho, data.cmf, report.ref.k);
        }
    });
    {
        auto& s = tr.begin_step(5, "tristimulus");
        s.put("test_xyz", std::vector{report.test.xyz.X, report.test.xyz.Y, report.test.xyz.Z});
        s.put("test_k", report.test.k);
        s.put("ref_xyz", std::vector{report.ref.xyz.X, report.ref.xyz.Y, report.ref.xyz.Z});
        s.put("ref_k", report.ref.k);
        s.put("sample_test_Y", per_sample(report.samples, [](auto& a) { return a.test_xyz.Y; }));
        s.put("sample_ref_Y", per_sample(report.samples, [](auto& a) { return a.ref_xyz.Y; }));
    }

    // 6: CIE 1931 and CIE 1960 chromaticities.
    at_step(6, "chromaticity", [&] {
        for (auto& a : report.samples) {
            a.test_uv = uv_from_xy(chromaticity_xy(a.test_xyz));
            a.ref_uv = uv_from_xy(chromaticity_xy(a.ref_xyz));
        }
    });
    {
        auto& s = tr.begin_step(6, "chromaticity");
        s.put("test_uv", std::vector{report.test.uv.u, report.test.uv.v});
        s.put("ref_xy", std::vector{report.ref.xy.x, report.ref.xy.y});
        s.put("ref_uv", std::vector{report.ref.uv.u, report.ref.uv.v});
        s.put("sample_test_u", per_sample(report.samples, [](auto& a) { return a.test_uv.u; }));
        s.put("sample_test_v", per_sample(report.samples, [](auto& a) { return a.test_uv.v; }));
        s.put("sample_ref_u", per_sample(report.samples, [](auto& a) { return a.ref_uv.u; }));
        s.put("sample_ref_v", per_sample(report.samples, [](auto& a) { return a.ref_uv.v; }));
    }

    // 7: chromatic adaptation of each sample.
    at_step(7, "adaptation", [&] {
        report.test.cd = adaptation_cd(report.test.uv);
        report.ref.cd = adaptation_cd(report.ref.uv);
        for (auto& a : report.samples) {
            a.test_cd = adaptation_cd(a.test_uv);
            a.test_uv_adapted = adapt_sample(a.test_uv, report.test.cd, report.ref.cd);
        }
    });
    {
        auto& s = tr.begin_step(7, "adaptation");
        s.put("test_cd", std::vector{report.test.cd.c, report.test.cd.d});
        s.put("ref_cd", std::vector{report.ref.cd.c, report.ref.cd.d});
        s.put("sample_adapted_u",
              per_sample(report.samples, [](auto& a) { return a.test_uv_adapted.u; }));
        s.put("sample_adapted_v",
              per_sample(report.samples, [](auto& a) { return a.test_uv_adapted.v; }));
    }

    // 8: CIE 1964 coordinates, both sets relative to the reference white.
    at_step(8, "cie1964", [&] {
        for (auto& a : report.samples) {
            a.test_coords = cie1964_coords(a.test_xyz.Y, a.test_uv_adapted, report.ref.uv);
            a.ref_coords = cie1964_coords(a.ref_xyz.Y, a.ref_uv, report.ref.uv);
        }
    });
    {
        auto& s = tr.begin_step(8, "cie1964");
        s.put("test_w", per_sample(report.samples, [](auto& a) { return a.test_coords.w_star; }));
        s.put("test_u", per_sample(report.samples, [](auto& a) { return a.test_coords.u_star; }));
        s.put("test_v", per_sample(report.samples, [](auto& a) { return a.test_coords.v_star; }));
        s.put("ref_w", per_sample(report.samples, [](auto& a) { return a.ref_coords.w_star; }));
        s.put("ref_u", per_sample(report.samples, [](auto& a) { return a.ref_coords.u_star; }));
        s.put("ref_v", per_sample(report.samples, [](auto& a) { return a.ref_coords.v_star; }));
    }

    // 9: colour differences and special indices.
    for (std::size_t i = 0; i < tcs_count; ++i) {
        auto& a = report.samples[i];
        a.delta_e = color_difference(a.ref_coords, a.test_coords);
        report.special_indices[i] = special_index(a.delta_e);
    }
    {
        auto& s = tr.begin_step(9, "special_indices");
        s.put("delta_e", per_sample(report.samples, [](auto& a) { return a.delta_e; }));
        s.put("r", report.special_indices);
    }

    // 10: general index.
    double sum = 0.0;
    for (double r : report.special_indices)
        sum += r;
    report.ra = sum / static_cast<double>(tcs_count);
    tr.begin_step(10, "general_index").put("ra", report.ra);

    return report;
}

} // namespace lumispec
