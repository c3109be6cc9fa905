#include "lumispec/colorimetry.hpp"

#include "lumispec/error.hpp"

#include <cmath>

namespace lumispec {

namespace {

// Integrates spd * weight * cmf on the CMF grid; `weight` may be empty.
Tristimulus raw_tristimulus(const Spd& spd, std::span<const double> weight,
                            const ColorMatchingFunctions& cmf)
{
    const Spd s = resample(spd, cmf.grid);
    Tristimulus t;
    for (std::size_t i = 0; i < cmf.grid.count(); ++i) {
        const double p = weight.empty() ? s[i] : s[i] * weight[i];
        t.X += p * cmf.xbar[i];
        t.Y += p * cmf.ybar[i];
        t.Z += p * cmf.zbar[i];
    }
    const double step = cmf.grid.step();
    t.X *= step;
    t.Y *= step;
    t.Z *= step;
    return t;
}

} // namespace

double luminance_normalization(const Spd& spd, const ColorMatchingFunctions& cmf)
{
    const double y = raw_tristimulus(spd, {}, cmf).Y;
    if (!(y > 0.0))
        throw Error(ErrorKind::degenerate_spd, "degenerate SPD: zero luminance");
    return 100.0 / y;
}

Tristimulus tristimulus(const Spd& spd, const ColorMatchingFunctions& cmf)
{
    const Tristimulus raw = raw_tristimulus(spd, {}, cmf);
    if (!(raw.Y > 0.0))
        throw Error(ErrorKind::degenerate_spd, "degenerate SPD: zero luminance");
    const double k = 100.0 / raw.Y;
    // Y is set rather than multiplied so that it is exactly 100.
    return Tristimulus{raw.X * k, 100.0, raw.Z * k};
}

Tristimulus tristimulus_reflected(const Spd& spd, std::span<const double> reflectance,
                                  const ColorMatchingFunctions& cmf, double k)
{
    if (reflectance.size() != cmf.grid.count())
        throw Error(ErrorKind::domain, "reflectance is not on the CMF grid");
    if (!(k > 0.0) || !std::isfinite(k))
        throw Error(ErrorKind::domain, "normalization constant must be positive");
    const Tristimulus raw = raw_tristimulus(spd, reflectance, cmf);
    return Tristimulus{raw.X * k, raw.Y * k, raw.Z * k};
}

ChromaticityXY chromaticity_xy(const Tristimulus& t)
{
    const double sum = t.X + t.Y + t.Z;
    if (!(sum > 0.0) || !std::isfinite(sum))
        throw Error(ErrorKind::degenerate_spd, "chromaticity undefined: X + Y + Z is not positive");
    return ChromaticityXY{t.X / sum, t.Y / sum};
}

ChromaticityUV uv_from_xy(const ChromaticityXY& c)
{
    const double den = 12.0 * c.y - 2.0 * c.x + 3.0;
    if (!(den > 0.0))
        throw Error(ErrorKind::domain, "invalid chromaticity: 12y - 2x + 3 <= 0");
    return ChromaticityUV{4.0 * c.x / den, 6.0 * c.y / den};
}

Cie1964Coords cie1964_coords(double Y, const ChromaticityUV& uv_sample,
                             const ChromaticityUV& uv_white)
{
    if (!(Y > 0.0) || !std::isfinite(Y))
        throw Error(ErrorKind::domain, "CIE 1964 lightness needs Y > 0");
    const double w = 25.0 * std::cbrt(Y) - 17.0;
    return Cie1964Coords{w, 13.0 * w * (uv_sample.u - uv_white.u),
                         13.0 * w * (uv_sample.v - uv_white.v)};
}

} // namespace lumispec
