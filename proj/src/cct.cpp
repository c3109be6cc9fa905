#include "lumispec/cct.hpp"

#include "lumispec/error.hpp"

#include <cmath>

#include <fmt/format.h>

namespace lumispec {

namespace {

namespace mccamy {
constexpr double xe = 0.3320;
constexpr double ye = 0.1858;
constexpr double min_k = 1000.0;
constexpr double max_k = 50000.0;
} // namespace mccamy

// Hernandez-Andres et al. coefficients for the 3000-50000 K range.
namespace expo {
constexpr double xe = 0.3366;
constexpr double ye = 0.1735;
constexpr double a0 = -949.8631;
constexpr double a1 = 6253.80338;
constexpr double a2 = 28.70599;
constexpr double a3 = 0.00004;
constexpr double t1 = 0.92159;
constexpr double t2 = 0.20039;
constexpr double t3 = 0.07125;
constexpr double min_k = 3000.0;
constexpr double max_k = 50000.0;
} // namespace expo

double epicenter_ratio(const ChromaticityXY& c, double xe, double ye)
{
    if (c.y == ye)
        throw Error(ErrorKind::cct_out_of_range, "epicenter singularity: y equals the epicenter");
    return (c.x - xe) / (c.y - ye);
}

} // namespace

std::string_view to_string(CctMethod m)
{
    return m == CctMethod::polynomial ? "polynomial" : "exponential";
}

CctEstimate cct_mccamy(const ChromaticityXY& c)
{
    const double n = epicenter_ratio(c, mccamy::xe, mccamy::ye);
    const double t = ((-449.0 * n + 3525.0) * n - 6823.3) * n + 5520.33;
    if (!std::isfinite(t) || t < mccamy::min_k || t > mccamy::max_k)
        throw Error(ErrorKind::cct_out_of_range,
                    fmt::format("out of model range: polynomial CCT {:.0f} K outside [1000, 50000] K",
                                t));
    return CctEstimate{t, CctMethod::polynomial, true};
}

double cct_exponential_at(double n)
{
    return expo::a0 + expo::a1 * std::exp(-n / expo::t1) + expo::a2 * std::exp(-n / expo::t2)
        + expo::a3 * std::exp(-n / expo::t3);
}

CctEstimate cct_exponential(const ChromaticityXY& c)
{
    const double t = cct_exponential_at(epicenter_ratio(c, expo::xe, expo::ye));
    if (!std::isfinite(t) || t <= 0.0)
        throw Error(ErrorKind::cct_out_of_range,
                    fmt::format("out of model range: exponential CCT {} K", t));
    return CctEstimate{t, CctMethod::exponential, t >= expo::min_k && t <= expo::max_k};
}

CctEstimate estimate_cct(const ChromaticityXY& c, CctMethod method)
{
    return method == CctMethod::polynomial ? cct_mccamy(c) : cct_exponential(c);
}

} // namespace lumispec
