#include "lumispec/spectral.hpp"

#include "lumispec/error.hpp"
#include "csv.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/format.h>

namespace lumispec {

WavelengthGrid::WavelengthGrid(double start_nm, double step_nm, std::size_t count)
    : start_(start_nm), step_(step_nm), count_(count)
{
    if (!std::isfinite(start_nm) || !std::isfinite(step_nm) || !(step_nm > 0.0))
        throw Error(ErrorKind::domain, "wavelength grid step must be positive and finite");
    if (count < 2)
        throw Error(ErrorKind::domain, "wavelength grid needs at least 2 samples");
}

const WavelengthGrid& canonical_grid()
{
    static const WavelengthGrid grid(380.0, 5.0, 81);
    return grid;
}

Spd::Spd(WavelengthGrid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values))
{
    if (values_.size() != grid_.count())
        throw Error(ErrorKind::domain,
                    fmt::format("SPD has {} values for a {}-point grid", values_.size(),
                                grid_.count()));
    for (double v : values_)
        if (!std::isfinite(v) || v < 0.0)
            throw Error(ErrorKind::domain, "SPD values must be finite and nonnegative");
}

double Spd::max_value() const
{
    return *std::max_element(values_.begin(), values_.end());
}

bool Spd::is_zero() const
{
    return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

Spd Spd::scaled(double factor) const
{
    if (!(factor >= 0.0) || !std::isfinite(factor))
        throw Error(ErrorKind::domain, "SPD scale factor must be finite and nonnegative");
    std::vector<double> out(values_);
    for (double& v : out)
        v *= factor;
    return Spd(grid_, std::move(out));
}

std::vector<double> interpolate_samples(std::span<const double> wavelengths,
                                        std::span<const double> values,
                                        const WavelengthGrid& target)
{
    std::vector<double> out(target.count(), 0.0);
    if (wavelengths.empty())
        return out;
    const double lo = wavelengths.front();
    const double hi = wavelengths.back();
    for (std::size_t i = 0; i < target.count(); ++i) {
        const double w = target.at(i);
        if (w < lo || w > hi)
            continue;
        auto it = std::upper_bound(wavelengths.begin(), wavelengths.end(), w);
        std::size_t j = static_cast<std::size_t>(it - wavelengths.begin());
        if (j == wavelengths.size()) {
            out[i] = values.back();
            continue;
        }
        --j;
        const double t = (w - wavelengths[j]) / (wavelengths[j + 1] - wavelengths[j]);
        out[i] = values[j] + t * (values[j + 1] - values[j]);
    }
    return out;
}

Spd resample(const Spd& spd, const WavelengthGrid& target)
{
    if (spd.grid() == target)
        return spd;
    std::vector<double> wl(spd.size());
    for (std::size_t i = 0; i < wl.size(); ++i)
        wl[i] = spd.grid().at(i);
    return Spd(target, interpolate_samples(wl, spd.values(), target));
}

double integrate_product(const WavelengthGrid& grid, std::span<const double> a,
                         std::span<const double> b)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < grid.count(); ++i)
        sum += a[i] * b[i];
    return sum * grid.step();
}

double integrate_product(const Spd& spd, const Spd& weight)
{
    const Spd w = resample(weight, spd.grid());
    return integrate_product(spd.grid(), spd.values(), w.values());
}

Spd normalize_peak(const Spd& spd)
{
    const double peak = spd.max_value();
    if (!(peak > 0.0))
        throw Error(ErrorKind::degenerate_spd, "degenerate SPD: no positive power");
    std::vector<double> out(spd.values().begin(), spd.values().end());
    for (double& v : out)
        v /= peak;
    return Spd(spd.grid(), std::move(out));
}

Spd canonical_form(const Spd& spd)
{
    const Spd unit = normalize_peak(spd);
    std::vector<double> out(unit.values().begin(), unit.values().end());
    for (double& v : out)
        v = static_cast<double>(static_cast<float>(v));
    return Spd(unit.grid(), std::move(out));
}

Spd read_spd_csv(std::istream& in, const WavelengthGrid& target)
{
    const std::string what = "SPD CSV";
    const auto table = detail::read_numeric_csv(in, what);
    const auto wl = detail::wavelength_column(
        table, detail::require_column(table, "wavelength_nm", what), what);
    const std::size_t pcol = detail::require_column(table, "power", what);
    const auto power = detail::column(table, pcol);
    for (std::size_t i = 0; i < power.size(); ++i)
        if (power[i] < 0.0)
            throw Error(ErrorKind::parse,
                        fmt::format("{}: line {}: negative power", what, table.line_numbers[i]));
    if (wl.size() < 2)
        throw Error(ErrorKind::parse, fmt::format("{}: need at least 2 samples", what));
    return Spd(target, interpolate_samples(wl, power, target));
}

void write_spd_csv(std::ostream& out, const Spd& spd)
{
    out << "wavelength_nm,power\n";
    for (std::size_t i = 0; i < spd.size(); ++i)
        out << fmt::format("{:.10g},{:.9g}\n", spd.grid().at(i), spd[i]);
}

} // namespace lumispec
