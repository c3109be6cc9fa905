#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace lumispec {

/// Uniform, strictly increasing wavelength grid in nanometres.
class WavelengthGrid {
public:
    WavelengthGrid(double start_nm, double step_nm, std::size_t count);

    double start() const noexcept { return start_; }
    double step() const noexcept { return step_; }
    std::size_t count() const noexcept { return count_; }
    double last() const noexcept { return at(count_ - 1); }
    double at(std::size_t i) const noexcept { return start_ + static_cast<double>(i) * step_; }

    bool operator==(const WavelengthGrid&) const = default;

private:
    double start_;
    double step_;
    std::size_t count_;
};

/// 380-780 nm at 5 nm; every colorimetric integral runs on this grid.
const WavelengthGrid& canonical_grid();

/// Relative spectral power on a uniform grid. Values are finite and >= 0.
class Spd {
public:
    Spd(WavelengthGrid grid, std::vector<double> values);

    const WavelengthGrid& grid() const noexcept { return grid_; }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    std::size_t size() const noexcept { return values_.size(); }

    double max_value() const;
    bool is_zero() const;

    Spd scaled(double factor) const;

    bool operator==(const Spd&) const = default;

private:
    WavelengthGrid grid_;
    std::vector<double> values_;
};

// Linear interpolation of arbitrary strictly increasing samples onto `target`.
// Queries outside [wavelengths.front(), wavelengths.back()] evaluate to 0.
std::vector<double> interpolate_samples(std::span<const double> wavelengths,
                                        std::span<const double> values,
                                        const WavelengthGrid& target);

/// Linear interpolation onto `target`; zero outside the source support.
Spd resample(const Spd& spd, const WavelengthGrid& target);

/// Rectangular-rule integral of spd * weight over spd's grid.
/// `weight` is resampled to spd's grid first.
double integrate_product(const Spd& spd, const Spd& weight);

// Same rule for raw curves already on `grid`.
double integrate_product(const WavelengthGrid& grid, std::span<const double> a,
                         std::span<const double> b);

/// Divides by the maximum. Throws degenerate_spd for an all-zero input.
Spd normalize_peak(const Spd& spd);

// Peak-normalized, then each value rounded to single precision, so that S and
// k*S map to the same bit pattern for any k > 0 (up to ~1e-8 odds per sample
// of landing on a rounding boundary).
Spd canonical_form(const Spd& spd);

// `wavelength_nm,power` CSV. Rows may be non-uniform; result is on `target`.
Spd read_spd_csv(std::istream& in, const WavelengthGrid& target = canonical_grid());
void write_spd_csv(std::ostream& out, const Spd& spd);

} // namespace lumispec
