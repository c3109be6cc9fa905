#pragma once

#include <stdexcept>
#include <string>

namespace lumispec {

// Each kind maps to a stable CLI exit code (see tools/lumispec.cpp).
enum class ErrorKind {
    parse,            // malformed input file or stream
    domain,           // precondition violated by an argument
    degenerate_spd,   // all-zero or otherwise unusable spectrum
    cct_out_of_range, // temperature outside a model's range
    no_first_order,   // m*lambda >= d
    saturation,       // simulated exposure clips the ADC
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace lumispec
