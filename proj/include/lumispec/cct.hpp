#pragma once

#include "lumispec/colorimetry.hpp"

#include <string_view>

namespace lumispec {

enum class CctMethod { polynomial, exponential };

std::string_view to_string(CctMethod m);

struct CctEstimate {
    double kelvin = 0.0;
    CctMethod method = CctMethod::exponential;
    // False when the exponential fit is used outside 3000-50000 K.
    bool within_validity = true;

    bool operator==(const CctEstimate&) const = default;
};

// Cubic in n = (x - 0.3320) / (y - 0.1858). Results outside [1000, 50000] K
// are rejected with cct_out_of_range.
CctEstimate cct_mccamy(const ChromaticityXY& c);

// Sum of exponentials in n = (x - 0.3366) / (y - 0.1735). Non-finite or
// non-positive results throw; positive results outside 3000-50000 K are
// returned with within_validity = false.
CctEstimate cct_exponential(const ChromaticityXY& c);

// Evaluates the exponential fit at a given n (exposed for monotonicity tests).
double cct_exponential_at(double n);

CctEstimate estimate_cct(const ChromaticityXY& c, CctMethod method);

} // namespace lumispec
