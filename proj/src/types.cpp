#include "types.hpp"

#include <cmath>
#include <stdexcept>

namespace spectral {

namespace {
constexpr double kDbFloor = -300.0;
constexpr double kMagFloor = 1e-15;  // 20*log10(1e-15) = -300
}  // namespace

double magnitude_db(double mag) {
    if (!(mag > kMagFloor)) return kDbFloor;
    return 20.0 * std::log10(mag);
}

double magnitude_db(const cplx& v) { return magnitude_db(std::abs(v)); }

void validate_trace(const Trace& t) {
    if (t.samples.empty()) throw std::invalid_argument("trace: no samples");
    if (!(t.sample_rate_hz > 0.0) || !std::isfinite(t.sample_rate_hz))
        throw std::invalid_argument("trace: sample rate must be positive and finite");
    for (double v : t.samples)
        if (!std::isfinite(v)) throw std::invalid_argument("trace: non-finite sample");
    if (!std::isfinite(t.t0_s)) throw std::invalid_argument("trace: non-finite start time");
}

}  // namespace spectral
