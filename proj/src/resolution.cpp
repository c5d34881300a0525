#include "resolution.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spectral {

namespace {

void check_rate(double fs) {
    if (!(fs > 0.0) || !std::isfinite(fs))
        throw std::invalid_argument("sample rate must be positive and finite");
}

}  // namespace

std::size_t record_len_for_step(double sample_rate_hz, double target_step_hz) {
    check_rate(sample_rate_hz);
    if (!(target_step_hz > 0.0))
        throw std::invalid_argument("record_len_for_step: target step must be positive");
    const double q = sample_rate_hz / target_step_hz;
    const double qr = std::round(q);
    if (std::abs(q - qr) <= 1e-9 * q) return static_cast<std::size_t>(qr);
    return static_cast<std::size_t>(std::ceil(q));
}

double fft_resolution(double sample_rate_hz, std::size_t n) {
    check_rate(sample_rate_hz);
    if (n == 0) throw std::invalid_argument("fft_resolution: n must be >= 1");
    return sample_rate_hz / static_cast<double>(n);
}

std::size_t zeros_for_resolution(double sample_rate_hz, std::size_t n,
                                 double target_step_hz) {
    check_rate(sample_rate_hz);
    if (n == 0) throw std::invalid_argument("zeros_for_resolution: n must be >= 1");
    if (!(target_step_hz > 0.0))
        throw std::invalid_argument("zeros_for_resolution: target step must be positive");
    const double natural = sample_rate_hz / static_cast<double>(n);
    if (target_step_hz > natural * (1.0 + 1e-12))
        throw std::invalid_argument(
            "zeros_for_resolution: target step " + std::to_string(target_step_hz) +
            " Hz is coarser than the unpadded spacing " + std::to_string(natural) + " Hz");
    const std::size_t total = record_len_for_step(sample_rate_hz, target_step_hz);
    return total <= n ? 0 : total - n;
}

std::size_t czt_len_for_matched_resolution(double f1_hz, double f2_hz,
                                           double sample_rate_hz,
                                           std::size_t n_fft) {
    check_rate(sample_rate_hz);
    if (n_fft == 0)
        throw std::invalid_argument("czt_len_for_matched_resolution: n_fft must be >= 1");
    if (!(f1_hz >= 0.0) || !(f1_hz < f2_hz))
        throw std::invalid_argument("czt_len_for_matched_resolution: need 0 <= f1 < f2");
    if (f2_hz > sample_rate_hz / 2.0 * (1.0 + 1e-12))
        throw std::invalid_argument(
            "czt_len_for_matched_resolution: band edge exceeds the usable half rate");
    const double m = std::round((f2_hz - f1_hz) / sample_rate_hz *
                                static_cast<double>(n_fft));
    return m < 1.0 ? 1 : static_cast<std::size_t>(m);
}

void validate(const ResolutionSpec& spec) {
    check_rate(spec.sample_rate_hz);
    if (spec.n_samples == 0)
        throw std::invalid_argument("ResolutionSpec: n_samples must be >= 1");
    if (!(spec.target_step_hz > 0.0))
        throw std::invalid_argument("ResolutionSpec: target step must be positive");
    const double natural = spec.sample_rate_hz / static_cast<double>(spec.n_samples);
    if (spec.target_step_hz > natural * (1.0 + 1e-12))
        throw std::invalid_argument("ResolutionSpec: target step coarser than fs/n");
}

}  // namespace spectral
