#pragma once

#include <cstddef>

namespace spectral {

// Frequency bin spacing of an n-point transform at sample rate fs.
double fft_resolution(double sample_rate_hz, std::size_t n);

// Samples needed so an unpadded transform's bin spacing is <= target_step_hz,
// i.e. ceil(fs / target) with protection against roundoff just above an
// integer quotient.
std::size_t record_len_for_step(double sample_rate_hz, double target_step_hz);

// Zeros to append to an n-sample record so the padded transform's bin
// spacing is <= target_step_hz (never coarser). target_step_hz must not
// exceed the unpadded spacing fs/n.
std::size_t zeros_for_resolution(double sample_rate_hz, std::size_t n,
                                 double target_step_hz);

// Band-limited point count whose plotting step matches an n_fft-point
// full-band transform: round(((f2-f1)/fs) * n_fft), at least 1.
// Band must satisfy 0 <= f1 < f2 <= fs/2.
std::size_t czt_len_for_matched_resolution(double f1_hz, double f2_hz,
                                           double sample_rate_hz,
                                           std::size_t n_fft);

// Bookkeeping record tying a target bin spacing to a record length.
struct ResolutionSpec {
    double sample_rate_hz = 0.0;
    std::size_t n_samples = 0;
    double target_step_hz = 0.0;
};

// Throws std::invalid_argument when the target is unachievable
// (coarser than fs/n) or any field is out of range.
void validate(const ResolutionSpec& spec);

}  // namespace spectral
