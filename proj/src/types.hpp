#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace spectral {

using cplx = std::complex<double>;
using ComplexBuffer = std::vector<cplx>;

// Uniformly sampled real-valued time-domain record.
struct Trace {
    std::vector<double> samples;
    double sample_rate_hz = 0.0;
    double t0_s = 0.0;

    std::size_t size() const { return samples.size(); }
};

// Complex spectrum on an explicit uniform frequency axis.
// source_n is the transform length behind the bins (informational).
struct Spectrum {
    ComplexBuffer bins;
    double f_start_hz = 0.0;
    double f_step_hz = 0.0;
    std::size_t source_n = 0;

    std::size_t size() const { return bins.size(); }
    double frequency(std::size_t k) const {
        return f_start_hz + static_cast<double>(k) * f_step_hz;
    }
    double f_end_hz() const {
        return bins.empty() ? f_start_hz : frequency(bins.size() - 1);
    }
};

// 20*log10(|v|), floored at -300 dB so zero bins stay finite.
double magnitude_db(const cplx& v);
double magnitude_db(double mag);

// Throws std::invalid_argument on empty samples, non-finite values or
// a non-positive sample rate.
void validate_trace(const Trace& t);

}  // namespace spectral
