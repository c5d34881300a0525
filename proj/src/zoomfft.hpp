#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "numerics.hpp"
#include "types.hpp"

namespace spectral {

// Knobs for make_zoom_plan.  Zeroed / NaN fields mean "derive a default":
// center defaults to the band midpoint, decimation to floor(fs / (2*(f2-f1))),
// cutoff to the midpoint of band half-width and decimated Nyquist, tap count
// to 101 (or a unit filter when the derived decimation is 1).
struct ZoomOptions {
    double center_hz = 0.0;
    bool center_set = false;
    std::size_t decimation = 0;
    double cutoff_hz = 0.0;
    std::size_t num_taps = 0;
    bool circular = true;
    bool trim_transient = false;
    bool pad_pow2 = true;
};

// Precomputed zoom pipeline for one input length: mix down to the band
// center, lowpass, decimate, short transform.  Circular filtering (the
// default) wraps the record ends so the filter acts as a pure mask on the
// full-length spectrum; linear mode applies the textbook convolution with
// zeros outside the record and optionally trims the startup transient.
struct ZoomFftPlan {
    double f1_hz = 0.0;
    double f2_hz = 0.0;
    double center_hz = 0.0;
    double sample_rate_hz = 0.0;
    double cutoff_hz = 0.0;
    std::size_t decimation = 1;
    std::vector<double> filter_taps;
    double group_delay_samples = 0.0;  // (taps-1)/2, at the input rate
    bool circular = true;
    bool trim_transient = false;
    bool pad_pow2 = true;

    std::size_t input_len = 0;
    std::size_t usable_len = 0;     // input_len truncated to a decimation multiple
    std::size_t trim_samples = 0;   // decimated samples dropped in linear trim mode
    std::size_t decimated_len = 0;  // block length fed to the short transform
    std::size_t n_fft = 0;          // short transform length

    ComplexBuffer shift_table;        // e^(-i 2 pi center n / fs)
    std::optional<FftPlan> fft;       // set when n_fft is a power of two

    double f_step_hz() const;
};

// Lowpass FIR: Hamming-windowed sinc, taps normalized to a unity sum so the
// passband sits at 0 dB.  num_taps must be odd (1 gives a passthrough).
std::vector<double> design_lowpass(double cutoff_hz, double sample_rate_hz,
                                   std::size_t num_taps);

// y[n] = x[n] * e^(-i 2 pi f_shift n / fs)
ComplexBuffer frequency_shift(std::span<const double> x, double f_shift_hz,
                              double sample_rate_hz);
ComplexBuffer frequency_shift(std::span<const cplx> x, double f_shift_hz,
                              double sample_rate_hz);

// Convolve then keep every d-th sample: y[m] = sum_t h[t] x[m d - t].
// Linear form treats x as zero outside the record and yields floor(n/d)
// samples; circular form wraps indices mod n and requires d to divide n.
ComplexBuffer filter_decimate(std::span<const cplx> x, std::span<const double> taps,
                              std::size_t d);
ComplexBuffer filter_decimate_circular(std::span<const cplx> x,
                                       std::span<const double> taps, std::size_t d);

// Band must satisfy 0 <= f1 < f2 <= fs/2 and fit inside the decimated
// Nyquist interval around the center.
ZoomFftPlan make_zoom_plan(std::size_t input_len, double f1_hz, double f2_hz,
                           double sample_rate_hz, const ZoomOptions& opts = {});

// Run the pipeline and return bins restricted to [f1, f2].  Magnitudes are
// scaled by the decimation factor to line up with a full-length transform of
// the same trace; the filter group delay is compensated in phase.  The trace
// length and rate must match what the plan was built for.
Spectrum zoom_fft(const ZoomFftPlan& plan, const Trace& t);

}  // namespace spectral
