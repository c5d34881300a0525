#pragma once

#include <cstddef>
#include <span>

#include "numerics.hpp"
#include "types.hpp"

namespace spectral {

// Spiral sampling parameters: bin k evaluates sum_n x[n] * (a * w^-k)^-n,
// i.e. X[k] = sum_n x[n] a^-n w^(k*n), k < m.
struct CztParams {
    cplx a{1.0, 0.0};
    cplx w{1.0, 0.0};
    std::size_t m = 0;
};

void validate(const CztParams& p);

// Unit-circle parameters for a linear sweep of the band [f1, f2):
// a = exp(i*2*pi*f1/fs), w = exp(-i*2*pi*(f2-f1)/(m*fs)); bin k sits at
// f1 + k*(f2-f1)/m. Requires 0 <= f1 < f2 <= fs and m >= 2.
CztParams czt_params_for_band(double f1_hz, double f2_hz, double sample_rate_hz,
                              std::size_t m);

// Literal O(n*m) evaluation of the defining sum; the oracle route.
ComplexBuffer czt_direct(std::span<const cplx> x, const CztParams& p);

// Fast route: the k*n exponent is split via 2*k*n = k^2 + n^2 - (k-n)^2,
// turning the sum into a linear convolution with a fixed chirp, carried
// by a power-of-two transform of length next_pow2(n + m - 1). Tables and
// the kernel transform are precomputed; immutable after construction.
class CztPlan {
  public:
    CztPlan(std::size_t input_len, const CztParams& p);

    ComplexBuffer execute(std::span<const cplx> x) const;
    // Alloc-free variant: conv_scratch must hold conv_size() entries,
    // out must hold output_size().
    void execute(std::span<const cplx> x, std::span<cplx> conv_scratch,
                 std::span<cplx> out) const;

    std::size_t input_size() const { return n_; }
    std::size_t output_size() const { return params_.m; }
    std::size_t conv_size() const { return conv_len_; }

  private:
    std::size_t n_ = 0;
    CztParams params_;
    std::size_t conv_len_ = 0;
    FftPlan fft_;
    std::vector<cplx> input_chirp_;   // a^-n * w^(n^2/2)
    std::vector<cplx> output_chirp_;  // w^(k^2/2)
    std::vector<cplx> kernel_fft_;    // transform of the padded w^(-n^2/2) kernel
};

// One-shot convenience over CztPlan.
ComplexBuffer czt(std::span<const cplx> x, const CztParams& p);

// Discrete transform at the exact input length: radix-2 when the length
// is a power of two, the chirp route otherwise.
ComplexBuffer dft_any(std::span<const cplx> x);

// Band spectrum of a real trace; band within [0, fs/2], m >= 2.
// Axis: f_start = f1, f_step = (f2-f1)/m.
Spectrum czt_spectrum(const Trace& trace, double f1_hz, double f2_hz,
                      std::size_t m);

}  // namespace spectral
