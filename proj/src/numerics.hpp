#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "types.hpp"

namespace spectral {

bool is_pow2(std::size_t n);

// Smallest power of two >= n. n must be >= 1.
std::size_t next_pow2(std::size_t n);

// Copy of x extended with zeros to target_len (>= len(x)).
ComplexBuffer zero_pad(std::span<const cplx> x, std::size_t target_len);

// O(n^2) reference transform. Twiddle phases are reduced with exact
// integer arithmetic ((k*m) mod n), so it doubles as the accuracy oracle
// for the fast path.
ComplexBuffer dft_naive(std::span<const cplx> x);

// Iterative in-place radix-2 transform with a bit-reversal pass and a
// precomputed twiddle table. Immutable after construction, so one plan
// may serve concurrent calls on distinct buffers.
class FftPlan {
  public:
    explicit FftPlan(std::size_t n);  // n must be a power of two

    void forward(std::span<cplx> data) const;
    void inverse(std::span<cplx> data) const;  // applies the 1/n factor
    std::size_t size() const { return n_; }

  private:
    void run(std::span<cplx> data, bool invert) const;

    std::size_t n_ = 0;
    unsigned log2n_ = 0;
    std::vector<cplx> twiddles_;      // exp(-i*2*pi*k/n), k < n/2
    std::vector<cplx> inv_twiddles_;  // conjugates, so both directions run branch-free
    std::vector<std::uint32_t> bitrev_;
};

// One-shot conveniences over FftPlan. Length must be a power of two;
// the error message names the padding that would fix it.
ComplexBuffer fft(std::span<const cplx> x);
ComplexBuffer ifft(std::span<const cplx> x);

// exp(i*2*pi*q*t) with the product q*t reduced to [-1/2, 1/2] cycles
// using an fma split, so large t does not cost phase precision.
cplx cis_cycles(double q, double t);

}  // namespace spectral
