#include "numerics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace spectral {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    if (n == 0) throw std::invalid_argument("next_pow2: n must be >= 1");
    std::size_t p = 1;
    while (p < n) {
        if (p > (std::size_t{1} << 62)) throw std::invalid_argument("next_pow2: overflow");
        p <<= 1;
    }
    return p;
}

ComplexBuffer zero_pad(std::span<const cplx> x, std::size_t target_len) {
    if (target_len < x.size())
        throw std::invalid_argument("zero_pad: target length " + std::to_string(target_len) +
                                    " is shorter than the input (" + std::to_string(x.size()) + ")");
    ComplexBuffer out(target_len, cplx{0.0, 0.0});
    std::copy(x.begin(), x.end(), out.begin());
    return out;
}

ComplexBuffer dft_naive(std::span<const cplx> x) {
    if (x.empty()) throw std::invalid_argument("dft_naive: empty input");
    const std::size_t n = x.size();
    std::vector<cplx> tw(n);
    for (std::size_t r = 0; r < n; ++r) {
        const double ang = -two_pi * static_cast<double>(r) / static_cast<double>(n);
        tw[r] = cplx{std::cos(ang), std::sin(ang)};
    }
    ComplexBuffer out(n);
    for (std::size_t k = 0; k < n; ++k) {
        cplx acc{0.0, 0.0};
        for (std::size_t m = 0; m < n; ++m) acc += x[m] * tw[(k * m) % n];
        out[k] = acc;
    }
    return out;
}

FftPlan::FftPlan(std::size_t n) : n_(n) {
    if (!is_pow2(n)) throw std::invalid_argument("FftPlan: size must be a power of two");
    log2n_ = 0;
    while ((std::size_t{1} << log2n_) < n_) ++log2n_;

    twiddles_.resize(n_ / 2);
    inv_twiddles_.resize(n_ / 2);
    for (std::size_t k = 0; k < n_ / 2; ++k) {
        const double ang = -two_pi * static_cast<double>(k) / static_cast<double>(n_);
        twiddles_[k] = cplx{std::cos(ang), std::sin(ang)};
        inv_twiddles_[k] = std::conj(twiddles_[k]);
    }
    bitrev_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        std::uint32_t r = 0;
        for (unsigned b = 0; b < log2n_; ++b)
            if (i & (std::size_t{1} << b)) r |= std::uint32_t{1} << (log2n_ - 1 - b);
        bitrev_[i] = r;
    }
}

void FftPlan::run(std::span<cplx> a, bool invert) const {
    if (a.size() != n_) throw std::invalid_argument("FftPlan: buffer size does not match plan");
    for (std::size_t i = 0; i < n_; ++i) {
        const std::size_t j = bitrev_[i];
        if (i < j) std::swap(a[i], a[j]);
    }
    const cplx* tw = invert ? inv_twiddles_.data() : twiddles_.data();
    for (std::size_t len = 2; len <= n_; len <<= 1) {
        const std::size_t half = len >> 1;
        const std::size_t stride = n_ / len;
        for (std::size_t base = 0; base < n_; base += len) {
            for (std::size_t j = 0; j < half; ++j) {
                const cplx w = tw[j * stride];
                const cplx t = w * a[base + half + j];
                const cplx u = a[base + j];
                a[base + j] = u + t;
                a[base + half + j] = u - t;
            }
        }
    }
    if (invert) {
        const double s = 1.0 / static_cast<double>(n_);
        for (auto& v : a) v *= s;
    }
}

void FftPlan::forward(std::span<cplx> data) const { run(data, false); }
void FftPlan::inverse(std::span<cplx> data) const { run(data, true); }

namespace {
ComplexBuffer run_pow2(std::span<const cplx> x, bool invert) {
    if (x.empty()) throw std::invalid_argument("fft: empty input");
    if (!is_pow2(x.size()))
        throw std::invalid_argument("fft: length " + std::to_string(x.size()) +
                                    " is not a power of two; zero_pad to " +
                                    std::to_string(next_pow2(x.size())) + " first");
    ComplexBuffer buf(x.begin(), x.end());
    FftPlan plan(buf.size());
    if (invert)
        plan.inverse(buf);
    else
        plan.forward(buf);
    return buf;
}
}  // namespace

ComplexBuffer fft(std::span<const cplx> x) { return run_pow2(x, false); }
ComplexBuffer ifft(std::span<const cplx> x) { return run_pow2(x, true); }

cplx cis_cycles(double q, double t) {
    const double hi = q * t;
    const double lo = std::fma(q, t, -hi);
    const double frac = (hi - std::nearbyint(hi)) + lo;
    const double ang = two_pi * frac;
    return cplx{std::cos(ang), std::sin(ang)};
}

}  // namespace spectral
