#include "czt.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace spectral {

namespace {

// z^t for real t as |z|^t * exp(i*2*pi*q*t) with q = arg(z)/(2*pi).
// Magnitudes within 1e-14 of the unit circle are snapped onto it so
// constructed unit-circle parameters do not drift at large exponents.
struct PolarPow {
    double log_mag = 0.0;
    double q = 0.0;

    explicit PolarPow(const cplx& z) {
        const double mag = std::abs(z);
        if (!(mag > 0.0)) throw std::invalid_argument("czt: parameter magnitude is zero");
        log_mag = std::log(mag);
        if (std::abs(log_mag) < 1e-14) log_mag = 0.0;
        q = std::arg(z) / (2.0 * std::numbers::pi);
    }

    cplx pow(double t) const {
        cplx u = cis_cycles(q, t);
        if (log_mag != 0.0) u *= std::exp(log_mag * t);
        return u;
    }
};

}  // namespace

void validate(const CztParams& p) {
    if (p.m == 0) throw std::invalid_argument("czt: m must be >= 1");
    if (!(std::abs(p.a) > 0.0) || !(std::abs(p.w) > 0.0))
        throw std::invalid_argument("czt: a and w must be nonzero");
}

CztParams czt_params_for_band(double f1_hz, double f2_hz, double sample_rate_hz,
                              std::size_t m) {
    if (!(sample_rate_hz > 0.0))
        throw std::invalid_argument("czt_params_for_band: sample rate must be positive");
    if (!(f1_hz >= 0.0) || !(f1_hz < f2_hz))
        throw std::invalid_argument("czt_params_for_band: need 0 <= f1 < f2");
    if (f2_hz > sample_rate_hz * (1.0 + 1e-12))
        throw std::invalid_argument("czt_params_for_band: f2 exceeds the sample rate");
    if (m < 2) throw std::invalid_argument("czt_params_for_band: m must be >= 2");
    CztParams p;
    p.a = cis_cycles(f1_hz / sample_rate_hz, 1.0);
    p.w = cis_cycles(-(f2_hz - f1_hz) / (static_cast<double>(m) * sample_rate_hz), 1.0);
    p.m = m;
    return p;
}

ComplexBuffer czt_direct(std::span<const cplx> x, const CztParams& p) {
    validate(p);
    if (x.empty()) throw std::invalid_argument("czt_direct: empty input");
    const std::size_t n = x.size();
    const PolarPow A(p.a), W(p.w);

    std::vector<cplx> xa(n);
    for (std::size_t i = 0; i < n; ++i) xa[i] = x[i] * A.pow(-static_cast<double>(i));

    ComplexBuffer out(p.m);
    for (std::size_t k = 0; k < p.m; ++k) {
        cplx acc{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i)
            acc += xa[i] * W.pow(static_cast<double>(k) * static_cast<double>(i));
        out[k] = acc;
    }
    return out;
}

namespace {
std::size_t plan_conv_len(std::size_t input_len, const CztParams& p) {
    validate(p);
    if (input_len == 0) throw std::invalid_argument("CztPlan: empty input length");
    return next_pow2(input_len + p.m - 1);
}
}  // namespace

CztPlan::CztPlan(std::size_t input_len, const CztParams& p)
    : n_(input_len),
      params_(p),
      conv_len_(plan_conv_len(input_len, p)),
      fft_(conv_len_) {
    const PolarPow A(p.a), W(p.w);

    input_chirp_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        const double t = static_cast<double>(i);
        input_chirp_[i] = A.pow(-t) * W.pow(0.5 * t * t);
    }
    output_chirp_.resize(p.m);
    for (std::size_t k = 0; k < p.m; ++k) {
        const double t = static_cast<double>(k);
        output_chirp_[k] = W.pow(0.5 * t * t);
    }
    // Chirp kernel w^(-j^2/2) laid out for circular convolution: indices
    // 0..m-1 carry the causal side, the tail carries j = -1..-(n-1).
    kernel_fft_.assign(conv_len_, cplx{0.0, 0.0});
    for (std::size_t k = 0; k < p.m; ++k) {
        const double t = static_cast<double>(k);
        kernel_fft_[k] = W.pow(-0.5 * t * t);
    }
    for (std::size_t i = 1; i < n_; ++i) {
        const double t = static_cast<double>(i);
        kernel_fft_[conv_len_ - i] = W.pow(-0.5 * t * t);
    }
    fft_.forward(kernel_fft_);
}

void CztPlan::execute(std::span<const cplx> x, std::span<cplx> conv_scratch,
                      std::span<cplx> out) const {
    if (x.size() != n_)
        throw std::invalid_argument("CztPlan: input length does not match plan");
    if (conv_scratch.size() != conv_len_ || out.size() != params_.m)
        throw std::invalid_argument("CztPlan: scratch/output size mismatch");
    for (std::size_t i = 0; i < n_; ++i) conv_scratch[i] = x[i] * input_chirp_[i];
    std::fill(conv_scratch.begin() + static_cast<std::ptrdiff_t>(n_), conv_scratch.end(),
              cplx{0.0, 0.0});
    fft_.forward(conv_scratch);
    for (std::size_t j = 0; j < conv_len_; ++j) conv_scratch[j] *= kernel_fft_[j];
    fft_.inverse(conv_scratch);
    for (std::size_t k = 0; k < params_.m; ++k)
        out[k] = conv_scratch[k] * output_chirp_[k];
}

ComplexBuffer CztPlan::execute(std::span<const cplx> x) const {
    ComplexBuffer scratch(conv_len_);
    ComplexBuffer out(params_.m);
    execute(x, scratch, out);
    return out;
}

ComplexBuffer czt(std::span<const cplx> x, const CztParams& p) {
    if (x.empty()) throw std::invalid_argument("czt: empty input");
    return CztPlan(x.size(), p).execute(x);
}

ComplexBuffer dft_any(std::span<const cplx> x) {
    if (x.empty()) throw std::invalid_argument("dft_any: empty input");
    if (is_pow2(x.size())) return fft(x);
    const std::size_t n = x.size();
    CztParams p;
    p.a = cplx{1.0, 0.0};
    p.w = cis_cycles(-1.0 / static_cast<double>(n), 1.0);
    p.m = n;
    return czt(x, p);
}

Spectrum czt_spectrum(const Trace& trace, double f1_hz, double f2_hz,
                      std::size_t m) {
    validate_trace(trace);
    const double nyquist = trace.sample_rate_hz / 2.0;
    if (!(f1_hz >= 0.0) || !(f1_hz < f2_hz))
        throw std::invalid_argument("czt_spectrum: need 0 <= f1 < f2");
    if (f2_hz > nyquist * (1.0 + 1e-12))
        throw std::invalid_argument("czt_spectrum: band edge " + std::to_string(f2_hz) +
                                    " Hz exceeds the Nyquist rate " + std::to_string(nyquist) +
                                    " Hz");
    const CztParams p = czt_params_for_band(f1_hz, f2_hz, trace.sample_rate_hz, m);
    ComplexBuffer x(trace.samples.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = cplx{trace.samples[i], 0.0};

    Spectrum s;
    s.bins = czt(x, p);
    s.f_start_hz = f1_hz;
    s.f_step_hz = (f2_hz - f1_hz) / static_cast<double>(m);
    s.source_n = trace.samples.size();
    return s;
}

}  // namespace spectral
