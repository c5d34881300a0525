#include "zoomfft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "czt.hpp"

namespace spectral {

double ZoomFftPlan::f_step_hz() const {
    return sample_rate_hz / (static_cast<double>(decimation) * static_cast<double>(n_fft));
}

std::vector<double> design_lowpass(double cutoff_hz, double sample_rate_hz,
                                   std::size_t num_taps) {
    if (!(sample_rate_hz > 0.0))
        throw std::invalid_argument("design_lowpass: sample rate must be positive");
    if (!(cutoff_hz > 0.0) || cutoff_hz > sample_rate_hz / 2.0)
        throw std::invalid_argument("design_lowpass: cutoff must lie in (0, fs/2]");
    if (num_taps == 0 || num_taps % 2 == 0)
        throw std::invalid_argument("design_lowpass: tap count must be odd");
    if (num_taps == 1) return {1.0};

    const double fc = cutoff_hz / sample_rate_hz;  // cycles per sample
    const std::size_t mid = (num_taps - 1) / 2;
    std::vector<double> taps(num_taps);
    double sum = 0.0;
    for (std::size_t t = 0; t < num_taps; ++t) {
        const double k = static_cast<double>(t) - static_cast<double>(mid);
        const double arg = 2.0 * fc * k;
        double sinc = 1.0;
        if (k != 0.0) sinc = std::sin(std::numbers::pi * arg) / (std::numbers::pi * arg);
        const double window =
            0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * static_cast<double>(t) /
                                   static_cast<double>(num_taps - 1));
        taps[t] = 2.0 * fc * sinc * window;
        sum += taps[t];
    }
    for (double& v : taps) v /= sum;  // unity gain at DC
    return taps;
}

ComplexBuffer frequency_shift(std::span<const double> x, double f_shift_hz,
                              double sample_rate_hz) {
    if (!(sample_rate_hz > 0.0))
        throw std::invalid_argument("frequency_shift: sample rate must be positive");
    const double q = -f_shift_hz / sample_rate_hz;
    ComplexBuffer y(x.size());
    for (std::size_t n = 0; n < x.size(); ++n)
        y[n] = x[n] * cis_cycles(q, static_cast<double>(n));
    return y;
}

ComplexBuffer frequency_shift(std::span<const cplx> x, double f_shift_hz,
                              double sample_rate_hz) {
    if (!(sample_rate_hz > 0.0))
        throw std::invalid_argument("frequency_shift: sample rate must be positive");
    const double q = -f_shift_hz / sample_rate_hz;
    ComplexBuffer y(x.size());
    for (std::size_t n = 0; n < x.size(); ++n)
        y[n] = x[n] * cis_cycles(q, static_cast<double>(n));
    return y;
}

ComplexBuffer filter_decimate(std::span<const cplx> x, std::span<const double> taps,
                              std::size_t d) {
    if (d == 0) throw std::invalid_argument("filter_decimate: decimation must be >= 1");
    if (taps.empty()) throw std::invalid_argument("filter_decimate: empty filter");
    const std::size_t n = x.size();
    ComplexBuffer out(n / d);
    for (std::size_t m = 0; m < out.size(); ++m) {
        cplx acc = 0.0;
        const std::size_t base = m * d;
        const std::size_t t_end = std::min(taps.size(), base + 1);
        for (std::size_t t = 0; t < t_end; ++t) acc += taps[t] * x[base - t];
        out[m] = acc;
    }
    return out;
}

ComplexBuffer filter_decimate_circular(std::span<const cplx> x,
                                       std::span<const double> taps, std::size_t d) {
    if (d == 0)
        throw std::invalid_argument("filter_decimate_circular: decimation must be >= 1");
    if (taps.empty()) throw std::invalid_argument("filter_decimate_circular: empty filter");
    const std::size_t n = x.size();
    if (n == 0 || n % d != 0)
        throw std::invalid_argument(
            "filter_decimate_circular: decimation must divide the record length");
    if (taps.size() > n)
        throw std::invalid_argument("filter_decimate_circular: filter longer than record");
    ComplexBuffer out(n / d);
    for (std::size_t m = 0; m < out.size(); ++m) {
        cplx acc = 0.0;
        const std::size_t base = m * d;
        for (std::size_t t = 0; t < taps.size(); ++t) {
            const std::size_t j = base >= t ? base - t : base + n - t;
            acc += taps[t] * x[j];
        }
        out[m] = acc;
    }
    return out;
}

ZoomFftPlan make_zoom_plan(std::size_t input_len, double f1_hz, double f2_hz,
                           double sample_rate_hz, const ZoomOptions& opts) {
    if (input_len < 2)
        throw std::invalid_argument("make_zoom_plan: need at least 2 input samples");
    if (!(sample_rate_hz > 0.0))
        throw std::invalid_argument("make_zoom_plan: sample rate must be positive");
    if (!(f1_hz >= 0.0) || !(f2_hz > f1_hz))
        throw std::invalid_argument("make_zoom_plan: band must satisfy 0 <= f1 < f2");
    if (f2_hz > sample_rate_hz / 2.0 * (1.0 + 1e-12))
        throw std::invalid_argument("make_zoom_plan: band exceeds the Nyquist frequency");

    ZoomFftPlan p;
    p.f1_hz = f1_hz;
    p.f2_hz = f2_hz;
    p.sample_rate_hz = sample_rate_hz;
    p.circular = opts.circular;
    p.trim_transient = opts.trim_transient;
    p.pad_pow2 = opts.pad_pow2;
    p.input_len = input_len;

    const double band = f2_hz - f1_hz;
    p.center_hz = opts.center_set ? opts.center_hz : 0.5 * (f1_hz + f2_hz);
    if (!std::isfinite(p.center_hz))
        throw std::invalid_argument("make_zoom_plan: non-finite center frequency");

    bool auto_decim = opts.decimation == 0;
    p.decimation =
        auto_decim ? std::max<std::size_t>(
                         1, static_cast<std::size_t>(std::floor(sample_rate_hz / (2.0 * band))))
                   : opts.decimation;
    const double decimated_nyquist =
        sample_rate_hz / (2.0 * static_cast<double>(p.decimation));
    // the shifted band must fit inside the decimated Nyquist interval
    const double reach = std::max(f2_hz - p.center_hz, p.center_hz - f1_hz);
    if (reach > decimated_nyquist * (1.0 + 1e-12))
        throw std::invalid_argument(
            "make_zoom_plan: decimation too large for the requested band");

    const bool auto_filter = opts.num_taps == 0 && !(opts.cutoff_hz > 0.0);
    if (p.decimation == 1 && auto_filter) {
        p.filter_taps = {1.0};  // nothing to reject; keep the pipeline exact
        p.cutoff_hz = sample_rate_hz / 2.0;
    } else {
        p.cutoff_hz =
            opts.cutoff_hz > 0.0 ? opts.cutoff_hz : 0.5 * (0.5 * band + decimated_nyquist);
        const std::size_t taps = opts.num_taps == 0 ? 101 : opts.num_taps;
        p.filter_taps = design_lowpass(p.cutoff_hz, sample_rate_hz, taps);
    }
    p.group_delay_samples = 0.5 * static_cast<double>(p.filter_taps.size() - 1);

    p.usable_len = p.circular ? (input_len / p.decimation) * p.decimation : input_len;
    if (p.usable_len / p.decimation < 2)
        throw std::invalid_argument(
            "make_zoom_plan: record too short for this decimation factor");
    if (p.circular && p.filter_taps.size() > p.usable_len)
        throw std::invalid_argument("make_zoom_plan: filter longer than the usable record");

    std::size_t block = p.usable_len / p.decimation;
    if (!p.circular && p.trim_transient) {
        p.trim_samples = (p.filter_taps.size() - 1 + p.decimation - 1) / p.decimation;
        if (p.trim_samples >= block)
            throw std::invalid_argument(
                "make_zoom_plan: transient trim would consume the whole record");
        block -= p.trim_samples;
    }
    p.decimated_len = block;
    p.n_fft = p.pad_pow2 ? next_pow2(block) : block;

    const double q = -p.center_hz / sample_rate_hz;
    p.shift_table.resize(p.usable_len);
    for (std::size_t n = 0; n < p.usable_len; ++n)
        p.shift_table[n] = cis_cycles(q, static_cast<double>(n));

    if (is_pow2(p.n_fft)) p.fft.emplace(p.n_fft);
    return p;
}

Spectrum zoom_fft(const ZoomFftPlan& plan, const Trace& t) {
    validate_trace(t);
    if (t.size() != plan.input_len)
        throw std::invalid_argument("zoom_fft: trace length does not match the plan");
    if (std::abs(t.sample_rate_hz - plan.sample_rate_hz) >
        1e-9 * plan.sample_rate_hz)
        throw std::invalid_argument("zoom_fft: trace sample rate does not match the plan");

    ComplexBuffer y(plan.usable_len);
    for (std::size_t n = 0; n < plan.usable_len; ++n)
        y[n] = t.samples[n] * plan.shift_table[n];

    ComplexBuffer z;
    if (plan.circular) {
        z = filter_decimate_circular(y, plan.filter_taps, plan.decimation);
    } else {
        z = filter_decimate(y, plan.filter_taps, plan.decimation);
        if (plan.trim_samples > 0) z.erase(z.begin(), z.begin() + plan.trim_samples);
    }

    z.resize(plan.n_fft, cplx(0.0, 0.0));
    if (plan.fft)
        plan.fft->forward(z);
    else
        z = dft_any(z);

    const double step = plan.f_step_hz();
    const long n = static_cast<long>(plan.n_fft);
    const double lo_idx = (plan.f1_hz - plan.center_hz) / step;
    const double hi_idx = (plan.f2_hz - plan.center_hz) / step;
    const double eps = 1e-9 * (1.0 + std::max(std::abs(lo_idx), std::abs(hi_idx)));
    long k_lo = static_cast<long>(std::ceil(lo_idx - eps));
    long k_hi = static_cast<long>(std::floor(hi_idx + eps));
    k_lo = std::max(k_lo, -(n / 2));
    k_hi = std::min(k_hi, n - 1 - n / 2);
    if (k_lo > k_hi)
        throw std::invalid_argument("zoom_fft: no transform bins fall inside the band");

    // decimation keeps 1/d of the samples; scale back up so magnitudes match
    // a full-length transform, and undo the filter's linear phase
    const double scale = static_cast<double>(plan.decimation);
    const double delay = plan.group_delay_samples +
                         static_cast<double>(plan.trim_samples * plan.decimation);
    const double q = delay / (static_cast<double>(plan.decimation) *
                              static_cast<double>(plan.n_fft));

    Spectrum s;
    s.bins.reserve(static_cast<std::size_t>(k_hi - k_lo + 1));
    for (long k = k_lo; k <= k_hi; ++k) {
        const std::size_t idx = static_cast<std::size_t>(((k % n) + n) % n);
        s.bins.push_back(z[idx] * scale * cis_cycles(q, static_cast<double>(k)));
    }
    s.f_start_hz = plan.center_hz + static_cast<double>(k_lo) * step;
    s.f_step_hz = step;
    s.source_n = plan.n_fft;
    return s;
}

}  // namespace spectral
