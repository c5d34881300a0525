#include "analysis.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "czt.hpp"
#include "errors.hpp"
#include "numerics.hpp"
#include "resolution.hpp"
#include "signals.hpp"
#include "spectra.hpp"

namespace spectral {

namespace {

bool is_local_max(const std::vector<double>& mags, std::size_t k) {
    const std::size_t last = mags.size() - 1;
    if (k == 0) return mags[0] > mags[1];
    if (k == last) return mags[last] > mags[last - 1];
    if (mags[k] < mags[k - 1] || mags[k] < mags[k + 1]) return false;
    return mags[k] > mags[k - 1] || mags[k] > mags[k + 1];
}

}  // namespace

DipMetric dip_metric(const Spectrum& s, double f_a_hz, double f_b_hz) {
    if (s.bins.size() < 2 || !(s.f_step_hz > 0.0))
        throw std::invalid_argument("dip_metric: need a spectrum with a real axis");
    if (!(f_a_hz < f_b_hz)) throw std::invalid_argument("dip_metric: need f_a < f_b");
    const double half = 0.5 * s.f_step_hz;
    if (f_a_hz < s.f_start_hz - half || f_b_hz > s.f_end_hz() + half)
        throw std::invalid_argument("dip_metric: tone frequencies fall off the axis");

    const double tiny = 1e-9;
    const long k_a = static_cast<long>(std::ceil((f_a_hz - s.f_start_hz) / s.f_step_hz - tiny));
    const long k_b = static_cast<long>(std::floor((f_b_hz - s.f_start_hz) / s.f_step_hz + tiny));
    if (k_b - k_a + 1 < 3)
        throw InsufficientResolutionError(
            "dip_metric: fewer than 3 bins between the tones; the axis cannot hold a "
            "valley at this separation");

    const std::size_t n = s.bins.size();
    std::vector<double> mags(n);
    for (std::size_t k = 0; k < n; ++k) mags[k] = std::abs(s.bins[k]);

    std::vector<std::size_t> maxima;
    for (std::size_t k = 0; k < n; ++k)
        if (is_local_max(mags, k)) maxima.push_back(k);

    DipMetric m;
    if (maxima.empty()) return m;  // monotone spectrum, nothing to resolve

    auto nearest = [&](double f) {
        std::size_t best = maxima.front();
        double best_d = std::abs(s.frequency(best) - f);
        for (std::size_t k : maxima) {
            const double d = std::abs(s.frequency(k) - f);
            if (d < best_d) {
                best_d = d;
                best = k;
            }
        }
        return best;
    };
    const std::size_t pa = nearest(f_a_hz);
    const std::size_t pb = nearest(f_b_hz);

    m.f_peak_a_hz = s.frequency(pa);
    m.peak_a_db = magnitude_db(mags[pa]);
    m.f_peak_b_hz = s.frequency(pb);
    m.peak_b_db = magnitude_db(mags[pb]);

    const std::size_t lo = std::min(pa, pb);
    const std::size_t hi = std::max(pa, pb);
    if (hi - lo <= 1) {  // tones merged onto one or two adjacent bins
        const std::size_t weaker = mags[pa] <= mags[pb] ? pa : pb;
        m.f_valley_hz = s.frequency(weaker);
        m.valley_db = magnitude_db(mags[weaker]);
        return m;
    }

    std::size_t v = lo + 1;
    for (std::size_t k = lo + 2; k < hi; ++k)
        if (mags[k] < mags[v]) v = k;
    m.f_valley_hz = s.frequency(v);
    m.valley_db = magnitude_db(mags[v]);

    const double weaker = std::min(mags[pa], mags[pb]);
    m.resolved = mags[v] < weaker;
    m.dip_db = mags[v] == 0.0 ? std::numeric_limits<double>::infinity()
                              : 20.0 * std::log10(weaker / mags[v]);
    return m;
}

ResolvabilityCurve resolvability_scan(const ScanConfig& cfg) {
    if (!(cfg.sample_rate_hz > 0.0))
        throw std::invalid_argument("resolvability_scan: sample rate must be positive");
    if (cfg.n < 2) throw std::invalid_argument("resolvability_scan: record too short");
    if (!(cfg.f1_hz >= 0.0) || !(cfg.f2_hz > cfg.f1_hz) ||
        cfg.f2_hz > cfg.sample_rate_hz / 2.0 * (1.0 + 1e-12))
        throw std::invalid_argument("resolvability_scan: band must satisfy 0 <= f1 < f2 <= fs/2");
    if (cfg.m < 2) throw std::invalid_argument("resolvability_scan: need at least 2 band bins");
    if (!(cfg.sep_start_hz > 0.0) || !(cfg.sep_step_hz > 0.0) ||
        cfg.sep_stop_hz < cfg.sep_start_hz)
        throw std::invalid_argument("resolvability_scan: bad separation sweep");

    const double center =
        cfg.center_hz > 0.0 ? cfg.center_hz : 0.5 * (cfg.f1_hz + cfg.f2_hz);
    if (center - cfg.sep_stop_hz / 2.0 < cfg.f1_hz ||
        center + cfg.sep_stop_hz / 2.0 > cfg.f2_hz)
        throw std::invalid_argument(
            "resolvability_scan: tone pair leaves the band at the widest separation");

    const double czt_step = (cfg.f2_hz - cfg.f1_hz) / static_cast<double>(cfg.m);
    const std::size_t fft_len =
        cfg.n + zeros_for_resolution(cfg.sample_rate_hz, cfg.n, czt_step);

    // one plan per route, reused across the sweep
    std::optional<FftPlan> pow2_plan;
    std::optional<CztPlan> full_plan;
    if (is_pow2(fft_len))
        pow2_plan.emplace(fft_len);
    else
        full_plan.emplace(fft_len, czt_params_for_band(0.0, cfg.sample_rate_hz,
                                                       cfg.sample_rate_hz, fft_len));
    CztPlan band_plan(cfg.n,
                      czt_params_for_band(cfg.f1_hz, cfg.f2_hz, cfg.sample_rate_hz, cfg.m));

    ResolvabilityCurve curve;
    curve.config = cfg;
    curve.config.center_hz = center;
    curve.fft_len = fft_len;
    curve.min_resolved_fft_hz = std::numeric_limits<double>::quiet_NaN();
    curve.min_resolved_czt_hz = std::numeric_limits<double>::quiet_NaN();

    for (std::size_t i = 0;; ++i) {
        const double sep = cfg.sep_start_hz + static_cast<double>(i) * cfg.sep_step_hz;
        if (sep > cfg.sep_stop_hz * (1.0 + 1e-12)) break;
        const double tone_a = center - sep / 2.0;
        const double tone_b = center + sep / 2.0;

        TwoToneSpec spec;
        spec.f_a_hz = tone_a;
        spec.f_b_hz = tone_b;
        spec.sample_rate_hz = cfg.sample_rate_hz;
        spec.n = cfg.n;
        const Trace trace = gen_two_tone(spec);

        ComplexBuffer x(trace.size());
        for (std::size_t k = 0; k < trace.size(); ++k) x[k] = cplx(trace.samples[k], 0.0);

        ComplexBuffer padded = zero_pad(x, fft_len);
        if (pow2_plan)
            pow2_plan->forward(padded);
        else
            padded = full_plan->execute(padded);
        Spectrum full;
        full.bins = std::move(padded);
        full.f_start_hz = 0.0;
        full.f_step_hz = cfg.sample_rate_hz / static_cast<double>(fft_len);
        full.source_n = fft_len;
        const Spectrum fft_band = slice_band(full, cfg.f1_hz, cfg.f2_hz);

        Spectrum czt_band;
        czt_band.bins = band_plan.execute(x);
        czt_band.f_start_hz = cfg.f1_hz;
        czt_band.f_step_hz = czt_step;
        czt_band.source_n = cfg.n;

        // A separation too tight for the axis to hold a valley is simply
        // unresolved at this grid, not an error of the sweep.
        const auto metric_or_unresolved = [&](const Spectrum& band) {
            try {
                return dip_metric(band, tone_a, tone_b);
            } catch (const InsufficientResolutionError&) {
                return DipMetric{};
            }
        };
        curve.separations_hz.push_back(sep);
        curve.fft_metrics.push_back(metric_or_unresolved(fft_band));
        curve.czt_metrics.push_back(metric_or_unresolved(czt_band));
    }

    for (std::size_t i = 0; i < curve.separations_hz.size(); ++i) {
        if (curve.fft_metrics[i].resolved && std::isnan(curve.min_resolved_fft_hz))
            curve.min_resolved_fft_hz = curve.separations_hz[i];
        if (curve.czt_metrics[i].resolved && std::isnan(curve.min_resolved_czt_hz))
            curve.min_resolved_czt_hz = curve.separations_hz[i];
    }
    return curve;
}

ComparisonReport compare_spectra(const Spectrum& a, const Spectrum& b, double f_lo_hz,
                                 double f_hi_hz) {
    if (a.bins.size() < 2 || b.bins.size() < 2 || !(a.f_step_hz > 0.0) ||
        !(b.f_step_hz > 0.0))
        throw std::invalid_argument("compare_spectra: both spectra need a real axis");
    double lo = std::max(a.f_start_hz, b.f_start_hz);
    double hi = std::min(a.f_end_hz(), b.f_end_hz());
    if (f_lo_hz > 0.0) lo = std::max(lo, f_lo_hz);
    if (f_hi_hz > 0.0) hi = std::min(hi, f_hi_hz);
    if (!(lo <= hi))
        throw std::invalid_argument("compare_spectra: the spectra share no band");

    ComparisonReport r;
    const double eps = 1e-9 * a.f_step_hz;
    double sum_sq = 0.0;
    for (std::size_t k = 0; k < a.bins.size(); ++k) {
        const double f = a.frequency(k);
        if (f < lo - eps || f > hi + eps) continue;
        double pos = (f - b.f_start_hz) / b.f_step_hz;
        std::size_t j;
        double frac;
        if (pos <= 0.0) {
            j = 0;
            frac = 0.0;
        } else if (pos >= static_cast<double>(b.bins.size() - 1)) {
            j = b.bins.size() - 2;
            frac = 1.0;
        } else {
            j = static_cast<std::size_t>(pos);
            frac = pos - static_cast<double>(j);
        }
        const double mag_b =
            std::abs(b.bins[j]) * (1.0 - frac) + std::abs(b.bins[j + 1]) * frac;
        const double da = magnitude_db(a.bins[k]);
        const double db = magnitude_db(mag_b);
        const double delta = da - db;

        r.freqs_hz.push_back(f);
        r.a_db.push_back(da);
        r.b_db.push_back(db);
        r.delta_db.push_back(delta);
        r.max_abs_db = std::max(r.max_abs_db, std::abs(delta));
        sum_sq += delta * delta;
    }
    r.n_points = r.freqs_hz.size();
    if (r.n_points == 0)
        throw std::invalid_argument("compare_spectra: no bins fall inside the band");
    r.rms_db = std::sqrt(sum_sq / static_cast<double>(r.n_points));
    r.f_lo_hz = r.freqs_hz.front();
    r.f_hi_hz = r.freqs_hz.back();
    return r;
}

}  // namespace spectral
