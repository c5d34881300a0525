#include "spectralkit.h"

#include <cmath>
#include <cstring>
#include <iostream>
#include <limits>
#include <new>
#include <stdexcept>
#include <string>

#include "analysis.hpp"
#include "bench.hpp"
#include "czt.hpp"
#include "errors.hpp"
#include "numerics.hpp"
#include "resolution.hpp"
#include "serialize.hpp"
#include "signals.hpp"
#include "spectra.hpp"
#include "types.hpp"
#include "zoomfft.hpp"

struct sk_trace {
    spectral::Trace t;
};
struct sk_spectrum {
    spectral::Spectrum s;
};
struct sk_zoom_plan {
    spectral::ZoomFftPlan p;
};
struct sk_resolvability_curve {
    spectral::ResolvabilityCurve c;
};
struct sk_comparison_report {
    spectral::ComparisonReport r;
};
struct sk_bench_report {
    spectral::BenchReport r;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* msg) { g_last_error = msg; }

template <typename Fn>
sk_status guarded(Fn&& fn) {
    try {
        fn();
        return SK_OK;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return SK_ERR_INVALID_ARGUMENT;
    } catch (const spectral::InsufficientResolutionError& e) {
        set_error(e.what());
        return SK_ERR_INSUFFICIENT_RESOLUTION;
    } catch (const spectral::ParseError& e) {
        set_error(e.what());
        return SK_ERR_PARSE;
    } catch (const spectral::FormatError& e) {
        set_error(e.what());
        return SK_ERR_FORMAT;
    } catch (const spectral::IoError& e) {
        set_error(e.what());
        return SK_ERR_IO;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return SK_ERR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return SK_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown error");
        return SK_ERR_INTERNAL;
    }
}

sk_status fail_arg(const char* msg) {
    set_error(msg);
    return SK_ERR_INVALID_ARGUMENT;
}

spectral::ComplexBuffer join(const double* re, const double* im, size_t n) {
    spectral::ComplexBuffer x(n);
    for (size_t i = 0; i < n; ++i) x[i] = spectral::cplx(re[i], im ? im[i] : 0.0);
    return x;
}

void split(const spectral::ComplexBuffer& x, double* re, double* im) {
    for (size_t i = 0; i < x.size(); ++i) {
        re[i] = x[i].real();
        im[i] = x[i].imag();
    }
}

bool is_stdio(const char* path) { return std::strcmp(path, "-") == 0; }

spectral::CztParams make_params(double a_re, double a_im, double w_re, double w_im,
                                size_t m) {
    spectral::CztParams p;
    p.a = spectral::cplx(a_re, a_im);
    p.w = spectral::cplx(w_re, w_im);
    p.m = m;
    return p;
}

void copy_metric(const spectral::DipMetric& m, sk_dip_metric* out) {
    out->resolved = m.resolved ? 1 : 0;
    out->dip_db = m.dip_db;
    out->f_peak_a_hz = m.f_peak_a_hz;
    out->peak_a_db = m.peak_a_db;
    out->f_peak_b_hz = m.f_peak_b_hz;
    out->peak_b_db = m.peak_b_db;
    out->f_valley_hz = m.f_valley_hz;
    out->valley_db = m.valley_db;
}

spectral::BenchConfig to_core(const sk_bench_config& c) {
    spectral::BenchConfig b;
    b.methods = c.methods;
    b.sample_rate_hz = c.sample_rate_hz;
    b.trace_len = c.trace_len;
    b.f1_hz = c.f1_hz;
    b.f2_hz = c.f2_hz;
    b.zoom_decimation = c.zoom_decimation;
    b.res_start_hz = c.res_start_hz;
    b.res_step_hz = c.res_step_hz;
    b.res_count = c.res_count;
    b.warmup = c.warmup;
    b.reps = c.reps;
    b.include_plan = c.include_plan != 0;
    b.pin_cpu = c.pin_cpu != 0;
    return b;
}

void copy_sizes(const spectral::BenchSizes& s, sk_bench_sizes* out) {
    out->record_len = s.record_len;
    out->fft_len = s.fft_len;
    out->czt_m = s.czt_m;
    out->czt_conv_len = s.czt_conv_len;
    out->zoom_decimation = s.zoom_decimation;
    out->zoom_n_fft = s.zoom_n_fft;
}

}  // namespace

extern "C" {

const char* sk_status_name(sk_status status) {
    switch (status) {
        case SK_OK: return "ok";
        case SK_ERR_INVALID_ARGUMENT: return "invalid argument";
        case SK_ERR_IO: return "io error";
        case SK_ERR_PARSE: return "parse error";
        case SK_ERR_FORMAT: return "format error";
        case SK_ERR_INSUFFICIENT_RESOLUTION: return "insufficient resolution";
        case SK_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* sk_last_error(void) { return g_last_error.c_str(); }

const char* sk_version(void) { return "0.1.0"; }

/* ---- raw transforms ---------------------------------------------------- */

sk_status sk_fft(double* re, double* im, size_t n) {
    if (!re || !im) return fail_arg("sk_fft: null buffer");
    return guarded([&] {
        spectral::ComplexBuffer x = join(re, im, n);
        x = spectral::fft(x);
        split(x, re, im);
    });
}

sk_status sk_ifft(double* re, double* im, size_t n) {
    if (!re || !im) return fail_arg("sk_ifft: null buffer");
    return guarded([&] {
        spectral::ComplexBuffer x = join(re, im, n);
        x = spectral::ifft(x);
        split(x, re, im);
    });
}

sk_status sk_dft_naive(const double* re, const double* im, size_t n, double* out_re,
                       double* out_im) {
    if (!re || !im || !out_re || !out_im) return fail_arg("sk_dft_naive: null buffer");
    return guarded([&] {
        const spectral::ComplexBuffer y = spectral::dft_naive(join(re, im, n));
        split(y, out_re, out_im);
    });
}

sk_status sk_czt(const double* re, const double* im, size_t n, double a_re, double a_im,
                 double w_re, double w_im, size_t m, double* out_re, double* out_im) {
    if (!re || !im || !out_re || !out_im) return fail_arg("sk_czt: null buffer");
    return guarded([&] {
        const spectral::ComplexBuffer y =
            spectral::czt(join(re, im, n), make_params(a_re, a_im, w_re, w_im, m));
        split(y, out_re, out_im);
    });
}

sk_status sk_czt_direct(const double* re, const double* im, size_t n, double a_re,
                        double a_im, double w_re, double w_im, size_t m, double* out_re,
                        double* out_im) {
    if (!re || !im || !out_re || !out_im) return fail_arg("sk_czt_direct: null buffer");
    return guarded([&] {
        const spectral::ComplexBuffer y =
            spectral::czt_direct(join(re, im, n), make_params(a_re, a_im, w_re, w_im, m));
        split(y, out_re, out_im);
    });
}

sk_status sk_czt_params_for_band(double f1_hz, double f2_hz, double sample_rate_hz,
                                 size_t m, double* a_re, double* a_im, double* w_re,
                                 double* w_im) {
    if (!a_re || !a_im || !w_re || !w_im)
        return fail_arg("sk_czt_params_for_band: null output");
    return guarded([&] {
        const spectral::CztParams p =
            spectral::czt_params_for_band(f1_hz, f2_hz, sample_rate_hz, m);
        *a_re = p.a.real();
        *a_im = p.a.imag();
        *w_re = p.w.real();
        *w_im = p.w.imag();
    });
}

/* ---- sizing helpers ---------------------------------------------------- */

size_t sk_next_pow2(size_t n) { return spectral::next_pow2(n == 0 ? 1 : n); }

sk_status sk_fft_resolution(double sample_rate_hz, size_t n, double* out_hz) {
    if (!out_hz) return fail_arg("sk_fft_resolution: null output");
    return guarded([&] { *out_hz = spectral::fft_resolution(sample_rate_hz, n); });
}

sk_status sk_record_len_for_step(double sample_rate_hz, double target_step_hz,
                                 size_t* out_len) {
    if (!out_len) return fail_arg("sk_record_len_for_step: null output");
    return guarded(
        [&] { *out_len = spectral::record_len_for_step(sample_rate_hz, target_step_hz); });
}

sk_status sk_zeros_for_resolution(double sample_rate_hz, size_t n, double target_step_hz,
                                  size_t* out_zeros) {
    if (!out_zeros) return fail_arg("sk_zeros_for_resolution: null output");
    return guarded([&] {
        *out_zeros = spectral::zeros_for_resolution(sample_rate_hz, n, target_step_hz);
    });
}

sk_status sk_czt_len_for_matched_resolution(double f1_hz, double f2_hz,
                                            double sample_rate_hz, size_t n_fft,
                                            size_t* out_m) {
    if (!out_m) return fail_arg("sk_czt_len_for_matched_resolution: null output");
    return guarded([&] {
        *out_m =
            spectral::czt_len_for_matched_resolution(f1_hz, f2_hz, sample_rate_hz, n_fft);
    });
}

/* ---- traces ------------------------------------------------------------ */

sk_status sk_trace_create(const double* samples, size_t n, double sample_rate_hz,
                          double t0_s, sk_trace** out) {
    if (!samples || !out) return fail_arg("sk_trace_create: null argument");
    return guarded([&] {
        auto* h = new sk_trace;
        h->t.samples.assign(samples, samples + n);
        h->t.sample_rate_hz = sample_rate_hz;
        h->t.t0_s = t0_s;
        try {
            spectral::validate_trace(h->t);
        } catch (...) {
            delete h;
            throw;
        }
        *out = h;
    });
}

void sk_trace_free(sk_trace* t) { delete t; }

size_t sk_trace_size(const sk_trace* t) { return t ? t->t.size() : 0; }

double sk_trace_sample_rate(const sk_trace* t) { return t ? t->t.sample_rate_hz : 0.0; }

double sk_trace_t0(const sk_trace* t) { return t ? t->t.t0_s : 0.0; }

const double* sk_trace_samples(const sk_trace* t) {
    return t ? t->t.samples.data() : nullptr;
}

sk_status sk_trace_slice(const sk_trace* t, size_t offset, size_t count, sk_trace** out) {
    if (!t || !out) return fail_arg("sk_trace_slice: null argument");
    return guarded([&] {
        if (count == 0 || offset > t->t.size() || count > t->t.size() - offset)
            throw std::invalid_argument("sk_trace_slice: window leaves the record");
        auto* h = new sk_trace;
        h->t.samples.assign(t->t.samples.begin() + static_cast<long>(offset),
                            t->t.samples.begin() + static_cast<long>(offset + count));
        h->t.sample_rate_hz = t->t.sample_rate_hz;
        h->t.t0_s = t->t.t0_s + static_cast<double>(offset) / t->t.sample_rate_hz;
        *out = h;
    });
}

sk_status sk_trace_add(const sk_trace* a, const sk_trace* b, sk_trace** out) {
    if (!a || !b || !out) return fail_arg("sk_trace_add: null argument");
    return guarded([&] {
        if (a->t.size() != b->t.size())
            throw std::invalid_argument("sk_trace_add: length mismatch");
        if (std::abs(a->t.sample_rate_hz - b->t.sample_rate_hz) >
            1e-9 * a->t.sample_rate_hz)
            throw std::invalid_argument("sk_trace_add: sample rate mismatch");
        auto* h = new sk_trace;
        h->t = a->t;
        for (size_t i = 0; i < h->t.samples.size(); ++i)
            h->t.samples[i] += b->t.samples[i];
        *out = h;
    });
}

sk_status sk_trace_with_noise(const sk_trace* t, double std_dev, uint64_t seed,
                              sk_trace** out) {
    if (!t || !out) return fail_arg("sk_trace_with_noise: null argument");
    return guarded([&] { *out = new sk_trace{spectral::add_noise(t->t, std_dev, seed)}; });
}

void sk_two_tone_spec_defaults(sk_two_tone_spec* spec) {
    if (!spec) return;
    const spectral::TwoToneSpec d;
    spec->f_a_hz = d.f_a_hz;
    spec->f_b_hz = d.f_b_hz;
    spec->amp_a = d.amp_a;
    spec->amp_b = d.amp_b;
    spec->phase_a_rad = d.phase_a_rad;
    spec->phase_b_rad = d.phase_b_rad;
    spec->sample_rate_hz = d.sample_rate_hz;
    spec->n = d.n;
}

sk_status sk_gen_two_tone(const sk_two_tone_spec* spec, sk_trace** out) {
    if (!spec || !out) return fail_arg("sk_gen_two_tone: null argument");
    return guarded([&] {
        spectral::TwoToneSpec s;
        s.f_a_hz = spec->f_a_hz;
        s.f_b_hz = spec->f_b_hz;
        s.amp_a = spec->amp_a;
        s.amp_b = spec->amp_b;
        s.phase_a_rad = spec->phase_a_rad;
        s.phase_b_rad = spec->phase_b_rad;
        s.sample_rate_hz = spec->sample_rate_hz;
        s.n = spec->n;
        *out = new sk_trace{spectral::gen_two_tone(s)};
    });
}

void sk_thz_pulse_spec_defaults(sk_thz_pulse_spec* spec) {
    if (!spec) return;
    const spectral::ThzPulseSpec d;
    spec->pulse_width_s = d.pulse_width_s;
    spec->center_time_s = d.center_time_s;
    spec->amplitude = d.amplitude;
    spec->sample_rate_hz = d.sample_rate_hz;
    spec->n = d.n;
    spec->model = SK_PULSE_GAUSSIAN_DERIVATIVE;
}

sk_status sk_gen_thz_pulse(const sk_thz_pulse_spec* spec, sk_trace** out) {
    if (!spec || !out) return fail_arg("sk_gen_thz_pulse: null argument");
    return guarded([&] {
        spectral::ThzPulseSpec s;
        s.pulse_width_s = spec->pulse_width_s;
        s.center_time_s = spec->center_time_s;
        s.amplitude = spec->amplitude;
        s.sample_rate_hz = spec->sample_rate_hz;
        s.n = spec->n;
        s.model = spec->model == SK_PULSE_DOUBLE_EXPONENTIAL
                      ? spectral::PulseModel::double_exponential
                      : spectral::PulseModel::gaussian_derivative;
        *out = new sk_trace{spectral::gen_thz_pulse(s)};
    });
}

sk_status sk_trace_read_csv(const char* path, sk_trace** out) {
    if (!path || !out) return fail_arg("sk_trace_read_csv: null argument");
    return guarded([&] {
        spectral::Trace t = is_stdio(path) ? spectral::read_trace_csv(std::cin, "stdin")
                                           : spectral::read_trace_csv_file(path);
        *out = new sk_trace{std::move(t)};
    });
}

sk_status sk_trace_write_csv(const sk_trace* t, const char* path) {
    if (!t || !path) return fail_arg("sk_trace_write_csv: null argument");
    return guarded([&] {
        if (is_stdio(path))
            spectral::write_trace_csv(t->t, std::cout);
        else
            spectral::write_trace_csv_file(t->t, path);
    });
}

/* ---- spectra ----------------------------------------------------------- */

sk_status sk_fft_spectrum(const sk_trace* t, size_t transform_len, sk_spectrum** out) {
    if (!t || !out) return fail_arg("sk_fft_spectrum: null argument");
    return guarded(
        [&] { *out = new sk_spectrum{spectral::fft_spectrum(t->t, transform_len)}; });
}

sk_status sk_czt_spectrum(const sk_trace* t, double f1_hz, double f2_hz, size_t m,
                          sk_spectrum** out) {
    if (!t || !out) return fail_arg("sk_czt_spectrum: null argument");
    return guarded(
        [&] { *out = new sk_spectrum{spectral::czt_spectrum(t->t, f1_hz, f2_hz, m)}; });
}

sk_status sk_spectrum_create(const double* re, const double* im, size_t n,
                             double f_start_hz, double f_step_hz, sk_spectrum** out) {
    if (!re || !out) return fail_arg("sk_spectrum_create: null argument");
    return guarded([&] {
        if (n == 0) throw std::invalid_argument("sk_spectrum_create: empty spectrum");
        if (!(f_step_hz >= 0.0))
            throw std::invalid_argument("sk_spectrum_create: negative step");
        auto* h = new sk_spectrum;
        h->s.bins = join(re, im, n);
        h->s.f_start_hz = f_start_hz;
        h->s.f_step_hz = f_step_hz;
        h->s.source_n = n;
        *out = h;
    });
}

void sk_spectrum_free(sk_spectrum* s) { delete s; }

size_t sk_spectrum_size(const sk_spectrum* s) { return s ? s->s.size() : 0; }

double sk_spectrum_f_start(const sk_spectrum* s) { return s ? s->s.f_start_hz : 0.0; }

double sk_spectrum_f_step(const sk_spectrum* s) { return s ? s->s.f_step_hz : 0.0; }

double sk_spectrum_frequency(const sk_spectrum* s, size_t k) {
    return s ? s->s.frequency(k) : 0.0;
}

size_t sk_spectrum_source_n(const sk_spectrum* s) { return s ? s->s.source_n : 0; }

sk_status sk_spectrum_bin(const sk_spectrum* s, size_t k, double* re, double* im) {
    if (!s || !re || !im) return fail_arg("sk_spectrum_bin: null argument");
    if (k >= s->s.size()) return fail_arg("sk_spectrum_bin: index out of range");
    *re = s->s.bins[k].real();
    *im = s->s.bins[k].imag();
    return SK_OK;
}

sk_status sk_spectrum_magnitude_db(const sk_spectrum* s, size_t k, double* out_db) {
    if (!s || !out_db) return fail_arg("sk_spectrum_magnitude_db: null argument");
    if (k >= s->s.size()) return fail_arg("sk_spectrum_magnitude_db: index out of range");
    *out_db = spectral::magnitude_db(s->s.bins[k]);
    return SK_OK;
}

sk_status sk_spectrum_copy_data(const sk_spectrum* s, double* re, double* im) {
    if (!s || !re || !im) return fail_arg("sk_spectrum_copy_data: null argument");
    split(s->s.bins, re, im);
    return SK_OK;
}

sk_status sk_spectrum_slice_band(const sk_spectrum* s, double f_lo_hz, double f_hi_hz,
                                 sk_spectrum** out) {
    if (!s || !out) return fail_arg("sk_spectrum_slice_band: null argument");
    return guarded(
        [&] { *out = new sk_spectrum{spectral::slice_band(s->s, f_lo_hz, f_hi_hz)}; });
}

sk_status sk_spectrum_read_csv(const char* path, sk_spectrum** out) {
    if (!path || !out) return fail_arg("sk_spectrum_read_csv: null argument");
    return guarded([&] {
        spectral::Spectrum s = is_stdio(path)
                                   ? spectral::read_spectrum_csv(std::cin, "stdin")
                                   : spectral::read_spectrum_csv_file(path);
        *out = new sk_spectrum{std::move(s)};
    });
}

sk_status sk_spectrum_write_csv(const sk_spectrum* s, const char* path) {
    if (!s || !path) return fail_arg("sk_spectrum_write_csv: null argument");
    return guarded([&] {
        if (is_stdio(path))
            spectral::write_spectrum_csv(s->s, std::cout);
        else
            spectral::write_spectrum_csv_file(s->s, path);
    });
}

sk_status sk_spectrum_write_json(const sk_spectrum* s, const char* path) {
    if (!s || !path) return fail_arg("sk_spectrum_write_json: null argument");
    return guarded([&] {
        if (is_stdio(path))
            spectral::write_spectrum_json(s->s, std::cout);
        else
            spectral::write_spectrum_json_file(s->s, path);
    });
}

/* ---- zoom pipeline ----------------------------------------------------- */

void sk_zoom_options_defaults(sk_zoom_options* opts) {
    if (!opts) return;
    const spectral::ZoomOptions d;
    opts->center_hz = d.center_hz;
    opts->center_set = d.center_set ? 1 : 0;
    opts->decimation = d.decimation;
    opts->cutoff_hz = d.cutoff_hz;
    opts->num_taps = d.num_taps;
    opts->circular = d.circular ? 1 : 0;
    opts->trim_transient = d.trim_transient ? 1 : 0;
    opts->pad_pow2 = d.pad_pow2 ? 1 : 0;
}

sk_status sk_zoom_plan_create(size_t input_len, double f1_hz, double f2_hz,
                              double sample_rate_hz, const sk_zoom_options* opts,
                              sk_zoom_plan** out) {
    if (!out) return fail_arg("sk_zoom_plan_create: null output");
    return guarded([&] {
        spectral::ZoomOptions o;
        if (opts) {
            o.center_hz = opts->center_hz;
            o.center_set = opts->center_set != 0;
            o.decimation = opts->decimation;
            o.cutoff_hz = opts->cutoff_hz;
            o.num_taps = opts->num_taps;
            o.circular = opts->circular != 0;
            o.trim_transient = opts->trim_transient != 0;
            o.pad_pow2 = opts->pad_pow2 != 0;
        }
        *out = new sk_zoom_plan{
            spectral::make_zoom_plan(input_len, f1_hz, f2_hz, sample_rate_hz, o)};
    });
}

void sk_zoom_plan_free(sk_zoom_plan* p) { delete p; }

size_t sk_zoom_plan_decimation(const sk_zoom_plan* p) { return p ? p->p.decimation : 0; }

size_t sk_zoom_plan_n_fft(const sk_zoom_plan* p) { return p ? p->p.n_fft : 0; }

size_t sk_zoom_plan_filter_len(const sk_zoom_plan* p) {
    return p ? p->p.filter_taps.size() : 0;
}

double sk_zoom_plan_f_step(const sk_zoom_plan* p) { return p ? p->p.f_step_hz() : 0.0; }

sk_status sk_zoom_spectrum(const sk_zoom_plan* p, const sk_trace* t, sk_spectrum** out) {
    if (!p || !t || !out) return fail_arg("sk_zoom_spectrum: null argument");
    return guarded([&] { *out = new sk_spectrum{spectral::zoom_fft(p->p, t->t)}; });
}

/* ---- two-tone analysis ------------------------------------------------- */

sk_status sk_dip_metric_compute(const sk_spectrum* s, double f_a_hz, double f_b_hz,
                                sk_dip_metric* out) {
    if (!s || !out) return fail_arg("sk_dip_metric_compute: null argument");
    return guarded([&] { copy_metric(spectral::dip_metric(s->s, f_a_hz, f_b_hz), out); });
}

void sk_scan_config_defaults(sk_scan_config* cfg) {
    if (!cfg) return;
    const spectral::ScanConfig d;
    cfg->sample_rate_hz = d.sample_rate_hz;
    cfg->n = d.n;
    cfg->f1_hz = d.f1_hz;
    cfg->f2_hz = d.f2_hz;
    cfg->m = d.m;
    cfg->center_hz = d.center_hz;
    cfg->sep_start_hz = d.sep_start_hz;
    cfg->sep_stop_hz = d.sep_stop_hz;
    cfg->sep_step_hz = d.sep_step_hz;
}

sk_status sk_resolvability_scan(const sk_scan_config* cfg, sk_resolvability_curve** out) {
    if (!cfg || !out) return fail_arg("sk_resolvability_scan: null argument");
    return guarded([&] {
        spectral::ScanConfig c;
        c.sample_rate_hz = cfg->sample_rate_hz;
        c.n = cfg->n;
        c.f1_hz = cfg->f1_hz;
        c.f2_hz = cfg->f2_hz;
        c.m = cfg->m;
        c.center_hz = cfg->center_hz;
        c.sep_start_hz = cfg->sep_start_hz;
        c.sep_stop_hz = cfg->sep_stop_hz;
        c.sep_step_hz = cfg->sep_step_hz;
        *out = new sk_resolvability_curve{spectral::resolvability_scan(c)};
    });
}

void sk_resolvability_curve_free(sk_resolvability_curve* c) { delete c; }

size_t sk_resolvability_curve_size(const sk_resolvability_curve* c) {
    return c ? c->c.separations_hz.size() : 0;
}

sk_status sk_resolvability_curve_point(const sk_resolvability_curve* c, size_t i,
                                       double* separation_hz, sk_dip_metric* fft_m,
                                       sk_dip_metric* czt_m) {
    if (!c) return fail_arg("sk_resolvability_curve_point: null curve");
    if (i >= c->c.separations_hz.size())
        return fail_arg("sk_resolvability_curve_point: index out of range");
    if (separation_hz) *separation_hz = c->c.separations_hz[i];
    if (fft_m) copy_metric(c->c.fft_metrics[i], fft_m);
    if (czt_m) copy_metric(c->c.czt_metrics[i], czt_m);
    return SK_OK;
}

double sk_resolvability_min_fft(const sk_resolvability_curve* c) {
    return c ? c->c.min_resolved_fft_hz : std::numeric_limits<double>::quiet_NaN();
}

double sk_resolvability_min_czt(const sk_resolvability_curve* c) {
    return c ? c->c.min_resolved_czt_hz : std::numeric_limits<double>::quiet_NaN();
}

sk_status sk_resolvability_write_csv(const sk_resolvability_curve* c, const char* path) {
    if (!c || !path) return fail_arg("sk_resolvability_write_csv: null argument");
    return guarded([&] {
        if (is_stdio(path))
            spectral::write_resolvability_csv(c->c, std::cout);
        else
            spectral::write_resolvability_csv_file(c->c, path);
    });
}

sk_status sk_resolvability_write_json(const sk_resolvability_curve* c, const char* path) {
    if (!c || !path) return fail_arg("sk_resolvability_write_json: null argument");
    return guarded([&] {
        if (is_stdio(path))
            spectral::write_resolvability_json(c->c, std::cout);
        else
            spectral::write_resolvability_json_file(c->c, path);
    });
}

/* ---- spectrum comparison ----------------------------------------------- */

sk_status sk_compare_spectra(const sk_spectrum* a, const sk_spectrum* b, double f_lo_hz,
                             double f_hi_hz, sk_comparison_report** out) {
    if (!a || !b || !out) return fail_arg("sk_compare_spectra: null argument");
    return guarded([&] {
        *out = new sk_comparison_report{
            spectral::compare_spectra(a->s, b->s, f_lo_hz, f_hi_hz)};
    });
}

void sk_comparison_report_free(sk_comparison_report* r) { delete r; }

double sk_comparison_max_abs_db(const sk_comparison_report* r) {
    return r ? r->r.max_abs_db : std::numeric_limits<double>::quiet_NaN();
}

double sk_comparison_rms_db(const sk_comparison_report* r) {
    return r ? r->r.rms_db : std::numeric_limits<double>::quiet_NaN();
}

size_t sk_comparison_n_points(const sk_comparison_report* r) {
    return r ? r->r.n_points : 0;
}

sk_status sk_comparison_band(const sk_comparison_report* r, double* f_lo_hz,
                             double* f_hi_hz) {
    if (!r || !f_lo_hz || !f_hi_hz) return fail_arg("sk_comparison_band: null argument");
    *f_lo_hz = r->r.f_lo_hz;
    *f_hi_hz = r->r.f_hi_hz;
    return SK_OK;
}

sk_status sk_comparison_write_csv(const sk_comparison_report* r, const char* path) {
    if (!r || !path) return fail_arg("sk_comparison_write_csv: null argument");
    return guarded([&] {
        if (is_stdio(path))
            spectral::write_comparison_csv(r->r, std::cout);
        else
            spectral::write_comparison_csv_file(r->r, path);
    });
}

sk_status sk_comparison_write_json(const sk_comparison_report* r, const char* path) {
    if (!r || !path) return fail_arg("sk_comparison_write_json: null argument");
    return guarded([&] {
        if (is_stdio(path))
            spectral::write_comparison_json(r->r, std::cout);
        else
            spectral::write_comparison_json_file(r->r, path);
    });
}

/* ---- timing ------------------------------------------------------------ */

void sk_bench_config_defaults(sk_bench_config* cfg) {
    if (!cfg) return;
    const spectral::BenchConfig d;
    cfg->methods = d.methods;
    cfg->sample_rate_hz = d.sample_rate_hz;
    cfg->trace_len = d.trace_len;
    cfg->f1_hz = d.f1_hz;
    cfg->f2_hz = d.f2_hz;
    cfg->zoom_decimation = d.zoom_decimation;
    cfg->res_start_hz = d.res_start_hz;
    cfg->res_step_hz = d.res_step_hz;
    cfg->res_count = d.res_count;
    cfg->warmup = d.warmup;
    cfg->reps = d.reps;
    cfg->include_plan = d.include_plan ? 1 : 0;
    cfg->pin_cpu = d.pin_cpu ? 1 : 0;
}

sk_status sk_bench_sizes_compute(const sk_bench_config* cfg, double resolution_hz,
                                 sk_bench_sizes* out) {
    if (!cfg || !out) return fail_arg("sk_bench_sizes_compute: null argument");
    return guarded(
        [&] { copy_sizes(spectral::bench_sizes(to_core(*cfg), resolution_hz), out); });
}

sk_status sk_theoretical_cost(unsigned method, const sk_bench_sizes* sizes, double* out) {
    if (!sizes || !out) return fail_arg("sk_theoretical_cost: null argument");
    return guarded([&] {
        spectral::BenchSizes s;
        s.record_len = sizes->record_len;
        s.fft_len = sizes->fft_len;
        s.czt_m = sizes->czt_m;
        s.czt_conv_len = sizes->czt_conv_len;
        s.zoom_decimation = sizes->zoom_decimation;
        s.zoom_n_fft = sizes->zoom_n_fft;
        *out = spectral::theoretical_cost(static_cast<spectral::BenchMethod>(method), s);
    });
}

sk_status sk_run_bench(const sk_bench_config* cfg, sk_bench_report** out) {
    if (!cfg || !out) return fail_arg("sk_run_bench: null argument");
    return guarded(
        [&] { *out = new sk_bench_report{spectral::run_bench(to_core(*cfg))}; });
}

void sk_bench_report_free(sk_bench_report* r) { delete r; }

size_t sk_bench_report_size(const sk_bench_report* r) {
    return r ? r->r.points.size() : 0;
}

sk_status sk_bench_report_point(const sk_bench_report* r, size_t i, sk_bench_point* out) {
    if (!r || !out) return fail_arg("sk_bench_report_point: null argument");
    if (i >= r->r.points.size()) return fail_arg("sk_bench_report_point: index out of range");
    const spectral::BenchPoint& p = r->r.points[i];
    out->method = static_cast<unsigned>(p.method);
    out->resolution_hz = p.resolution_hz;
    copy_sizes(p.sizes, &out->sizes);
    out->reps = p.reps;
    out->mean_us = p.mean_us;
    out->median_us = p.median_us;
    out->p95_us = p.p95_us;
    out->min_us = p.min_us;
    out->normalized = p.normalized;
    out->theoretical = p.theoretical;
    return SK_OK;
}

const char* sk_bench_report_environment(const sk_bench_report* r) {
    return r ? r->r.environment.c_str() : "";
}

sk_status sk_bench_report_write_json(const sk_bench_report* r, const char* path) {
    if (!r || !path) return fail_arg("sk_bench_report_write_json: null argument");
    return guarded([&] {
        if (is_stdio(path))
            spectral::write_bench_json(r->r, std::cout);
        else
            spectral::write_bench_json_file(r->r, path);
    });
}

sk_status sk_bench_report_write_csv(const sk_bench_report* r, const char* path) {
    if (!r || !path) return fail_arg("sk_bench_report_write_csv: null argument");
    return guarded([&] {
        if (is_stdio(path))
            spectral::write_bench_csv(r->r, std::cout);
        else
            spectral::write_bench_csv_file(r->r, path);
    });
}

}  // extern "C"
