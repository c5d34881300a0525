/* spectralkit: band-limited spectral transforms for pulsed time-domain data.
 *
 * C interface to the transform library.  All functions returning sk_status
 * report SK_OK on success; on failure sk_last_error() describes the problem
 * (thread-local storage, valid until the next failing call on that thread).
 * Objects created through sk_*_create / sk_gen_* / sk_*_read_* calls are
 * released with the matching sk_*_free; handles are never shared between
 * create calls.  File path arguments accept "-" for stdin/stdout.
 */
#ifndef SPECTRALKIT_H
#define SPECTRALKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SPECTRALKIT_BUILD)
#define SK_API __declspec(dllexport)
#else
#define SK_API __declspec(dllimport)
#endif
#else
#define SK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sk_status {
    SK_OK = 0,
    SK_ERR_INVALID_ARGUMENT = 1,
    SK_ERR_IO = 2,
    SK_ERR_PARSE = 3,
    SK_ERR_FORMAT = 4,
    SK_ERR_INSUFFICIENT_RESOLUTION = 5,
    SK_ERR_INTERNAL = 6
} sk_status;

SK_API const char* sk_status_name(sk_status status);
SK_API const char* sk_last_error(void);
SK_API const char* sk_version(void);

/* ---- raw transforms on split re/im arrays ------------------------------ */

/* In-place radix-2 transform; n must be a power of two. */
SK_API sk_status sk_fft(double* re, double* im, size_t n);
SK_API sk_status sk_ifft(double* re, double* im, size_t n);

/* Direct O(n^2) evaluation of the transform sum; the reference route. */
SK_API sk_status sk_dft_naive(const double* re, const double* im, size_t n,
                              double* out_re, double* out_im);

/* Chirp transform: m points z_k = a * w^-k starting at a with ratio w.
 * sk_czt runs the fast convolution route, sk_czt_direct the O(n*m) sum. */
SK_API sk_status sk_czt(const double* re, const double* im, size_t n, double a_re,
                        double a_im, double w_re, double w_im, size_t m, double* out_re,
                        double* out_im);
SK_API sk_status sk_czt_direct(const double* re, const double* im, size_t n, double a_re,
                               double a_im, double w_re, double w_im, size_t m,
                               double* out_re, double* out_im);

/* Start/ratio pair covering [f1, f2] with m points at sample rate fs. */
SK_API sk_status sk_czt_params_for_band(double f1_hz, double f2_hz, double sample_rate_hz,
                                        size_t m, double* a_re, double* a_im, double* w_re,
                                        double* w_im);

/* ---- sizing helpers ---------------------------------------------------- */

SK_API size_t sk_next_pow2(size_t n);
SK_API sk_status sk_fft_resolution(double sample_rate_hz, size_t n, double* out_hz);
SK_API sk_status sk_record_len_for_step(double sample_rate_hz, double target_step_hz,
                                        size_t* out_len);
SK_API sk_status sk_zeros_for_resolution(double sample_rate_hz, size_t n,
                                         double target_step_hz, size_t* out_zeros);
SK_API sk_status sk_czt_len_for_matched_resolution(double f1_hz, double f2_hz,
                                                   double sample_rate_hz, size_t n_fft,
                                                   size_t* out_m);

/* ---- time-domain traces ------------------------------------------------ */

typedef struct sk_trace sk_trace;

SK_API sk_status sk_trace_create(const double* samples, size_t n, double sample_rate_hz,
                                 double t0_s, sk_trace** out);
SK_API void sk_trace_free(sk_trace* t);
SK_API size_t sk_trace_size(const sk_trace* t);
SK_API double sk_trace_sample_rate(const sk_trace* t);
SK_API double sk_trace_t0(const sk_trace* t);
SK_API const double* sk_trace_samples(const sk_trace* t);

/* Keep count samples starting at offset. */
SK_API sk_status sk_trace_slice(const sk_trace* t, size_t offset, size_t count,
                                sk_trace** out);
/* Sample-wise sum; lengths and rates must match. */
SK_API sk_status sk_trace_add(const sk_trace* a, const sk_trace* b, sk_trace** out);
/* Add white Gaussian noise with the given deviation; deterministic per seed. */
SK_API sk_status sk_trace_with_noise(const sk_trace* t, double std_dev, uint64_t seed,
                                     sk_trace** out);

typedef struct sk_two_tone_spec {
    double f_a_hz;
    double f_b_hz;
    double amp_a;
    double amp_b;
    double phase_a_rad;
    double phase_b_rad;
    double sample_rate_hz;
    size_t n;
} sk_two_tone_spec;

SK_API void sk_two_tone_spec_defaults(sk_two_tone_spec* spec);
SK_API sk_status sk_gen_two_tone(const sk_two_tone_spec* spec, sk_trace** out);

typedef enum sk_pulse_model {
    SK_PULSE_GAUSSIAN_DERIVATIVE = 0,
    SK_PULSE_DOUBLE_EXPONENTIAL = 1
} sk_pulse_model;

typedef struct sk_thz_pulse_spec {
    double pulse_width_s;
    double center_time_s;
    double amplitude;
    double sample_rate_hz;
    size_t n;
    sk_pulse_model model;
} sk_thz_pulse_spec;

SK_API void sk_thz_pulse_spec_defaults(sk_thz_pulse_spec* spec);
SK_API sk_status sk_gen_thz_pulse(const sk_thz_pulse_spec* spec, sk_trace** out);

/* CSV: time_s,amplitude rows with an optional header; step must be uniform. */
SK_API sk_status sk_trace_read_csv(const char* path, sk_trace** out);
SK_API sk_status sk_trace_write_csv(const sk_trace* t, const char* path);

/* ---- spectra ----------------------------------------------------------- */

typedef struct sk_spectrum sk_spectrum;

/* transform_len = 0 pads to the next power of two; otherwise the exact
 * length is honored (non power-of-two lengths use the chirp identity). */
SK_API sk_status sk_fft_spectrum(const sk_trace* t, size_t transform_len,
                                 sk_spectrum** out);
/* m band bins on [f1, f2]; axis starts at f1 with step (f2-f1)/m. */
SK_API sk_status sk_czt_spectrum(const sk_trace* t, double f1_hz, double f2_hz, size_t m,
                                 sk_spectrum** out);
SK_API sk_status sk_spectrum_create(const double* re, const double* im, size_t n,
                                    double f_start_hz, double f_step_hz, sk_spectrum** out);
SK_API void sk_spectrum_free(sk_spectrum* s);

SK_API size_t sk_spectrum_size(const sk_spectrum* s);
SK_API double sk_spectrum_f_start(const sk_spectrum* s);
SK_API double sk_spectrum_f_step(const sk_spectrum* s);
SK_API double sk_spectrum_frequency(const sk_spectrum* s, size_t k);
SK_API size_t sk_spectrum_source_n(const sk_spectrum* s);
SK_API sk_status sk_spectrum_bin(const sk_spectrum* s, size_t k, double* re, double* im);
SK_API sk_status sk_spectrum_magnitude_db(const sk_spectrum* s, size_t k, double* out_db);
/* Bulk copy into caller arrays of sk_spectrum_size() entries. */
SK_API sk_status sk_spectrum_copy_data(const sk_spectrum* s, double* re, double* im);
SK_API sk_status sk_spectrum_slice_band(const sk_spectrum* s, double f_lo_hz,
                                        double f_hi_hz, sk_spectrum** out);

/* CSV: frequency_hz,re,im,magnitude_db. */
SK_API sk_status sk_spectrum_read_csv(const char* path, sk_spectrum** out);
SK_API sk_status sk_spectrum_write_csv(const sk_spectrum* s, const char* path);
SK_API sk_status sk_spectrum_write_json(const sk_spectrum* s, const char* path);

/* ---- zoom pipeline ----------------------------------------------------- */

typedef struct sk_zoom_options {
    double center_hz;     /* ignored unless center_set */
    int center_set;
    size_t decimation;    /* 0 = derive from the band */
    double cutoff_hz;     /* 0 = derive */
    size_t num_taps;      /* 0 = derive; otherwise odd */
    int circular;         /* wrap the record ends (default on) */
    int trim_transient;   /* linear mode only */
    int pad_pow2;         /* pad the short transform to a power of two */
} sk_zoom_options;

SK_API void sk_zoom_options_defaults(sk_zoom_options* opts);

typedef struct sk_zoom_plan sk_zoom_plan;

SK_API sk_status sk_zoom_plan_create(size_t input_len, double f1_hz, double f2_hz,
                                     double sample_rate_hz, const sk_zoom_options* opts,
                                     sk_zoom_plan** out);
SK_API void sk_zoom_plan_free(sk_zoom_plan* p);
SK_API size_t sk_zoom_plan_decimation(const sk_zoom_plan* p);
SK_API size_t sk_zoom_plan_n_fft(const sk_zoom_plan* p);
SK_API size_t sk_zoom_plan_filter_len(const sk_zoom_plan* p);
SK_API double sk_zoom_plan_f_step(const sk_zoom_plan* p);

SK_API sk_status sk_zoom_spectrum(const sk_zoom_plan* p, const sk_trace* t,
                                  sk_spectrum** out);

/* ---- two-tone analysis ------------------------------------------------- */

typedef struct sk_dip_metric {
    int resolved;
    double dip_db;
    double f_peak_a_hz;
    double peak_a_db;
    double f_peak_b_hz;
    double peak_b_db;
    double f_valley_hz;
    double valley_db;
} sk_dip_metric;

SK_API sk_status sk_dip_metric_compute(const sk_spectrum* s, double f_a_hz, double f_b_hz,
                                       sk_dip_metric* out);

typedef struct sk_scan_config {
    double sample_rate_hz;
    size_t n;
    double f1_hz;
    double f2_hz;
    size_t m;
    double center_hz;  /* 0 = band midpoint */
    double sep_start_hz;
    double sep_stop_hz;
    double sep_step_hz;
} sk_scan_config;

SK_API void sk_scan_config_defaults(sk_scan_config* cfg);

typedef struct sk_resolvability_curve sk_resolvability_curve;

SK_API sk_status sk_resolvability_scan(const sk_scan_config* cfg,
                                       sk_resolvability_curve** out);
SK_API void sk_resolvability_curve_free(sk_resolvability_curve* c);
SK_API size_t sk_resolvability_curve_size(const sk_resolvability_curve* c);
SK_API sk_status sk_resolvability_curve_point(const sk_resolvability_curve* c, size_t i,
                                              double* separation_hz, sk_dip_metric* fft_m,
                                              sk_dip_metric* czt_m);
/* NaN when no separation resolved on that route. */
SK_API double sk_resolvability_min_fft(const sk_resolvability_curve* c);
SK_API double sk_resolvability_min_czt(const sk_resolvability_curve* c);
SK_API sk_status sk_resolvability_write_csv(const sk_resolvability_curve* c,
                                            const char* path);
SK_API sk_status sk_resolvability_write_json(const sk_resolvability_curve* c,
                                             const char* path);

/* ---- spectrum comparison ----------------------------------------------- */

typedef struct sk_comparison_report sk_comparison_report;

/* Pass 0 for the band edges to use the full overlap of the two axes. */
SK_API sk_status sk_compare_spectra(const sk_spectrum* a, const sk_spectrum* b,
                                    double f_lo_hz, double f_hi_hz,
                                    sk_comparison_report** out);
SK_API void sk_comparison_report_free(sk_comparison_report* r);
SK_API double sk_comparison_max_abs_db(const sk_comparison_report* r);
SK_API double sk_comparison_rms_db(const sk_comparison_report* r);
SK_API size_t sk_comparison_n_points(const sk_comparison_report* r);
SK_API sk_status sk_comparison_band(const sk_comparison_report* r, double* f_lo_hz,
                                    double* f_hi_hz);
SK_API sk_status sk_comparison_write_csv(const sk_comparison_report* r, const char* path);
SK_API sk_status sk_comparison_write_json(const sk_comparison_report* r, const char* path);

/* ---- timing ------------------------------------------------------------ */

#define SK_BENCH_FFT 1u
#define SK_BENCH_IFFT 2u
#define SK_BENCH_ZOOMFFT 4u
#define SK_BENCH_CZT 8u

typedef struct sk_bench_config {
    unsigned methods;
    double sample_rate_hz;
    size_t trace_len;        /* length of the fixed synthetic pulse */
    double f1_hz;
    double f2_hz;
    size_t zoom_decimation;  /* 0 = derive */
    double res_start_hz;
    double res_step_hz;      /* may be negative */
    size_t res_count;
    size_t warmup;
    size_t reps;
    int include_plan;
    int pin_cpu;
} sk_bench_config;

SK_API void sk_bench_config_defaults(sk_bench_config* cfg);

typedef struct sk_bench_sizes {
    size_t record_len;
    size_t fft_len;
    size_t czt_m;
    size_t czt_conv_len;
    size_t zoom_decimation;
    size_t zoom_n_fft;
} sk_bench_sizes;

SK_API sk_status sk_bench_sizes_compute(const sk_bench_config* cfg, double resolution_hz,
                                        sk_bench_sizes* out);
SK_API sk_status sk_theoretical_cost(unsigned method, const sk_bench_sizes* sizes,
                                     double* out);

typedef struct sk_bench_point {
    unsigned method;
    double resolution_hz;
    sk_bench_sizes sizes;
    size_t reps;
    double mean_us;
    double median_us;
    double p95_us;
    double min_us;
    double normalized;
    double theoretical;
} sk_bench_point;

typedef struct sk_bench_report sk_bench_report;

SK_API sk_status sk_run_bench(const sk_bench_config* cfg, sk_bench_report** out);
SK_API void sk_bench_report_free(sk_bench_report* r);
SK_API size_t sk_bench_report_size(const sk_bench_report* r);
SK_API sk_status sk_bench_report_point(const sk_bench_report* r, size_t i,
                                       sk_bench_point* out);
SK_API const char* sk_bench_report_environment(const sk_bench_report* r);
SK_API sk_status sk_bench_report_write_json(const sk_bench_report* r, const char* path);
SK_API sk_status sk_bench_report_write_csv(const sk_bench_report* r, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* SPECTRALKIT_H */
