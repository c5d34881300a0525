// Experiment driver for the spectralkit library. Everything goes through the
// public C interface; exit codes: 0 success, 1 runtime failure, 2 bad usage.

#include <cstdio>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <spectralkit.h>

namespace {

using trace_ptr = std::unique_ptr<sk_trace, void (*)(sk_trace*)>;
using spectrum_ptr = std::unique_ptr<sk_spectrum, void (*)(sk_spectrum*)>;

trace_ptr wrap(sk_trace* t) { return trace_ptr(t, sk_trace_free); }
spectrum_ptr wrap(sk_spectrum* s) { return spectrum_ptr(s, sk_spectrum_free); }

int fail(sk_status st, const std::string& what) {
    std::fprintf(stderr, "spectral-kit: %s: %s\n", what.c_str(), sk_last_error());
    return st == SK_ERR_INVALID_ARGUMENT ? 2 : 1;
}

int usage_error(const std::string& msg) {
    std::fprintf(stderr, "spectral-kit: %s\n", msg.c_str());
    return 2;
}

#define CHECK(expr, what)                                  \
    do {                                                   \
        const sk_status st_ = (expr);                      \
        if (st_ != SK_OK) return fail(st_, what);          \
    } while (0)

struct SynthOpts {
    std::string kind;  // "thz" or "twotone"
    double fs = 0.0;
    std::size_t n = 0;
    double width = 0.0;
    double center_time = 0.0;
    double amplitude = 0.0;
    std::string model = "gaussian";
    double fa = 0.0;
    double fb = 0.0;
    double amp_a = 0.0;
    double amp_b = 0.0;
};

int make_synth_trace(const SynthOpts& o, sk_trace** out) {
    if (o.kind == "thz") {
        sk_thz_pulse_spec spec;
        sk_thz_pulse_spec_defaults(&spec);
        if (o.fs > 0.0) spec.sample_rate_hz = o.fs;
        if (o.n > 0) spec.n = o.n;
        if (o.width > 0.0) spec.pulse_width_s = o.width;
        if (o.center_time > 0.0) spec.center_time_s = o.center_time;
        if (o.amplitude != 0.0) spec.amplitude = o.amplitude;
        spec.model = o.model == "biexp" ? SK_PULSE_DOUBLE_EXPONENTIAL
                                        : SK_PULSE_GAUSSIAN_DERIVATIVE;
        CHECK(sk_gen_thz_pulse(&spec, out), "generating pulse");
        return 0;
    }
    sk_two_tone_spec spec;
    sk_two_tone_spec_defaults(&spec);
    if (o.fs > 0.0) spec.sample_rate_hz = o.fs;
    if (o.n > 0) spec.n = o.n;
    if (o.fa > 0.0) spec.f_a_hz = o.fa;
    if (o.fb > 0.0) spec.f_b_hz = o.fb;
    if (o.amp_a != 0.0) spec.amp_a = o.amp_a;
    if (o.amp_b != 0.0) spec.amp_b = o.amp_b;
    CHECK(sk_gen_two_tone(&spec, out), "generating two-tone trace");
    return 0;
}

int write_spectrum(const sk_spectrum* s, const std::string& path,
                   const std::string& format) {
    if (format == "json")
        CHECK(sk_spectrum_write_json(s, path.c_str()), "writing spectrum");
    else
        CHECK(sk_spectrum_write_csv(s, path.c_str()), "writing spectrum");
    return 0;
}

struct TransformOpts {
    std::string input;
    SynthOpts synth;
    std::size_t take = 0;
    std::string method = "fft";
    double pad_to_step = 0.0;
    std::size_t bins = 0;
    double f1 = -1.0;
    double f2 = -1.0;
    std::size_t decimation = 0;
    std::size_t taps = 0;
    double cutoff = 0.0;
    double center = 0.0;
    bool center_set = false;
    bool linear = false;
    bool trim_transient = false;
    bool no_pad_pow2 = false;
    bool full_spectrum = false;
    std::string output = "-";
    std::string format = "csv";
};

int run_transform(const TransformOpts& o) {
    if (o.input.empty() == o.synth.kind.empty())
        return usage_error("transform needs exactly one of --input or --synth");

    sk_trace* raw = nullptr;
    if (!o.input.empty())
        CHECK(sk_trace_read_csv(o.input.c_str(), &raw), "reading " + o.input);
    else if (int rc = make_synth_trace(o.synth, &raw))
        return rc;
    trace_ptr trace = wrap(raw);

    if (o.take > 0) {
        sk_trace* cut = nullptr;
        CHECK(sk_trace_slice(trace.get(), 0, o.take, &cut), "truncating trace");
        trace = wrap(cut);
    }

    const double fs = sk_trace_sample_rate(trace.get());
    const std::size_t n = sk_trace_size(trace.get());
    const double f1 = o.f1 >= 0.0 ? o.f1 : 0.0;
    const double f2 = o.f2 >= 0.0 ? o.f2 : fs / 2.0;

    spectrum_ptr spec = wrap(static_cast<sk_spectrum*>(nullptr));
    if (o.method == "fft") {
        std::size_t len = 0;
        if (o.pad_to_step > 0.0) {
            std::size_t zeros = 0;
            CHECK(sk_zeros_for_resolution(fs, n, o.pad_to_step, &zeros),
                  "sizing the padded transform");
            len = n + zeros;
        }
        sk_spectrum* s = nullptr;
        CHECK(sk_fft_spectrum(trace.get(), len, &s), "computing spectrum");
        spec = wrap(s);
        if (!o.full_spectrum) {
            sk_spectrum* half = nullptr;
            CHECK(sk_spectrum_slice_band(spec.get(), 0.0, fs / 2.0, &half),
                  "slicing to the half spectrum");
            spec = wrap(half);
        }
    } else if (o.method == "czt") {
        std::size_t m = o.bins;
        if (m == 0) {
            std::size_t ref_len = sk_next_pow2(n);
            if (o.pad_to_step > 0.0)
                CHECK(sk_record_len_for_step(fs, o.pad_to_step, &ref_len),
                      "sizing the band transform");
            CHECK(sk_czt_len_for_matched_resolution(f1, f2, fs, ref_len, &m),
                  "sizing the band transform");
        }
        sk_spectrum* s = nullptr;
        CHECK(sk_czt_spectrum(trace.get(), f1, f2, m, &s), "computing spectrum");
        spec = wrap(s);
    } else {  // zoomfft
        if (o.pad_to_step > 0.0)
            return usage_error("--pad-to-step applies to the fft and czt methods");
        sk_zoom_options zo;
        sk_zoom_options_defaults(&zo);
        zo.decimation = o.decimation;
        zo.num_taps = o.taps;
        zo.cutoff_hz = o.cutoff;
        if (o.center_set) {
            zo.center_hz = o.center;
            zo.center_set = 1;
        }
        if (o.linear) zo.circular = 0;
        if (o.trim_transient) zo.trim_transient = 1;
        if (o.no_pad_pow2) zo.pad_pow2 = 0;
        sk_zoom_plan* plan = nullptr;
        CHECK(sk_zoom_plan_create(n, f1, f2, fs, &zo, &plan), "building zoom plan");
        std::unique_ptr<sk_zoom_plan, void (*)(sk_zoom_plan*)> plan_guard(
            plan, sk_zoom_plan_free);
        sk_spectrum* s = nullptr;
        CHECK(sk_zoom_spectrum(plan, trace.get(), &s), "computing spectrum");
        spec = wrap(s);
    }
    return write_spectrum(spec.get(), o.output, o.format);
}

struct TwoToneOpts {
    sk_scan_config cfg;
    std::string output = "-";
    std::string format = "csv";
};

int run_twotone(const TwoToneOpts& o) {
    sk_resolvability_curve* raw = nullptr;
    CHECK(sk_resolvability_scan(&o.cfg, &raw), "running the separation scan");
    std::unique_ptr<sk_resolvability_curve, void (*)(sk_resolvability_curve*)> curve(
        raw, sk_resolvability_curve_free);

    if (o.format == "json")
        CHECK(sk_resolvability_write_json(curve.get(), o.output.c_str()),
              "writing scan results");
    else
        CHECK(sk_resolvability_write_csv(curve.get(), o.output.c_str()),
              "writing scan results");

    const double min_fft = sk_resolvability_min_fft(curve.get());
    const double min_czt = sk_resolvability_min_czt(curve.get());
    if (min_fft == min_fft)
        std::fprintf(stderr, "min resolved separation, padded fft: %g Hz\n", min_fft);
    else
        std::fprintf(stderr, "min resolved separation, padded fft: none\n");
    if (min_czt == min_czt)
        std::fprintf(stderr, "min resolved separation, czt: %g Hz\n", min_czt);
    else
        std::fprintf(stderr, "min resolved separation, czt: none\n");
    return 0;
}

struct BenchOpts {
    sk_bench_config cfg;
    std::vector<std::string> methods;
    std::string output = "-";
    std::string format = "json";
};

int run_bench_cmd(BenchOpts& o) {
    if (!o.methods.empty()) {
        unsigned mask = 0;
        for (const std::string& name : o.methods) {
            if (name == "fft")
                mask |= SK_BENCH_FFT;
            else if (name == "ifft")
                mask |= SK_BENCH_IFFT;
            else if (name == "zoomfft")
                mask |= SK_BENCH_ZOOMFFT;
            else if (name == "czt")
                mask |= SK_BENCH_CZT;
            else
                return usage_error("unknown bench method: " + name);
        }
        o.cfg.methods = mask;
    }
    sk_bench_report* raw = nullptr;
    CHECK(sk_run_bench(&o.cfg, &raw), "running the benchmark");
    std::unique_ptr<sk_bench_report, void (*)(sk_bench_report*)> report(
        raw, sk_bench_report_free);
    if (o.format == "csv")
        CHECK(sk_bench_report_write_csv(report.get(), o.output.c_str()),
              "writing benchmark report");
    else
        CHECK(sk_bench_report_write_json(report.get(), o.output.c_str()),
              "writing benchmark report");
    return 0;
}

struct GenOpts {
    SynthOpts synth;
    double echo_delay = 0.0;
    double echo_amp = 0.0;
    double noise_std = 0.0;
    std::uint64_t seed = 1;
    std::string output = "-";
};

int run_gen(const GenOpts& o) {
    sk_trace* raw = nullptr;
    if (int rc = make_synth_trace(o.synth, &raw)) return rc;
    trace_ptr trace = wrap(raw);

    if (o.echo_amp != 0.0) {
        if (o.synth.kind != "thz")
            return usage_error("--echo-amp applies to the thz pulse only");
        sk_thz_pulse_spec spec;
        sk_thz_pulse_spec_defaults(&spec);
        if (o.synth.fs > 0.0) spec.sample_rate_hz = o.synth.fs;
        if (o.synth.n > 0) spec.n = o.synth.n;
        if (o.synth.width > 0.0) spec.pulse_width_s = o.synth.width;
        if (o.synth.center_time > 0.0) spec.center_time_s = o.synth.center_time;
        if (o.synth.amplitude != 0.0) spec.amplitude = o.synth.amplitude;
        spec.model = o.synth.model == "biexp" ? SK_PULSE_DOUBLE_EXPONENTIAL
                                              : SK_PULSE_GAUSSIAN_DERIVATIVE;
        spec.center_time_s += o.echo_delay;
        spec.amplitude *= o.echo_amp;
        sk_trace* echo = nullptr;
        CHECK(sk_gen_thz_pulse(&spec, &echo), "generating echo pulse");
        trace_ptr echo_guard = wrap(echo);
        sk_trace* sum = nullptr;
        CHECK(sk_trace_add(trace.get(), echo, &sum), "adding echo");
        trace = wrap(sum);
    }

    if (o.noise_std > 0.0) {
        sk_trace* noisy = nullptr;
        CHECK(sk_trace_with_noise(trace.get(), o.noise_std, o.seed, &noisy),
              "adding noise");
        trace = wrap(noisy);
    }
    CHECK(sk_trace_write_csv(trace.get(), o.output.c_str()), "writing trace");
    return 0;
}

struct CompareOpts {
    std::string path_a;
    std::string path_b;
    double f_lo = 0.0;
    double f_hi = 0.0;
    std::string output = "-";
    std::string format = "csv";
};

int run_compare(const CompareOpts& o) {
    sk_spectrum* a_raw = nullptr;
    CHECK(sk_spectrum_read_csv(o.path_a.c_str(), &a_raw), "reading " + o.path_a);
    spectrum_ptr a = wrap(a_raw);
    sk_spectrum* b_raw = nullptr;
    CHECK(sk_spectrum_read_csv(o.path_b.c_str(), &b_raw), "reading " + o.path_b);
    spectrum_ptr b = wrap(b_raw);

    sk_comparison_report* raw = nullptr;
    CHECK(sk_compare_spectra(a.get(), b.get(), o.f_lo, o.f_hi, &raw),
          "comparing spectra");
    std::unique_ptr<sk_comparison_report, void (*)(sk_comparison_report*)> report(
        raw, sk_comparison_report_free);

    if (o.format == "json")
        CHECK(sk_comparison_write_json(report.get(), o.output.c_str()),
              "writing comparison");
    else
        CHECK(sk_comparison_write_csv(report.get(), o.output.c_str()),
              "writing comparison");

    double lo = 0.0, hi = 0.0;
    sk_comparison_band(report.get(), &lo, &hi);
    std::fprintf(stderr, "max |delta| %.6g dB, rms %.6g dB over %zu bins (%g..%g Hz)\n",
                 sk_comparison_max_abs_db(report.get()),
                 sk_comparison_rms_db(report.get()), sk_comparison_n_points(report.get()),
                 lo, hi);
    return 0;
}

void add_synth_options(CLI::App* cmd, SynthOpts& o, bool with_kind) {
    if (with_kind)
        cmd->add_option("--synth", o.kind, "synthesize the input: thz or twotone")
            ->check(CLI::IsMember({"thz", "twotone"}));
    cmd->add_option("--fs", o.fs, "sample rate in Hz");
    cmd->add_option("--n", o.n, "record length in samples");
    cmd->add_option("--width", o.width, "pulse width in seconds (thz)");
    cmd->add_option("--center-time", o.center_time, "pulse center in seconds (thz)");
    cmd->add_option("--amplitude", o.amplitude, "peak amplitude (thz)");
    cmd->add_option("--model", o.model, "pulse shape: gaussian or biexp")
        ->check(CLI::IsMember({"gaussian", "biexp"}));
    cmd->add_option("--fa", o.fa, "first tone frequency in Hz (twotone)");
    cmd->add_option("--fb", o.fb, "second tone frequency in Hz (twotone)");
    cmd->add_option("--amp-a", o.amp_a, "first tone amplitude (twotone)");
    cmd->add_option("--amp-b", o.amp_b, "second tone amplitude (twotone)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"band-limited spectral transforms for pulsed time-domain records"};
    app.require_subcommand(1);
    app.set_version_flag("--version", sk_version());

    TransformOpts t;
    auto* transform =
        app.add_subcommand("transform", "compute a spectrum from a trace");
    transform->add_option("--input", t.input, "trace CSV (time_s,amplitude); - for stdin");
    add_synth_options(transform, t.synth, true);
    transform->add_option("--take", t.take, "keep only the first N samples");
    transform->add_option("--method", t.method, "fft, czt or zoomfft")
        ->check(CLI::IsMember({"fft", "czt", "zoomfft"}));
    transform->add_option("--pad-to-step", t.pad_to_step,
                          "pad so the bin spacing is at most this many Hz");
    transform->add_option("--bins", t.bins, "band bin count for czt");
    transform->add_option("--f1", t.f1, "band start in Hz (czt/zoomfft)");
    transform->add_option("--f2", t.f2, "band stop in Hz (czt/zoomfft)");
    transform->add_option("--decimation", t.decimation, "zoom decimation factor");
    transform->add_option("--taps", t.taps, "zoom lowpass tap count (odd)");
    transform->add_option("--cutoff", t.cutoff, "zoom lowpass cutoff in Hz");
    transform->add_option("--center", t.center, "zoom mix-down frequency in Hz")
        ->each([&t](const std::string&) { t.center_set = true; });
    transform->add_flag("--linear", t.linear,
                        "zoom: textbook linear filtering instead of circular");
    transform->add_flag("--trim-transient", t.trim_transient,
                        "zoom: drop the filter startup samples (linear mode)");
    transform->add_flag("--no-pad-pow2", t.no_pad_pow2,
                        "zoom: run the short transform at its natural length");
    transform->add_flag("--full-spectrum", t.full_spectrum,
                        "fft: keep the full [0, fs) axis instead of [0, fs/2]");
    transform->add_option("--output", t.output, "output path; - for stdout");
    transform->add_option("--format", t.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    TwoToneOpts tt;
    sk_scan_config_defaults(&tt.cfg);
    tt.cfg.center_hz = 500.0;
    auto* twotone = app.add_subcommand(
        "twotone", "sweep two-tone separation and report resolvability");
    twotone->add_option("--fs", tt.cfg.sample_rate_hz, "sample rate in Hz");
    twotone->add_option("--n", tt.cfg.n, "record length in samples");
    twotone->add_option("--f1", tt.cfg.f1_hz, "band start in Hz");
    twotone->add_option("--f2", tt.cfg.f2_hz, "band stop in Hz");
    twotone->add_option("--bins", tt.cfg.m, "band bin count");
    twotone->add_option("--center", tt.cfg.center_hz, "tone pair midpoint in Hz");
    twotone->add_option("--sep-start", tt.cfg.sep_start_hz, "first separation in Hz");
    twotone->add_option("--sep-stop", tt.cfg.sep_stop_hz, "last separation in Hz");
    twotone->add_option("--sep-step", tt.cfg.sep_step_hz, "separation step in Hz");
    twotone->add_option("--output", tt.output, "output path; - for stdout");
    twotone->add_option("--format", tt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    BenchOpts b;
    sk_bench_config_defaults(&b.cfg);
    auto* bench = app.add_subcommand("bench", "time the transform routes");
    bench->add_option("--methods", b.methods,
                      "routes to time: fft, ifft, zoomfft, czt")
        ->delimiter(',');
    bench->add_option("--fs", b.cfg.sample_rate_hz, "sample rate in Hz");
    bench->add_option("--trace-len", b.cfg.trace_len,
                      "length of the fixed synthetic pulse");
    bench->add_option("--f1", b.cfg.f1_hz, "band start in Hz");
    bench->add_option("--f2", b.cfg.f2_hz, "band stop in Hz");
    bench->add_option("--decimation", b.cfg.zoom_decimation,
                      "zoom decimation (0 derives it)");
    bench->add_option("--res-start", b.cfg.res_start_hz, "first bin spacing in Hz");
    bench->add_option("--res-step", b.cfg.res_step_hz,
                      "bin spacing increment in Hz (may be negative)");
    bench->add_option("--res-count", b.cfg.res_count, "grid point count");
    bench->add_option("--reps", b.cfg.reps, "timed repetitions per point");
    bench->add_option("--warmup", b.cfg.warmup, "untimed repetitions per point");
    bench->add_flag("--include-plan", b.cfg.include_plan,
                    "time plan construction along with execution");
    bench->add_flag("--pin-cpu", b.cfg.pin_cpu, "pin the process to one core");
    bench->add_option("--output", b.output, "output path; - for stdout");
    bench->add_option("--format", b.format, "json or csv")
        ->check(CLI::IsMember({"csv", "json"}));

    GenOpts g;
    g.synth.kind = "thz";
    auto* gen = app.add_subcommand("gen", "write a synthetic trace as CSV");
    gen->add_option("--type", g.synth.kind, "thz or twotone")
        ->check(CLI::IsMember({"thz", "twotone"}));
    add_synth_options(gen, g.synth, false);
    gen->add_option("--echo-delay", g.echo_delay,
                    "echo pulse delay in seconds (thz)");
    gen->add_option("--echo-amp", g.echo_amp,
                    "echo amplitude relative to the main pulse (thz)");
    gen->add_option("--noise-std", g.noise_std, "white noise deviation");
    gen->add_option("--seed", g.seed, "noise seed");
    gen->add_option("--output", g.output, "output path; - for stdout");

    CompareOpts c;
    auto* compare = app.add_subcommand(
        "compare", "pointwise dB deviation between two spectrum CSVs");
    compare->add_option("a", c.path_a, "reference spectrum CSV")->required();
    compare->add_option("b", c.path_b, "spectrum CSV to compare")->required();
    compare->add_option("--f-lo", c.f_lo, "band start in Hz (0 = overlap)");
    compare->add_option("--f-hi", c.f_hi, "band stop in Hz (0 = overlap)");
    compare->add_option("--output", c.output, "output path; - for stdout");
    compare->add_option("--format", c.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (transform->parsed()) return run_transform(t);
    if (twotone->parsed()) return run_twotone(tt);
    if (bench->parsed()) return run_bench_cmd(b);
    if (gen->parsed()) return run_gen(g);
    if (compare->parsed()) return run_compare(c);
    return 2;
}
