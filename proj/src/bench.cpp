#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifdef __linux__
#include <sched.h>
#include <sys/utsname.h>
#endif

#include "czt.hpp"
#include "numerics.hpp"
#include "resolution.hpp"
#include "signals.hpp"
#include "types.hpp"
#include "zoomfft.hpp"

namespace spectral {

const char* bench_method_name(BenchMethod m) {
    switch (m) {
        case bench_fft: return "fft";
        case bench_ifft: return "ifft";
        case bench_zoomfft: return "zoomfft";
        case bench_czt: return "czt";
        default: return "?";
    }
}

namespace {

std::size_t zoom_decim_for(const BenchConfig& cfg) {
    if (cfg.zoom_decimation != 0) return cfg.zoom_decimation;
    const double band = cfg.f2_hz - cfg.f1_hz;
    return std::max<std::size_t>(
        1, static_cast<std::size_t>(std::floor(cfg.sample_rate_hz / (2.0 * band))));
}

}  // namespace

BenchSizes bench_sizes(const BenchConfig& cfg, double resolution_hz) {
    if (cfg.trace_len < 2) throw std::invalid_argument("bench: trace_len must be >= 2");
    BenchSizes s;
    s.record_len = record_len_for_step(cfg.sample_rate_hz, resolution_hz);
    if (s.record_len < cfg.trace_len)
        throw std::invalid_argument(
            "bench: resolution coarser than the trace provides; max step is fs / trace_len = " +
            std::to_string(cfg.sample_rate_hz / static_cast<double>(cfg.trace_len)) + " Hz");
    s.fft_len = next_pow2(s.record_len);
    s.czt_m = czt_len_for_matched_resolution(cfg.f1_hz, cfg.f2_hz, cfg.sample_rate_hz,
                                             s.record_len);
    s.czt_conv_len = next_pow2(s.record_len + s.czt_m - 1);
    s.zoom_decimation = zoom_decim_for(cfg);
    const std::size_t usable = (s.record_len / s.zoom_decimation) * s.zoom_decimation;
    s.zoom_n_fft = usable >= s.zoom_decimation ? next_pow2(usable / s.zoom_decimation) : 0;
    return s;
}

double theoretical_cost(BenchMethod method, std::size_t n, std::size_t d, std::size_t m) {
    if (n < 2 || d < 1 || m < 1) throw std::invalid_argument("theoretical_cost: invalid sizes");
    const auto nlogn = [](double v) { return v * std::log2(v); };
    switch (method) {
        case bench_fft:
        case bench_ifft:
            return nlogn(static_cast<double>(n));
        case bench_zoomfft: {
            const double nd = static_cast<double>(n) / static_cast<double>(d);
            if (nd < 2.0)
                throw std::invalid_argument("theoretical_cost: n/d must be >= 2");
            return 0.5 * nd * std::log2(nd);
        }
        case bench_czt:
            return nlogn(static_cast<double>(std::max(n, m)));
        default:
            throw std::invalid_argument("theoretical_cost: pass a single method bit");
    }
}

double theoretical_cost(BenchMethod method, const BenchSizes& s) {
    switch (method) {
        case bench_fft:
        case bench_ifft:
            return theoretical_cost(method, s.fft_len, 1, 1);
        case bench_zoomfft:
            return theoretical_cost(method, s.zoom_decimation * s.zoom_n_fft,
                                    s.zoom_decimation, 1);
        case bench_czt:
            // The matched-resolution transform length drives the model; the
            // band grid m never exceeds it for an in-band sweep.
            return theoretical_cost(method, s.record_len, 1, s.czt_m);
        default:
            throw std::invalid_argument("theoretical_cost: pass a single method bit");
    }
}

std::string bench_environment() {
    std::ostringstream env;
    std::string cpu = "unknown cpu";
    std::ifstream info("/proc/cpuinfo");
    std::string line;
    while (std::getline(info, line)) {
        const auto pos = line.find("model name");
        if (pos != std::string::npos) {
            const auto colon = line.find(':');
            if (colon != std::string::npos) {
                cpu = line.substr(colon + 1);
                const auto start = cpu.find_first_not_of(" \t");
                if (start != std::string::npos) cpu = cpu.substr(start);
            }
            break;
        }
    }
    env << "cpu: " << cpu;
#ifdef __linux__
    utsname un{};
    if (uname(&un) == 0) env << "; kernel: " << un.sysname << ' ' << un.release;
#endif
    env << "; compiler: " << __VERSION__;
#ifdef NDEBUG
    env << "; build: optimized";
#else
    env << "; build: debug";
#endif
    return env.str();
}

namespace {

struct Stats {
    double mean_us, median_us, p95_us, min_us;
};

Stats summarize(std::vector<double>& us) {
    std::sort(us.begin(), us.end());
    Stats st{};
    double sum = 0.0;
    for (double v : us) sum += v;
    st.mean_us = sum / static_cast<double>(us.size());
    const std::size_t n = us.size();
    st.median_us = n % 2 == 1 ? us[n / 2] : 0.5 * (us[n / 2 - 1] + us[n / 2]);
    std::size_t p95 = static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(n)));
    if (p95 > 0) --p95;
    st.p95_us = us[std::min(p95, n - 1)];
    st.min_us = us.front();
    return st;
}

// Runs fn once per rep, timing each call individually.
template <typename Fn>
Stats time_reps(std::size_t warmup, std::size_t reps, Fn&& fn) {
    using clock = std::chrono::steady_clock;
    for (std::size_t i = 0; i < warmup; ++i) fn();
    std::vector<double> us(reps);
    for (std::size_t i = 0; i < reps; ++i) {
        const auto t0 = clock::now();
        fn();
        const auto t1 = clock::now();
        us[i] = std::chrono::duration<double, std::micro>(t1 - t0).count();
    }
    return summarize(us);
}

Stats bench_one(const BenchConfig& cfg, BenchMethod method, const BenchSizes& sz,
                const Trace& trace) {
    switch (method) {
        case bench_fft:
        case bench_ifft: {
            ComplexBuffer input(sz.fft_len);
            for (std::size_t i = 0; i < trace.size(); ++i) input[i] = trace.samples[i];
            ComplexBuffer scratch(sz.fft_len);
            const bool inv = method == bench_ifft;
            if (cfg.include_plan)
                return time_reps(cfg.warmup, cfg.reps, [&] {
                    FftPlan plan(sz.fft_len);
                    scratch = input;
                    inv ? plan.inverse(scratch) : plan.forward(scratch);
                });
            FftPlan plan(sz.fft_len);
            return time_reps(cfg.warmup, cfg.reps, [&] {
                std::copy(input.begin(), input.end(), scratch.begin());
                inv ? plan.inverse(scratch) : plan.forward(scratch);
            });
        }
        case bench_czt: {
            const CztParams params = czt_params_for_band(cfg.f1_hz, cfg.f2_hz,
                                                         cfg.sample_rate_hz, sz.czt_m);
            // same zero-padded record the fft route transforms
            ComplexBuffer input(sz.record_len);
            for (std::size_t i = 0; i < trace.size(); ++i) input[i] = trace.samples[i];
            if (cfg.include_plan)
                return time_reps(cfg.warmup, cfg.reps, [&] {
                    CztPlan plan(input.size(), params);
                    plan.execute(input);
                });
            CztPlan plan(input.size(), params);
            ComplexBuffer conv(plan.conv_size());
            ComplexBuffer out(plan.output_size());
            return time_reps(cfg.warmup, cfg.reps,
                             [&] { plan.execute(input, conv, out); });
        }
        case bench_zoomfft: {
            ZoomOptions opts;
            opts.decimation = sz.zoom_decimation;
            Trace padded;
            padded.sample_rate_hz = trace.sample_rate_hz;
            padded.t0_s = trace.t0_s;
            padded.samples = trace.samples;
            padded.samples.resize(sz.record_len, 0.0);
            if (cfg.include_plan)
                return time_reps(cfg.warmup, cfg.reps, [&] {
                    const ZoomFftPlan plan = make_zoom_plan(
                        sz.record_len, cfg.f1_hz, cfg.f2_hz, cfg.sample_rate_hz, opts);
                    zoom_fft(plan, padded);
                });
            const ZoomFftPlan plan =
                make_zoom_plan(sz.record_len, cfg.f1_hz, cfg.f2_hz, cfg.sample_rate_hz, opts);
            return time_reps(cfg.warmup, cfg.reps, [&] { zoom_fft(plan, padded); });
        }
        default:
            throw std::invalid_argument("bench: pass a single method bit");
    }
}

}  // namespace

BenchReport run_bench(const BenchConfig& cfg) {
    if (cfg.reps == 0) throw std::invalid_argument("bench: reps must be >= 1");
    if (cfg.res_count == 0) throw std::invalid_argument("bench: empty resolution grid");
    if ((cfg.methods & bench_all) == 0)
        throw std::invalid_argument("bench: no methods selected");
    for (std::size_t i = 0; i < cfg.res_count; ++i) {
        const double r = cfg.res_start_hz + static_cast<double>(i) * cfg.res_step_hz;
        if (!(r > 0.0))
            throw std::invalid_argument("bench: resolution grid leaves the positive axis");
    }

#ifdef __linux__
    if (cfg.pin_cpu) {
        cpu_set_t set;
        CPU_ZERO(&set);
        CPU_SET(0, &set);
        sched_setaffinity(0, sizeof set, &set);  // best effort
    }
#endif

    BenchReport report;
    report.config = cfg;
    report.environment = bench_environment();

    // The fixed signal every route transforms: the synthetic pulse, scaled
    // so its default shape lands at 10 ps center / 300 fs width for the
    // 500-sample 10 THz record.
    ThzPulseSpec pulse;
    pulse.sample_rate_hz = cfg.sample_rate_hz;
    pulse.n = cfg.trace_len;
    const double duration = static_cast<double>(cfg.trace_len) / cfg.sample_rate_hz;
    pulse.center_time_s = 0.2 * duration;
    pulse.pulse_width_s = 0.006 * duration;
    const Trace trace = gen_thz_pulse(pulse);

    const BenchMethod order[] = {bench_fft, bench_ifft, bench_zoomfft, bench_czt};
    for (BenchMethod method : order) {
        if (!(cfg.methods & method)) continue;
        const std::size_t first = report.points.size();
        for (std::size_t i = 0; i < cfg.res_count; ++i) {
            BenchPoint p;
            p.resolution_hz = cfg.res_start_hz + static_cast<double>(i) * cfg.res_step_hz;
            p.method = method;
            p.sizes = bench_sizes(cfg, p.resolution_hz);
            p.reps = cfg.reps;
            const Stats st = bench_one(cfg, method, p.sizes, trace);
            p.mean_us = st.mean_us;
            p.median_us = st.median_us;
            p.p95_us = st.p95_us;
            p.min_us = st.min_us;
            p.theoretical = theoretical_cost(method, p.sizes);
            report.points.push_back(p);
        }
        const double mean0 = report.points[first].mean_us;
        const double cost0 = report.points[first].theoretical;
        for (std::size_t i = first; i < report.points.size(); ++i) {
            report.points[i].normalized = report.points[i].mean_us / mean0;
            report.points[i].theoretical /= cost0;
        }
    }
    return report;
}

}  // namespace spectral
