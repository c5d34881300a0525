#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace spectral {

// Bitmask of routes to time.
enum BenchMethod : unsigned {
    bench_fft = 1u << 0,
    bench_ifft = 1u << 1,
    bench_zoomfft = 1u << 2,
    bench_czt = 1u << 3,
    bench_all = bench_fft | bench_ifft | bench_zoomfft | bench_czt,
};

const char* bench_method_name(BenchMethod m);

// The sweep runs over target bin spacings: grid[i] = res_start + i * res_step
// (res_step may be negative for a coarse-to-fine sweep).  Every route
// transforms the same synthetic pulse of trace_len samples; a finer spacing
// is reached by padding that fixed trace to ceil(fs / spacing) samples for
// the FFT routes, by matching the output grid (m) to that padded length for
// the CZT, and by padding before decimation for the zoom route.
struct BenchConfig {
    unsigned methods = bench_all;
    double sample_rate_hz = 10e12;
    std::size_t trace_len = 500;
    double f1_hz = 0.5e12;  // band for the band-limited routes
    double f2_hz = 2.0e12;
    std::size_t zoom_decimation = 0;  // 0 = derive from the band
    double res_start_hz = 20e9;
    double res_step_hz = -0.5e9;
    std::size_t res_count = 31;
    std::size_t warmup = 100;
    std::size_t reps = 10000;
    bool include_plan = false;  // time plan construction along with execution
    bool pin_cpu = false;       // best-effort affinity to one core
};

// Transform sizing for one grid point; pure arithmetic, no allocation.
struct BenchSizes {
    std::size_t record_len = 0;    // ceil(fs / resolution), padded trace length
    std::size_t fft_len = 0;       // next power of two
    std::size_t czt_m = 0;         // band bins at matched spacing
    std::size_t czt_conv_len = 0;  // chirp convolution length
    std::size_t zoom_decimation = 0;
    std::size_t zoom_n_fft = 0;    // short transform length
};

BenchSizes bench_sizes(const BenchConfig& cfg, double resolution_hz);

// Textbook operation-count models, used for the reference curve in reports:
// n*log2(n) for fft/ifft, (n/2d)*log2(n/d) for zoomfft, and
// max(n, m)*log2(max(n, m)) for czt.
double theoretical_cost(BenchMethod method, std::size_t n, std::size_t d, std::size_t m);

// Plugs the sizes of one grid point into the model above.
double theoretical_cost(BenchMethod method, const BenchSizes& s);

struct BenchPoint {
    double resolution_hz = 0.0;
    BenchMethod method = bench_fft;
    BenchSizes sizes;
    std::size_t reps = 0;
    double mean_us = 0.0;
    double median_us = 0.0;
    double p95_us = 0.0;
    double min_us = 0.0;
    double normalized = 0.0;        // mean over the method's first-point mean
    double theoretical = 0.0;       // cost model, same normalization
};

struct BenchReport {
    BenchConfig config;
    std::string environment;
    std::vector<BenchPoint> points;  // grouped by method, grid order within
};

std::string bench_environment();

// Each call is timed individually (monotonic clock) after `warmup` untimed
// runs; plan construction and input staging stay outside the timed region
// unless include_plan is set.  Single-threaded.
BenchReport run_bench(const BenchConfig& cfg);

}  // namespace spectral
