#include <doctest.h>

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "bench.hpp"

using namespace spectral;

TEST_CASE("method names") {
    CHECK(std::strcmp(bench_method_name(bench_fft), "fft") == 0);
    CHECK(std::strcmp(bench_method_name(bench_ifft), "ifft") == 0);
    CHECK(std::strcmp(bench_method_name(bench_zoomfft), "zoomfft") == 0);
    CHECK(std::strcmp(bench_method_name(bench_czt), "czt") == 0);
}

TEST_CASE("transform sizing at the default grid endpoints") {
    const BenchConfig cfg;

    const BenchSizes a = bench_sizes(cfg, 20e9);
    CHECK_EQ(a.record_len, 500);
    CHECK_EQ(a.fft_len, 512);
    CHECK_EQ(a.czt_m, 75);
    CHECK_EQ(a.czt_conv_len, 1024);
    CHECK_EQ(a.zoom_decimation, 3);
    CHECK_EQ(a.zoom_n_fft, 256);

    const BenchSizes b = bench_sizes(cfg, 5e9);
    CHECK_EQ(b.record_len, 2000);
    CHECK_EQ(b.fft_len, 2048);
    CHECK_EQ(b.czt_m, 300);
    CHECK_EQ(b.czt_conv_len, 4096);  // padded record feeds the chirp route too
    CHECK_EQ(b.zoom_n_fft, 1024);
}

TEST_CASE("sizing rejects a grid the trace cannot reach") {
    BenchConfig cfg;
    // coarser than fs / trace_len, the padded record would be shorter than the trace
    CHECK_THROWS_AS(bench_sizes(cfg, 30e9), std::invalid_argument);
    cfg.trace_len = 1;
    CHECK_THROWS_AS(bench_sizes(cfg, 20e9), std::invalid_argument);
}

TEST_CASE("explicit zoom decimation is honored") {
    BenchConfig cfg;
    cfg.zoom_decimation = 2;
    const BenchSizes s = bench_sizes(cfg, 20e9);
    CHECK_EQ(s.zoom_decimation, 2);
    CHECK_EQ(s.zoom_n_fft, 256);  // next_pow2(500 / 2)
}

TEST_CASE("operation-count model") {
    CHECK(theoretical_cost(bench_fft, 1024, 1, 1) == doctest::Approx(10240.0));
    CHECK(theoretical_cost(bench_ifft, 512, 1, 1) == doctest::Approx(4608.0));
    CHECK(theoretical_cost(bench_zoomfft, 1024, 4, 1) == doctest::Approx(1024.0));
    CHECK(theoretical_cost(bench_czt, 500, 1, 125) ==
          doctest::Approx(500.0 * std::log2(500.0)));
    CHECK(theoretical_cost(bench_czt, 100, 1, 256) == doctest::Approx(2048.0));

    CHECK_THROWS_AS(theoretical_cost(bench_fft, 1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(theoretical_cost(bench_czt, 100, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(theoretical_cost(bench_zoomfft, 4, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(theoretical_cost(static_cast<BenchMethod>(bench_all), 64, 1, 1),
                    std::invalid_argument);
}

TEST_CASE("the model plugs in the per-route lengths") {
    const BenchConfig cfg;
    const BenchSizes s = bench_sizes(cfg, 20e9);
    CHECK(theoretical_cost(bench_fft, s) == doctest::Approx(4608.0));  // 512*9
    CHECK(theoretical_cost(bench_ifft, s) == doctest::Approx(4608.0));
    // short transform of 256 bins: 0.5 * 256 * 8
    CHECK(theoretical_cost(bench_zoomfft, s) == doctest::Approx(1024.0));
    CHECK(theoretical_cost(bench_czt, s) == doctest::Approx(500.0 * std::log2(500.0)));
}

TEST_CASE("a small sweep produces grouped, normalized points") {
    BenchConfig cfg;
    cfg.methods = bench_fft | bench_zoomfft | bench_czt;
    cfg.res_start_hz = 20e9;
    cfg.res_step_hz = -5e9;
    cfg.res_count = 2;
    cfg.warmup = 5;
    cfg.reps = 50;
    const BenchReport r = run_bench(cfg);

    REQUIRE_EQ(r.points.size(), 6);
    CHECK(!r.environment.empty());
    CHECK_EQ(r.config.trace_len, 500);
    CHECK_EQ(r.config.reps, 50);

    // fft grid first, then zoom, then czt; grid order inside each group
    CHECK_EQ(r.points[0].method, bench_fft);
    CHECK_EQ(r.points[2].method, bench_zoomfft);
    CHECK_EQ(r.points[4].method, bench_czt);
    CHECK(r.points[0].resolution_hz == doctest::Approx(20e9));
    CHECK(r.points[1].resolution_hz == doctest::Approx(15e9));
    CHECK_EQ(r.points[1].sizes.record_len, 667);

    for (std::size_t i : {std::size_t{0}, std::size_t{2}, std::size_t{4}}) {
        CHECK_EQ(r.points[i].normalized, 1.0);  // exact by construction
        CHECK_EQ(r.points[i].theoretical, 1.0);
    }
    for (const BenchPoint& p : r.points) {
        CHECK_EQ(p.reps, 50);
        CHECK(p.mean_us > 0.0);
        CHECK(p.min_us <= p.median_us);
        CHECK(p.median_us <= p.p95_us);
        CHECK(p.min_us <= p.mean_us);
        CHECK(p.theoretical > 0.0);
    }
}

TEST_CASE("plan construction can be pulled into the timed region") {
    BenchConfig cfg;
    cfg.methods = bench_fft;
    cfg.res_count = 1;
    cfg.warmup = 0;
    cfg.reps = 5;
    cfg.include_plan = true;
    const BenchReport r = run_bench(cfg);
    REQUIRE_EQ(r.points.size(), 1);
    CHECK(r.points[0].mean_us > 0.0);
}

TEST_CASE("sweep validation") {
    BenchConfig cfg;
    cfg.reps = 0;
    CHECK_THROWS_AS(run_bench(cfg), std::invalid_argument);

    cfg = BenchConfig{};
    cfg.res_count = 0;
    CHECK_THROWS_AS(run_bench(cfg), std::invalid_argument);

    cfg = BenchConfig{};
    cfg.methods = 0;
    CHECK_THROWS_AS(run_bench(cfg), std::invalid_argument);

    cfg = BenchConfig{};
    cfg.res_start_hz = 10e9;
    cfg.res_step_hz = -6e9;
    cfg.res_count = 3;  // third point would sit at -2 GHz
    CHECK_THROWS_AS(run_bench(cfg), std::invalid_argument);
}
