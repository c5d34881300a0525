#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include "czt.hpp"
#include "numerics.hpp"
#include "types.hpp"

using namespace spectral;

namespace {

ComplexBuffer random_buf(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ComplexBuffer x(n);
    for (auto& v : x) v = cplx(dist(rng), dist(rng));
    return x;
}

double rel_error(const ComplexBuffer& got, const ComplexBuffer& want) {
    REQUIRE(got.size() == want.size());
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) {
        num = std::max(num, std::abs(got[i] - want[i]));
        den = std::max(den, std::abs(want[i]));
    }
    return den > 0.0 ? num / den : num;
}

}  // namespace

TEST_CASE("parameter validation") {
    CztParams p;
    p.m = 0;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
    p.m = 4;
    p.a = cplx(0.0, 0.0);
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
    CHECK_THROWS_AS(czt_params_for_band(100.0, 50.0, 8000.0, 16), std::invalid_argument);
    CHECK_THROWS_AS(czt_params_for_band(0.0, 9000.0, 8000.0, 16), std::invalid_argument);
    CHECK_THROWS_AS(czt_params_for_band(0.0, 4000.0, 8000.0, 1), std::invalid_argument);
}

TEST_CASE("band parameters start at f1 and step by the band fraction") {
    const CztParams p = czt_params_for_band(100.0, 1000.0, 8000.0, 128);
    CHECK(std::abs(p.a - std::polar(1.0, 2.0 * std::numbers::pi * 100.0 / 8000.0)) < 1e-15);
    CHECK(std::abs(p.w - std::polar(1.0, -2.0 * std::numbers::pi * 900.0 /
                                             (128.0 * 8000.0))) < 1e-15);
    CHECK_EQ(p.m, 128);
}

TEST_CASE("full-circle parameters turn the transform into the DFT") {
    std::mt19937_64 rng(1);
    for (std::size_t n : {7, 16, 100}) {
        const ComplexBuffer x = random_buf(n, rng);
        const CztParams p = czt_params_for_band(0.0, 8000.0, 8000.0, n);
        CHECK(rel_error(czt(x, p), dft_naive(x)) < 1e-9);
        CHECK(rel_error(czt_direct(x, p), dft_naive(x)) < 1e-9);
    }
}

TEST_CASE("chirp route matches the direct sum on random band configurations") {
    std::mt19937_64 rng(230);
    std::uniform_int_distribution<std::size_t> len_dist(2, 96);
    std::uniform_real_distribution<double> f_dist(0.0, 1.0);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t n = len_dist(rng);
        const std::size_t m = len_dist(rng);
        const double fs = 8000.0;
        double f1 = f_dist(rng) * 3000.0;
        double f2 = f1 + 100.0 + f_dist(rng) * (fs - f1 - 100.0);
        const CztParams p = czt_params_for_band(f1, f2, fs, std::max<std::size_t>(m, 2));
        const ComplexBuffer x = random_buf(n, rng);
        CHECK(rel_error(czt(x, p), czt_direct(x, p)) < 1e-9);
    }
}

TEST_CASE("chirp route handles off-circle spiral parameters") {
    std::mt19937_64 rng(5);
    CztParams p;
    p.a = std::polar(1.05, 0.3);
    p.w = std::polar(0.995, -0.11);
    p.m = 24;
    const ComplexBuffer x = random_buf(20, rng);
    CHECK(rel_error(czt(x, p), czt_direct(x, p)) < 1e-9);
}

TEST_CASE("plan reuse and the alloc-free path agree with fresh plans") {
    std::mt19937_64 rng(9);
    const CztParams p = czt_params_for_band(100.0, 1000.0, 8000.0, 64);
    CztPlan plan(48, p);
    CHECK_EQ(plan.input_size(), 48);
    CHECK_EQ(plan.output_size(), 64);
    CHECK_EQ(plan.conv_size(), next_pow2(48 + 64 - 1));
    ComplexBuffer scratch(plan.conv_size());
    ComplexBuffer out(plan.output_size());
    for (int rep = 0; rep < 3; ++rep) {
        const ComplexBuffer x = random_buf(48, rng);
        const ComplexBuffer want = czt(x, p);
        CHECK(rel_error(plan.execute(x), want) < 1e-12);
        plan.execute(x, scratch, out);
        CHECK(rel_error(out, want) < 1e-12);
    }
    const ComplexBuffer wrong(12);
    CHECK_THROWS_AS(plan.execute(wrong), std::invalid_argument);
    ComplexBuffer bad_scratch(3);
    const ComplexBuffer x = random_buf(48, rng);
    CHECK_THROWS_AS(plan.execute(x, bad_scratch, out), std::invalid_argument);
}

TEST_CASE("dft_any picks the right route at any length") {
    std::mt19937_64 rng(13);
    for (std::size_t n : {5, 16, 100, 128}) {
        const ComplexBuffer x = random_buf(n, rng);
        CHECK(rel_error(dft_any(x), dft_naive(x)) < 1e-9);
    }
}

TEST_CASE("band spectrum carries the band axis and the trace length") {
    Trace t;
    t.sample_rate_hz = 8000.0;
    t.samples.assign(128, 0.0);
    t.samples[3] = 1.0;
    const Spectrum s = czt_spectrum(t, 100.0, 1000.0, 128);
    REQUIRE(s.size() == 128);
    CHECK(s.f_start_hz == doctest::Approx(100.0));
    CHECK(s.f_step_hz == doctest::Approx(7.03125));
    CHECK_EQ(s.source_n, 128);
    CHECK(s.f_end_hz() == doctest::Approx(100.0 + 127.0 * 7.03125));
    // impulse at sample 3: |X(f)| = 1 everywhere
    for (const auto& v : s.bins) CHECK(std::abs(v) == doctest::Approx(1.0).epsilon(1e-9));

    CHECK_THROWS_AS(czt_spectrum(t, 100.0, 5000.0, 128), std::invalid_argument);
    CHECK_THROWS_AS(czt_spectrum(t, 1000.0, 100.0, 128), std::invalid_argument);
}
