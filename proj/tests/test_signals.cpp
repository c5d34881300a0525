#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"
#include "signals.hpp"

using namespace spectral;

TEST_CASE("two-tone generator evaluates the stated sum") {
    TwoToneSpec spec;
    spec.f_a_hz = 475.0;
    spec.f_b_hz = 525.0;
    spec.amp_a = 2.0;
    spec.phase_a_rad = std::numbers::pi / 2.0;
    const Trace t = gen_two_tone(spec);
    REQUIRE(t.size() == 128);
    CHECK(t.sample_rate_hz == doctest::Approx(8000.0));
    for (std::size_t i : {std::size_t{0}, std::size_t{17}, std::size_t{127}}) {
        const double ti = double(i) / 8000.0;
        const double want =
            2.0 * std::sin(2.0 * std::numbers::pi * 475.0 * ti + std::numbers::pi / 2.0) +
            std::sin(2.0 * std::numbers::pi * 525.0 * ti);
        CHECK(t.samples[i] == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("two-tone generator rejects tones at or above Nyquist") {
    TwoToneSpec spec;
    spec.f_b_hz = 4000.0;
    CHECK_THROWS_AS(gen_two_tone(spec), std::invalid_argument);
    spec.f_b_hz = 525.0;
    spec.n = 1;
    CHECK_THROWS_AS(gen_two_tone(spec), std::invalid_argument);
}

TEST_CASE("gaussian-derivative pulse peaks at the stated amplitude") {
    const ThzPulseSpec spec;  // 10 ps center, 300 fs width, 10 THz rate, 500 samples
    const Trace t = gen_thz_pulse(spec);
    REQUIRE(t.size() == 500);
    // u = +-1 falls exactly on samples 97 and 103 for this grid
    CHECK(t.samples[97] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(t.samples[103] == doctest::Approx(-1.0).epsilon(1e-13));
    double peak = 0.0, sum = 0.0;
    for (double v : t.samples) {
        peak = std::max(peak, std::abs(v));
        sum += v;
    }
    CHECK(peak == doctest::Approx(1.0).epsilon(1e-13));
    // odd symmetry about the center makes the series sum vanish
    CHECK(std::abs(sum) < 1e-10);
}

TEST_CASE("double-exponential pulse is causal and peak-normalized") {
    ThzPulseSpec spec;
    spec.model = PulseModel::double_exponential;
    spec.amplitude = 3.0;
    const Trace t = gen_thz_pulse(spec);
    for (std::size_t i = 0; i < 100; ++i) CHECK(t.samples[i] == 0.0);
    double peak = 0.0;
    for (double v : t.samples) {
        CHECK(v >= 0.0);
        peak = std::max(peak, v);
    }
    CHECK(peak <= 3.0 * (1.0 + 1e-12));
    CHECK(peak > 2.7);  // the grid lands near the analytic maximum
}

TEST_CASE("pulse must fit the record") {
    ThzPulseSpec spec;
    spec.center_time_s = 1e-12;  // 5 widths reach below t = 0
    CHECK_THROWS_AS(gen_thz_pulse(spec), std::invalid_argument);
    spec.center_time_s = 49.5e-12;  // and above the record end
    CHECK_THROWS_AS(gen_thz_pulse(spec), std::invalid_argument);
}

TEST_CASE("noise is deterministic per seed and absent at zero deviation") {
    const Trace base = gen_two_tone(TwoToneSpec{});
    const Trace a = add_noise(base, 0.1, 7);
    const Trace b = add_noise(base, 0.1, 7);
    const Trace c = add_noise(base, 0.1, 8);
    REQUIRE(a.size() == base.size());
    bool same_ab = true, same_ac = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        same_ab = same_ab && a.samples[i] == b.samples[i];
        same_ac = same_ac && a.samples[i] == c.samples[i];
    }
    CHECK(same_ab);
    CHECK(!same_ac);

    const Trace clean = add_noise(base, 0.0, 7);
    for (std::size_t i = 0; i < clean.size(); ++i)
        CHECK(clean.samples[i] == base.samples[i]);

    CHECK_THROWS_AS(add_noise(base, -0.1, 7), std::invalid_argument);
}

TEST_CASE("noise deviation is near the requested level") {
    TwoToneSpec spec;
    spec.n = 20000;
    const Trace base = gen_two_tone(spec);
    const Trace noisy = add_noise(base, 0.1, 42);
    double sq = 0.0;
    for (std::size_t i = 0; i < base.size(); ++i) {
        const double d = noisy.samples[i] - base.samples[i];
        sq += d * d;
    }
    const double sd = std::sqrt(sq / double(base.size()));
    CHECK(sd == doctest::Approx(0.1).epsilon(0.05));
}

TEST_CASE("trace csv round-trips exactly") {
    const Trace t = gen_thz_pulse(ThzPulseSpec{});
    std::stringstream ss;
    write_trace_csv(t, ss);
    const Trace back = read_trace_csv(ss);
    REQUIRE(back.size() == t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        CHECK(back.samples[i] == t.samples[i]);
    CHECK(back.sample_rate_hz == doctest::Approx(t.sample_rate_hz).epsilon(1e-9));
    CHECK(back.t0_s == doctest::Approx(t.t0_s).epsilon(1e-12));
}

TEST_CASE("trace csv reader accepts headerless input, CRLF and blank lines") {
    std::stringstream ss("0,1\r\n\n0.001,2\r\n0.002,3\n");
    const Trace t = read_trace_csv(ss);
    REQUIRE(t.size() == 3);
    CHECK(t.sample_rate_hz == doctest::Approx(1000.0));
    CHECK(t.samples[1] == 2.0);
}

TEST_CASE("trace csv reader reports malformed rows with their line number") {
    std::stringstream ss("time_s,amplitude\n0,1\nnot a row\n");
    try {
        read_trace_csv(ss);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK_EQ(e.line, 3);
    }
}

TEST_CASE("trace csv reader rejects structural problems") {
    std::stringstream only_header("time_s,amplitude\n");
    CHECK_THROWS_AS(read_trace_csv(only_header), FormatError);
    std::stringstream one_row("0,1\n");
    CHECK_THROWS_AS(read_trace_csv(one_row), FormatError);
    std::stringstream jitter("0,1\n1,2\n3,3\n");
    CHECK_THROWS_AS(read_trace_csv(jitter), FormatError);
    std::stringstream reversed("2,1\n1,2\n0,3\n");
    CHECK_THROWS_AS(read_trace_csv(reversed), FormatError);
    CHECK_THROWS_AS(read_trace_csv_file("/nonexistent/trace.csv"), IoError);
}
