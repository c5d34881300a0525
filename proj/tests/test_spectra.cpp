#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "czt.hpp"
#include "errors.hpp"
#include "signals.hpp"
#include "spectra.hpp"
#include "types.hpp"

using namespace spectral;

namespace {

Trace impulse_trace(std::size_t n, double fs) {
    Trace t;
    t.sample_rate_hz = fs;
    t.samples.assign(n, 0.0);
    t.samples[0] = 1.0;
    return t;
}

}  // namespace

TEST_CASE("magnitude_db floors at -300 dB") {
    CHECK(magnitude_db(1.0) == doctest::Approx(0.0));
    CHECK(magnitude_db(10.0) == doctest::Approx(20.0));
    CHECK(magnitude_db(cplx(0.0, 0.1)) == doctest::Approx(-20.0));
    CHECK(magnitude_db(0.0) == doctest::Approx(-300.0));
}

TEST_CASE("fft_spectrum pads to the next power of two by default") {
    const Trace t = gen_thz_pulse(ThzPulseSpec{});  // 500 samples at 10 THz
    const Spectrum s = fft_spectrum(t);
    REQUIRE(s.size() == 512);
    CHECK_EQ(s.source_n, 512);
    CHECK(s.f_start_hz == 0.0);
    CHECK(s.f_step_hz == doctest::Approx(10e12 / 512.0));
    // bin 0 is the plain sample sum
    double sum = 0.0;
    for (double v : t.samples) sum += v;
    CHECK(s.bins[0].real() == doctest::Approx(sum).epsilon(1e-9));
    CHECK(std::abs(s.bins[0].imag()) < 1e-6);
}

TEST_CASE("fft_spectrum honors an exact non power-of-two length") {
    const Trace t = impulse_trace(500, 10e12);
    const Spectrum s = fft_spectrum(t, 500);
    REQUIRE(s.size() == 500);
    CHECK_EQ(s.source_n, 500);
    CHECK(s.f_step_hz == doctest::Approx(20e9));
    for (const auto& v : s.bins)
        CHECK(std::abs(v) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(fft_spectrum(t, 499), std::invalid_argument);
}

TEST_CASE("slice_band keeps inclusive edges and the source length") {
    Spectrum s;
    s.f_start_hz = 0.0;
    s.f_step_hz = 10.0;
    s.source_n = 64;
    for (int k = 0; k < 11; ++k) s.bins.push_back(cplx(double(k), 0.0));

    const Spectrum cut = slice_band(s, 20.0, 50.0);
    REQUIRE(cut.size() == 4);  // 20, 30, 40, 50
    CHECK(cut.f_start_hz == doctest::Approx(20.0));
    CHECK(cut.bins[0].real() == doctest::Approx(2.0));
    CHECK(cut.bins[3].real() == doctest::Approx(5.0));
    CHECK_EQ(cut.source_n, 64);

    const Spectrum clamped = slice_band(s, -100.0, 1e9);
    CHECK_EQ(clamped.size(), s.size());
}

TEST_CASE("slice_band rejects empty windows") {
    Spectrum s;
    s.f_start_hz = 0.0;
    s.f_step_hz = 10.0;
    for (int k = 0; k < 5; ++k) s.bins.push_back(cplx(1.0, 0.0));
    CHECK_THROWS_AS(slice_band(s, 42.0, 47.0), std::invalid_argument);
    CHECK_THROWS_AS(slice_band(s, 50.0, 40.0), std::invalid_argument);
    CHECK_THROWS_AS(slice_band(s, 500.0, 600.0), std::invalid_argument);
}

TEST_CASE("spectrum csv round-trips bins exactly") {
    const Trace t = gen_two_tone(TwoToneSpec{});
    const Spectrum s = fft_spectrum(t);
    std::stringstream ss;
    write_spectrum_csv(s, ss);
    const Spectrum back = read_spectrum_csv(ss);
    REQUIRE(back.size() == s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        CHECK(back.bins[k].real() == s.bins[k].real());
        CHECK(back.bins[k].imag() == s.bins[k].imag());
    }
    CHECK(back.f_start_hz == s.f_start_hz);
    CHECK(back.f_step_hz == doctest::Approx(s.f_step_hz).epsilon(1e-9));
}

TEST_CASE("spectrum csv reader diagnostics") {
    std::stringstream bad("frequency_hz,re,im,magnitude_db\n0,1,0,0\nbroken\n");
    try {
        read_spectrum_csv(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK_EQ(e.line, 3);
    }
    std::stringstream empty("frequency_hz,re,im,magnitude_db\n");
    CHECK_THROWS_AS(read_spectrum_csv(empty), FormatError);
    std::stringstream jitter("0,1,0,0\n10,1,0,0\n25,1,0,0\n");
    CHECK_THROWS_AS(read_spectrum_csv(jitter), FormatError);
    std::stringstream falling("20,1,0,0\n10,1,0,0\n0,1,0,0\n");
    CHECK_THROWS_AS(read_spectrum_csv(falling), FormatError);
    CHECK_THROWS_AS(read_spectrum_csv_file("/nonexistent/spec.csv"), IoError);

    std::stringstream single("100,1,-1,3\n");
    const Spectrum one = read_spectrum_csv(single);
    REQUIRE(one.size() == 1);
    CHECK(one.f_start_hz == doctest::Approx(100.0));
    CHECK(one.f_step_hz == 0.0);
}

TEST_CASE("spectrum json carries axis metadata and parallel arrays") {
    const Trace t = gen_two_tone(TwoToneSpec{});
    const Spectrum s = slice_band(fft_spectrum(t), 0.0, 4000.0);
    std::stringstream ss;
    write_spectrum_json(s, ss);
    const auto j = nlohmann::json::parse(ss.str());
    CHECK(j["f_start_hz"].get<double>() == s.f_start_hz);
    CHECK(j["f_step_hz"].get<double>() == doctest::Approx(s.f_step_hz));
    CHECK_EQ(j["source_n"].get<std::size_t>(), s.source_n);
    REQUIRE(j["re"].size() == s.size());
    REQUIRE(j["im"].size() == s.size());
    REQUIRE(j["magnitude_db"].size() == s.size());
    CHECK(j["re"][3].get<double>() == s.bins[3].real());
}
