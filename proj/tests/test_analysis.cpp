#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "analysis.hpp"
#include "errors.hpp"
#include "signals.hpp"
#include "spectra.hpp"
#include "types.hpp"

using namespace spectral;

namespace {

Spectrum make_spectrum(std::initializer_list<double> mags, double f_start = 0.0,
                       double step = 1.0) {
    Spectrum s;
    s.f_start_hz = f_start;
    s.f_step_hz = step;
    for (double m : mags) s.bins.push_back(cplx(m, 0.0));
    s.source_n = s.bins.size();
    return s;
}

}  // namespace

TEST_CASE("dip_metric finds two peaks and the valley between them") {
    const Spectrum s = make_spectrum({0.1, 1.0, 3.0, 1.0, 3.0, 1.0, 0.1});
    const DipMetric m = dip_metric(s, 2.0, 4.0);
    CHECK(m.resolved);
    CHECK(m.dip_db == doctest::Approx(20.0 * std::log10(3.0)).epsilon(1e-9));
    CHECK(m.f_peak_a_hz == doctest::Approx(2.0));
    CHECK(m.f_peak_b_hz == doctest::Approx(4.0));
    CHECK(m.f_valley_hz == doctest::Approx(3.0));
}

TEST_CASE("tones collapsing onto one peak are unresolved with zero dip") {
    const Spectrum s = make_spectrum({0.1, 0.2, 0.5, 2.0, 5.0, 2.0, 0.5, 0.2, 0.1});
    const DipMetric m = dip_metric(s, 2.0, 6.0);
    CHECK(!m.resolved);
    CHECK(m.dip_db == 0.0);
    CHECK(m.f_peak_a_hz == doctest::Approx(4.0));
    CHECK(m.f_peak_b_hz == doctest::Approx(4.0));
}

TEST_CASE("adjacent-bin maxima leave no room for a valley") {
    const Spectrum s = make_spectrum({0.1, 1.0, 5.0, 5.0, 1.0, 0.1});
    const DipMetric m = dip_metric(s, 1.0, 4.0);
    CHECK(!m.resolved);
    CHECK(m.dip_db == 0.0);
}

TEST_CASE("a zero valley yields an infinite dip") {
    const Spectrum s = make_spectrum({0.1, 4.0, 0.0, 4.0, 0.1});
    const DipMetric m = dip_metric(s, 1.0, 3.0);
    CHECK(m.resolved);
    CHECK(std::isinf(m.dip_db));
}

TEST_CASE("a flat spectrum resolves nothing") {
    const Spectrum s = make_spectrum({2.0, 2.0, 2.0, 2.0, 2.0});
    const DipMetric m = dip_metric(s, 1.0, 3.0);
    CHECK(!m.resolved);
    CHECK(m.dip_db == 0.0);
    CHECK(m.f_peak_a_hz == 0.0);  // untouched default
}

TEST_CASE("dip_metric argument checks") {
    const Spectrum s = make_spectrum({0.1, 1.0, 3.0, 1.0, 3.0, 1.0, 0.1}, 100.0, 10.0);
    // fewer than 3 bins spanning the tones
    CHECK_THROWS_AS(dip_metric(s, 114.0, 126.0), InsufficientResolutionError);
    // off the axis / inverted
    CHECK_THROWS_AS(dip_metric(s, 50.0, 140.0), std::invalid_argument);
    CHECK_THROWS_AS(dip_metric(s, 140.0, 120.0), std::invalid_argument);
    Spectrum tiny = make_spectrum({1.0});
    CHECK_THROWS_AS(dip_metric(tiny, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("tones one Rayleigh spacing apart dip by the classic amount") {
    // fs/N = 62.5 Hz separation around 500 Hz, transform padded to 2048
    TwoToneSpec spec;
    spec.f_a_hz = 500.0 - 31.25;
    spec.f_b_hz = 500.0 + 31.25;
    const Trace t = gen_two_tone(spec);
    const Spectrum s = fft_spectrum(t, 2048);
    const DipMetric m = dip_metric(s, spec.f_a_hz, spec.f_b_hz);
    CHECK(m.resolved);
    CHECK(std::abs(m.dip_db - 29.06) < 0.5);
    CHECK(std::abs(m.f_valley_hz - 500.0) < 2.0 * s.f_step_hz);
}

TEST_CASE("resolvability scan around the band midpoint") {
    ScanConfig cfg;
    cfg.center_hz = 500.0;
    cfg.sep_start_hz = 30.0;
    cfg.sep_stop_hz = 60.0;
    cfg.sep_step_hz = 10.0;
    const ResolvabilityCurve curve = resolvability_scan(cfg);
    REQUIRE(curve.separations_hz.size() == 4);
    REQUIRE(curve.fft_metrics.size() == 4);
    REQUIRE(curve.czt_metrics.size() == 4);
    CHECK_EQ(curve.fft_len, 1138);
    CHECK(curve.config.center_hz == doctest::Approx(500.0));

    // 30 Hz apart: still one lobe on both routes
    CHECK(!curve.fft_metrics[0].resolved);
    CHECK(!curve.czt_metrics[0].resolved);
    // 40 Hz apart: a first shallow valley appears on both routes
    CHECK(curve.fft_metrics[1].resolved);
    CHECK(curve.czt_metrics[1].resolved);
    CHECK(curve.fft_metrics[1].dip_db > 0.0);
    CHECK(curve.fft_metrics[1].dip_db < 0.5);
    CHECK(curve.czt_metrics[1].dip_db > 0.0);
    CHECK(curve.czt_metrics[1].dip_db < 0.5);

    CHECK(curve.min_resolved_fft_hz == doctest::Approx(40.0));
    CHECK(curve.min_resolved_czt_hz == doctest::Approx(40.0));
    CHECK(curve.min_resolved_czt_hz >= curve.min_resolved_fft_hz);
}

TEST_CASE("scan reports nothing resolved as NaN") {
    ScanConfig cfg;
    cfg.center_hz = 500.0;
    cfg.sep_start_hz = 10.0;
    cfg.sep_stop_hz = 15.0;
    cfg.sep_step_hz = 5.0;
    const ResolvabilityCurve curve = resolvability_scan(cfg);
    CHECK(std::isnan(curve.min_resolved_fft_hz));
    CHECK(std::isnan(curve.min_resolved_czt_hz));
}

TEST_CASE("scan validation") {
    ScanConfig wide;
    wide.center_hz = 950.0;  // widest pair would leave the band
    CHECK_THROWS_AS(resolvability_scan(wide), std::invalid_argument);
    ScanConfig bad_band;
    bad_band.f2_hz = 5000.0;
    CHECK_THROWS_AS(resolvability_scan(bad_band), std::invalid_argument);
    ScanConfig bad_sweep;
    bad_sweep.sep_step_hz = -5.0;
    CHECK_THROWS_AS(resolvability_scan(bad_sweep), std::invalid_argument);
}

TEST_CASE("compare_spectra on identical spectra is zero everywhere") {
    const Trace t = gen_two_tone(TwoToneSpec{});
    const Spectrum s = slice_band(fft_spectrum(t), 0.0, 4000.0);
    const ComparisonReport r = compare_spectra(s, s);
    CHECK_EQ(r.n_points, s.size());
    CHECK(r.max_abs_db == doctest::Approx(0.0));
    CHECK(r.rms_db == doctest::Approx(0.0));
}

TEST_CASE("compare_spectra measures a constant gain directly") {
    Spectrum a = make_spectrum({1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0, 11.0});
    Spectrum b = a;
    for (auto& v : b.bins) v *= 2.0;
    const ComparisonReport r = compare_spectra(a, b);
    const double want = -20.0 * std::log10(2.0);
    CHECK(r.max_abs_db == doctest::Approx(-want).epsilon(1e-9));
    CHECK(r.rms_db == doctest::Approx(-want).epsilon(1e-9));
    for (double d : r.delta_db) CHECK(d == doctest::Approx(want).epsilon(1e-9));

    const ComparisonReport band = compare_spectra(a, b, 3.0, 7.0);
    CHECK_EQ(band.n_points, 5);
    CHECK(band.f_lo_hz == doctest::Approx(3.0));
    CHECK(band.f_hi_hz == doctest::Approx(7.0));
}

TEST_CASE("compare_spectra needs overlapping axes") {
    Spectrum a = make_spectrum({1.0, 1.0, 1.0}, 0.0, 1.0);
    Spectrum b = make_spectrum({1.0, 1.0, 1.0}, 100.0, 1.0);
    CHECK_THROWS_AS(compare_spectra(a, b), std::invalid_argument);
}
