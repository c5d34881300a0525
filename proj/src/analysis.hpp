#pragma once

#include <cstddef>
#include <vector>

#include "types.hpp"

namespace spectral {

// Outcome of the two-tone valley test.  Peaks are the local maxima nearest
// the nominal tone frequencies; the valley is the magnitude minimum strictly
// between them.  resolved means the valley dips below the weaker peak.  When
// both tones collapse onto the same or adjacent bins there is no valley and
// dip_db is pinned to zero.
struct DipMetric {
    bool resolved = false;
    double dip_db = 0.0;  // 20*log10(weaker peak / valley); +inf for a zero valley
    double f_peak_a_hz = 0.0;
    double peak_a_db = 0.0;
    double f_peak_b_hz = 0.0;
    double peak_b_db = 0.0;
    double f_valley_hz = 0.0;
    double valley_db = 0.0;
};

// f_a < f_b must both lie on the spectrum's axis; fewer than 3 bins between
// them raises InsufficientResolutionError since no valley can exist.
DipMetric dip_metric(const Spectrum& s, double f_a_hz, double f_b_hz);

struct ScanConfig {
    double sample_rate_hz = 8000.0;
    std::size_t n = 128;         // time-domain record length
    double f1_hz = 100.0;        // analysis band
    double f2_hz = 1000.0;
    std::size_t m = 128;         // band bins on the chirp route
    double center_hz = 0.0;      // tone pair midpoint; 0 means the band midpoint
    double sep_start_hz = 10.0;
    double sep_stop_hz = 200.0;
    double sep_step_hz = 5.0;
};

// Two routes per separation: a full-range transform padded so its bin step
// matches the band transform's step, then sliced to the band, versus the band
// transform itself.  Separations run start..stop inclusive.
struct ResolvabilityCurve {
    ScanConfig config;
    std::vector<double> separations_hz;
    std::vector<DipMetric> fft_metrics;
    std::vector<DipMetric> czt_metrics;
    double min_resolved_fft_hz = 0.0;  // NaN when nothing resolved
    double min_resolved_czt_hz = 0.0;
    std::size_t fft_len = 0;  // padded full-range transform length
};

ResolvabilityCurve resolvability_scan(const ScanConfig& cfg);

// Pointwise dB deviation of b against a over their common band.  b's
// magnitude is interpolated linearly onto a's bins before taking dB.
struct ComparisonReport {
    double max_abs_db = 0.0;
    double rms_db = 0.0;
    std::size_t n_points = 0;
    double f_lo_hz = 0.0;  // overlap actually compared
    double f_hi_hz = 0.0;
    std::vector<double> freqs_hz;
    std::vector<double> a_db;
    std::vector<double> b_db;
    std::vector<double> delta_db;
};

// Pass 0 for f_lo/f_hi to compare over the full overlap of the two axes.
ComparisonReport compare_spectra(const Spectrum& a, const Spectrum& b,
                                 double f_lo_hz = 0.0, double f_hi_hz = 0.0);

}  // namespace spectral
