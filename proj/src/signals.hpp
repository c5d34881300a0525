#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "types.hpp"

namespace spectral {

struct TwoToneSpec {
    double f_a_hz = 475.0;
    double f_b_hz = 525.0;
    double amp_a = 1.0;
    double amp_b = 1.0;
    double phase_a_rad = 0.0;
    double phase_b_rad = 0.0;
    double sample_rate_hz = 8000.0;
    std::size_t n = 128;
};

enum class PulseModel { gaussian_derivative, double_exponential };

struct ThzPulseSpec {
    double pulse_width_s = 300e-15;
    double center_time_s = 10e-12;
    double amplitude = 1.0;
    double sample_rate_hz = 10e12;
    std::size_t n = 500;
    PulseModel model = PulseModel::gaussian_derivative;
};

// amp_a*sin(2*pi*f_a*t + ph_a) + amp_b*sin(2*pi*f_b*t + ph_b); both tone
// frequencies must sit below fs/2.
Trace gen_two_tone(const TwoToneSpec& spec);

// Single-cycle pulse normalized to peak |amplitude|. The default model is
// the first derivative of a Gaussian (width = the Gaussian sigma); the
// double_exponential model is a causal fast-rise/slow-decay pulse. The
// pulse must fit the record: center +- 5 widths within [0, n/fs].
Trace gen_thz_pulse(const ThzPulseSpec& spec);

// Copy of t with white Gaussian noise of the given deviation, seeded.
Trace add_noise(const Trace& t, double std_dev, std::uint64_t seed);

// Two-column CSV (time_s,amplitude), header optional on read, written
// with 17 significant digits so samples round-trip exactly. The sample
// rate is inferred from the median time step; any step deviating from it
// by more than 1e-6 relative raises FormatError.
Trace read_trace_csv(std::istream& in, const std::string& origin = "trace csv");
Trace read_trace_csv_file(const std::string& path);
void write_trace_csv(const Trace& t, std::ostream& out);
void write_trace_csv_file(const Trace& t, const std::string& path);

}  // namespace spectral
