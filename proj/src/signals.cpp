#include "signals.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "errors.hpp"

namespace spectral {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

Trace gen_two_tone(const TwoToneSpec& spec) {
    if (!(spec.sample_rate_hz > 0.0))
        throw std::invalid_argument("gen_two_tone: sample rate must be positive");
    if (spec.n < 2) throw std::invalid_argument("gen_two_tone: need at least 2 samples");
    const double nyq = spec.sample_rate_hz / 2.0;
    if (!(spec.f_a_hz >= 0.0) || !(spec.f_b_hz >= 0.0) || spec.f_a_hz >= nyq ||
        spec.f_b_hz >= nyq)
        throw std::invalid_argument("gen_two_tone: tone frequencies must lie in [0, fs/2)");
    for (double v : {spec.amp_a, spec.amp_b, spec.phase_a_rad, spec.phase_b_rad})
        if (!std::isfinite(v)) throw std::invalid_argument("gen_two_tone: non-finite parameter");

    Trace t;
    t.sample_rate_hz = spec.sample_rate_hz;
    t.samples.resize(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
        const double ti = static_cast<double>(i) / spec.sample_rate_hz;
        t.samples[i] = spec.amp_a * std::sin(two_pi * spec.f_a_hz * ti + spec.phase_a_rad) +
                       spec.amp_b * std::sin(two_pi * spec.f_b_hz * ti + spec.phase_b_rad);
    }
    return t;
}

Trace gen_thz_pulse(const ThzPulseSpec& spec) {
    if (!(spec.sample_rate_hz > 0.0))
        throw std::invalid_argument("gen_thz_pulse: sample rate must be positive");
    if (spec.n < 2) throw std::invalid_argument("gen_thz_pulse: need at least 2 samples");
    if (!(spec.pulse_width_s > 0.0))
        throw std::invalid_argument("gen_thz_pulse: pulse width must be positive");
    if (!std::isfinite(spec.amplitude))
        throw std::invalid_argument("gen_thz_pulse: non-finite amplitude");
    const double span = static_cast<double>(spec.n) / spec.sample_rate_hz;
    if (spec.center_time_s - 5.0 * spec.pulse_width_s < 0.0 ||
        spec.center_time_s + 5.0 * spec.pulse_width_s > span)
        throw std::invalid_argument(
            "gen_thz_pulse: pulse does not fit the record (center +- 5 widths must lie "
            "within 0.." + std::to_string(span) + " s)");

    Trace t;
    t.sample_rate_hz = spec.sample_rate_hz;
    t.samples.resize(spec.n);
    if (spec.model == PulseModel::gaussian_derivative) {
        // -A * u * exp(-u^2/2) * sqrt(e), peak |amplitude| at u = -+1
        const double scale = spec.amplitude * std::exp(0.5);
        for (std::size_t i = 0; i < spec.n; ++i) {
            const double ti = static_cast<double>(i) / spec.sample_rate_hz;
            const double u = (ti - spec.center_time_s) / spec.pulse_width_s;
            t.samples[i] = -scale * u * std::exp(-0.5 * u * u);
        }
    } else {
        const double tau_fall = spec.pulse_width_s;
        const double tau_rise = spec.pulse_width_s / 4.0;
        // peak of exp(-s/tf) - exp(-s/tr) sits at s* = ln(tf/tr)*tf*tr/(tf-tr)
        const double s_peak =
            std::log(tau_fall / tau_rise) * tau_fall * tau_rise / (tau_fall - tau_rise);
        const double peak = std::exp(-s_peak / tau_fall) - std::exp(-s_peak / tau_rise);
        const double scale = spec.amplitude / peak;
        for (std::size_t i = 0; i < spec.n; ++i) {
            const double ti = static_cast<double>(i) / spec.sample_rate_hz;
            const double s = ti - spec.center_time_s;
            t.samples[i] =
                s < 0.0 ? 0.0 : scale * (std::exp(-s / tau_fall) - std::exp(-s / tau_rise));
        }
    }
    return t;
}

Trace add_noise(const Trace& t, double std_dev, std::uint64_t seed) {
    validate_trace(t);
    if (!(std_dev >= 0.0)) throw std::invalid_argument("add_noise: deviation must be >= 0");
    Trace out = t;
    if (std_dev == 0.0) return out;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, std_dev);
    for (double& v : out.samples) v += dist(rng);
    return out;
}

namespace {

bool parse_double(std::string_view field, double& out) {
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t'))
        field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t'))
        field.remove_suffix(1);
    if (field.empty()) return false;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

bool parse_row(const std::string& line, double& t, double& x) {
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) return false;
    if (line.find(',', comma + 1) != std::string::npos) return false;
    return parse_double(std::string_view(line).substr(0, comma), t) &&
           parse_double(std::string_view(line).substr(comma + 1), x);
}

}  // namespace

Trace read_trace_csv(std::istream& in, const std::string& origin) {
    std::vector<double> times, values;
    std::string line;
    std::size_t line_no = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        double t = 0.0, x = 0.0;
        if (!parse_row(line, t, x)) {
            if (first_content) {  // optional header
                first_content = false;
                continue;
            }
            throw ParseError(origin + ": malformed row at line " + std::to_string(line_no),
                             line_no);
        }
        first_content = false;
        times.push_back(t);
        values.push_back(x);
    }
    if (times.size() < 2)
        throw FormatError(origin + ": need at least 2 samples to infer the sample rate");

    std::vector<double> steps(times.size() - 1);
    for (std::size_t i = 0; i + 1 < times.size(); ++i) steps[i] = times[i + 1] - times[i];
    std::vector<double> sorted = steps;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    const double median = sorted[sorted.size() / 2];
    if (!(median > 0.0))
        throw FormatError(origin + ": time column is not strictly increasing");
    for (std::size_t i = 0; i < steps.size(); ++i)
        if (std::abs(steps[i] - median) > 1e-6 * median)
            throw FormatError(origin + ": non-uniform time step between rows " +
                              std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                              " (got " + std::to_string(steps[i]) + " s, expected " +
                              std::to_string(median) + " s)");

    Trace t;
    t.samples = std::move(values);
    t.sample_rate_hz = 1.0 / median;
    t.t0_s = times.front();
    validate_trace(t);
    return t;
}

Trace read_trace_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open trace file: " + path);
    return read_trace_csv(in, path);
}

void write_trace_csv(const Trace& t, std::ostream& out) {
    validate_trace(t);
    out << "time_s,amplitude\n";
    char buf[96];
    const double dt = 1.0 / t.sample_rate_hz;
    for (std::size_t i = 0; i < t.samples.size(); ++i) {
        const double ti = t.t0_s + static_cast<double>(i) * dt;
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", ti, t.samples[i]);
        out << buf;
    }
    if (!out) throw IoError("trace csv: write failed");
}

void write_trace_csv_file(const Trace& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open trace file for writing: " + path);
    write_trace_csv(t, out);
}

}  // namespace spectral
