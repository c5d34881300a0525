#include "spectra.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "czt.hpp"
#include "errors.hpp"
#include "numerics.hpp"

#include <json.hpp>

namespace spectral {

Spectrum fft_spectrum(const Trace& t, std::size_t transform_len) {
    validate_trace(t);
    const std::size_t n = t.size();
    std::size_t len = transform_len == 0 ? next_pow2(n) : transform_len;
    if (len < n)
        throw std::invalid_argument("fft_spectrum: transform length shorter than the trace");

    ComplexBuffer x(len);
    for (std::size_t i = 0; i < n; ++i) x[i] = cplx(t.samples[i], 0.0);
    ComplexBuffer bins = dft_any(x);

    Spectrum s;
    s.bins = std::move(bins);
    s.f_start_hz = 0.0;
    s.f_step_hz = t.sample_rate_hz / static_cast<double>(len);
    s.source_n = len;
    return s;
}

Spectrum slice_band(const Spectrum& s, double f_lo_hz, double f_hi_hz) {
    if (s.bins.empty()) throw std::invalid_argument("slice_band: empty spectrum");
    if (!(s.f_step_hz > 0.0)) throw std::invalid_argument("slice_band: non-positive step");
    if (!(f_lo_hz <= f_hi_hz)) throw std::invalid_argument("slice_band: inverted band");
    const double eps = 0.5 * s.f_step_hz * 1e-9;
    const double lo = (f_lo_hz - s.f_start_hz) / s.f_step_hz;
    const double hi = (f_hi_hz - s.f_start_hz) / s.f_step_hz;
    const long k_lo = static_cast<long>(std::ceil(lo - eps));
    const long k_hi = static_cast<long>(std::floor(hi + eps));
    const long last = static_cast<long>(s.bins.size()) - 1;
    const long a = std::max(k_lo, 0L);
    const long b = std::min(k_hi, last);
    if (a > b)
        throw std::invalid_argument("slice_band: no bins fall inside the requested band");

    Spectrum out;
    out.bins.assign(s.bins.begin() + a, s.bins.begin() + b + 1);
    out.f_start_hz = s.frequency(static_cast<std::size_t>(a));
    out.f_step_hz = s.f_step_hz;
    out.source_n = s.source_n;
    return out;
}

void write_spectrum_csv(const Spectrum& s, std::ostream& out) {
    out << "frequency_hz,re,im,magnitude_db\n";
    char buf[160];
    for (std::size_t k = 0; k < s.bins.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", s.frequency(k),
                      s.bins[k].real(), s.bins[k].imag(), magnitude_db(s.bins[k]));
        out << buf;
    }
    if (!out) throw IoError("spectrum csv: write failed");
}

void write_spectrum_csv_file(const Spectrum& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open spectrum file for writing: " + path);
    write_spectrum_csv(s, out);
}

namespace {

bool parse_field(std::string_view field, double& out) {
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t'))
        field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t'))
        field.remove_suffix(1);
    if (field.empty()) return false;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
    return ec == std::errc{} && ptr == field.data() + field.size();
}

}  // namespace

Spectrum read_spectrum_csv(std::istream& in, const std::string& origin) {
    std::vector<double> freqs;
    ComplexBuffer bins;
    std::string line;
    std::size_t line_no = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;

        double vals[4];
        std::string_view rest(line);
        bool ok = true;
        for (int c = 0; c < 4 && ok; ++c) {
            const std::size_t comma = rest.find(',');
            std::string_view field =
                c < 3 ? rest.substr(0, comma) : rest;
            if (c < 3) {
                if (comma == std::string_view::npos) { ok = false; break; }
                rest = rest.substr(comma + 1);
            } else if (comma != std::string_view::npos) {
                ok = false;
                break;
            }
            ok = parse_field(field, vals[c]);
        }
        if (!ok) {
            if (first_content) {  // header row
                first_content = false;
                continue;
            }
            throw ParseError(origin + ": malformed row at line " + std::to_string(line_no),
                             line_no);
        }
        first_content = false;
        freqs.push_back(vals[0]);
        bins.emplace_back(vals[1], vals[2]);
    }
    if (bins.empty()) throw FormatError(origin + ": no spectrum rows");

    Spectrum s;
    s.f_start_hz = freqs.front();
    if (bins.size() == 1) {
        s.f_step_hz = 0.0;
    } else {
        const double step =
            (freqs.back() - freqs.front()) / static_cast<double>(freqs.size() - 1);
        if (!(step > 0.0))
            throw FormatError(origin + ": frequency axis is not increasing");
        for (std::size_t k = 0; k + 1 < freqs.size(); ++k)
            if (std::abs(freqs[k + 1] - freqs[k] - step) > 1e-6 * step)
                throw FormatError(origin + ": non-uniform frequency step near row " +
                                  std::to_string(k + 1));
        s.f_step_hz = step;
    }
    s.bins = std::move(bins);
    s.source_n = s.bins.size();
    return s;
}

Spectrum read_spectrum_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open spectrum file: " + path);
    return read_spectrum_csv(in, path);
}

void write_spectrum_json(const Spectrum& s, std::ostream& out) {
    nlohmann::json j;
    j["f_start_hz"] = s.f_start_hz;
    j["f_step_hz"] = s.f_step_hz;
    j["source_n"] = s.source_n;
    auto& re = j["re"] = nlohmann::json::array();
    auto& im = j["im"] = nlohmann::json::array();
    auto& db = j["magnitude_db"] = nlohmann::json::array();
    for (const cplx& b : s.bins) {
        re.push_back(b.real());
        im.push_back(b.imag());
        db.push_back(magnitude_db(b));
    }
    out << j.dump(2) << '\n';
    if (!out) throw IoError("spectrum json: write failed");
}

void write_spectrum_json_file(const Spectrum& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open spectrum file for writing: " + path);
    write_spectrum_json(s, out);
}

}  // namespace spectral
