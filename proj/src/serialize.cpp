#include "serialize.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "errors.hpp"

namespace spectral {

namespace {

using nlohmann::json;

void dump(const json& j, std::ostream& out, const char* what) {
    out << j.dump(2) << '\n';
    if (!out) throw IoError(std::string(what) + ": write failed");
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    return out;
}

json metric_json(const DipMetric& m) {
    return json{{"resolved", m.resolved},
                {"dip_db", m.dip_db},
                {"f_peak_a_hz", m.f_peak_a_hz},
                {"peak_a_db", m.peak_a_db},
                {"f_peak_b_hz", m.f_peak_b_hz},
                {"peak_b_db", m.peak_b_db},
                {"f_valley_hz", m.f_valley_hz},
                {"valley_db", m.valley_db}};
}

void metric_csv_fields(const DipMetric& m, std::ostream& out) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g",
                  m.resolved ? 1 : 0, m.dip_db, m.f_peak_a_hz, m.peak_a_db, m.f_peak_b_hz,
                  m.peak_b_db, m.f_valley_hz, m.valley_db);
    out << buf;
}

}  // namespace

void write_bench_json(const BenchReport& r, std::ostream& out) {
    json j;
    j["v"] = 1;
    j["environment"] = r.environment;
    j["config"] = {{"sample_rate_hz", r.config.sample_rate_hz},
                   {"trace_len", r.config.trace_len},
                   {"f1_hz", r.config.f1_hz},
                   {"f2_hz", r.config.f2_hz},
                   {"zoom_decimation", r.config.zoom_decimation},
                   {"res_start_hz", r.config.res_start_hz},
                   {"res_step_hz", r.config.res_step_hz},
                   {"res_count", r.config.res_count},
                   {"warmup", r.config.warmup},
                   {"reps", r.config.reps},
                   {"include_plan", r.config.include_plan},
                   {"pin_cpu", r.config.pin_cpu}};
    auto& pts = j["points"] = json::array();
    for (const BenchPoint& p : r.points) {
        pts.push_back({{"method", bench_method_name(p.method)},
                       {"resolution_hz", p.resolution_hz},
                       {"record_len", p.sizes.record_len},
                       {"fft_len", p.sizes.fft_len},
                       {"czt_m", p.sizes.czt_m},
                       {"czt_conv_len", p.sizes.czt_conv_len},
                       {"zoom_decimation", p.sizes.zoom_decimation},
                       {"zoom_n_fft", p.sizes.zoom_n_fft},
                       {"reps", p.reps},
                       {"mean_us", p.mean_us},
                       {"median_us", p.median_us},
                       {"p95_us", p.p95_us},
                       {"min_us", p.min_us},
                       {"normalized", p.normalized},
                       {"theoretical", p.theoretical}});
    }
    dump(j, out, "bench json");
}

void write_bench_json_file(const BenchReport& r, const std::string& path) {
    auto out = open_out(path);
    write_bench_json(r, out);
}

void write_bench_csv(const BenchReport& r, std::ostream& out) {
    out << "method,resolution_hz,record_len,transform_len,reps,mean_us,median_us,"
           "p95_us,min_us,normalized,theoretical\n";
    char buf[256];
    for (const BenchPoint& p : r.points) {
        const std::size_t tlen = p.method == bench_czt       ? p.sizes.czt_conv_len
                                 : p.method == bench_zoomfft ? p.sizes.zoom_n_fft
                                                             : p.sizes.fft_len;
        std::snprintf(buf, sizeof buf, "%s,%.17g,%zu,%zu,%zu,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n",
                      bench_method_name(p.method), p.resolution_hz, p.sizes.record_len, tlen,
                      p.reps, p.mean_us, p.median_us, p.p95_us, p.min_us, p.normalized,
                      p.theoretical);
        out << buf;
    }
    if (!out) throw IoError("bench csv: write failed");
}

void write_bench_csv_file(const BenchReport& r, const std::string& path) {
    auto out = open_out(path);
    write_bench_csv(r, out);
}

void write_resolvability_json(const ResolvabilityCurve& c, std::ostream& out) {
    json j;
    j["v"] = 1;
    j["config"] = {{"sample_rate_hz", c.config.sample_rate_hz},
                   {"n", c.config.n},
                   {"f1_hz", c.config.f1_hz},
                   {"f2_hz", c.config.f2_hz},
                   {"m", c.config.m},
                   {"center_hz", c.config.center_hz},
                   {"sep_start_hz", c.config.sep_start_hz},
                   {"sep_stop_hz", c.config.sep_stop_hz},
                   {"sep_step_hz", c.config.sep_step_hz}};
    j["fft_len"] = c.fft_len;
    j["separations_hz"] = c.separations_hz;
    auto& fft = j["fft"] = json::array();
    for (const DipMetric& m : c.fft_metrics) fft.push_back(metric_json(m));
    auto& czt = j["czt"] = json::array();
    for (const DipMetric& m : c.czt_metrics) czt.push_back(metric_json(m));
    j["min_resolved_fft_hz"] = c.min_resolved_fft_hz;
    j["min_resolved_czt_hz"] = c.min_resolved_czt_hz;
    dump(j, out, "resolvability json");
}

void write_resolvability_json_file(const ResolvabilityCurve& c, const std::string& path) {
    auto out = open_out(path);
    write_resolvability_json(c, out);
}

void write_resolvability_csv(const ResolvabilityCurve& c, std::ostream& out) {
    out << "separation_hz,method,resolved,dip_db,f_peak_a_hz,peak_a_db,f_peak_b_hz,"
           "peak_b_db,f_valley_hz,valley_db\n";
    char buf[64];
    for (std::size_t i = 0; i < c.separations_hz.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", c.separations_hz[i]);
        out << buf << ",fft,";
        metric_csv_fields(c.fft_metrics[i], out);
        out << '\n' << buf << ",czt,";
        metric_csv_fields(c.czt_metrics[i], out);
        out << '\n';
    }
    if (!out) throw IoError("resolvability csv: write failed");
}

void write_resolvability_csv_file(const ResolvabilityCurve& c, const std::string& path) {
    auto out = open_out(path);
    write_resolvability_csv(c, out);
}

void write_comparison_json(const ComparisonReport& r, std::ostream& out) {
    json j;
    j["v"] = 1;
    j["max_abs_db"] = r.max_abs_db;
    j["rms_db"] = r.rms_db;
    j["n_points"] = r.n_points;
    j["f_lo_hz"] = r.f_lo_hz;
    j["f_hi_hz"] = r.f_hi_hz;
    j["freqs_hz"] = r.freqs_hz;
    j["a_db"] = r.a_db;
    j["b_db"] = r.b_db;
    j["delta_db"] = r.delta_db;
    dump(j, out, "comparison json");
}

void write_comparison_json_file(const ComparisonReport& r, const std::string& path) {
    auto out = open_out(path);
    write_comparison_json(r, out);
}

void write_comparison_csv(const ComparisonReport& r, std::ostream& out) {
    out << "frequency_hz,a_db,b_db,delta_db\n";
    char buf[160];
    for (std::size_t i = 0; i < r.n_points; ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", r.freqs_hz[i],
                      r.a_db[i], r.b_db[i], r.delta_db[i]);
        out << buf;
    }
    if (!out) throw IoError("comparison csv: write failed");
}

void write_comparison_csv_file(const ComparisonReport& r, const std::string& path) {
    auto out = open_out(path);
    write_comparison_csv(r, out);
}

}  // namespace spectral
