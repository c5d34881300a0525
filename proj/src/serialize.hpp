#pragma once

#include <iosfwd>
#include <string>

#include "analysis.hpp"
#include "bench.hpp"

namespace spectral {

// JSON documents carry a "v" schema tag (currently 1).  Non-finite values
// (unresolved minima, infinite dips) serialize as null.

void write_bench_json(const BenchReport& r, std::ostream& out);
void write_bench_json_file(const BenchReport& r, const std::string& path);
void write_bench_csv(const BenchReport& r, std::ostream& out);
void write_bench_csv_file(const BenchReport& r, const std::string& path);

void write_resolvability_json(const ResolvabilityCurve& c, std::ostream& out);
void write_resolvability_json_file(const ResolvabilityCurve& c, const std::string& path);
// Long format: one row per (separation, route) pair.
void write_resolvability_csv(const ResolvabilityCurve& c, std::ostream& out);
void write_resolvability_csv_file(const ResolvabilityCurve& c, const std::string& path);

void write_comparison_json(const ComparisonReport& r, std::ostream& out);
void write_comparison_json_file(const ComparisonReport& r, const std::string& path);
void write_comparison_csv(const ComparisonReport& r, std::ostream& out);
void write_comparison_csv_file(const ComparisonReport& r, const std::string& path);

}  // namespace spectral
