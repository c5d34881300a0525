#pragma once

#include <iosfwd>
#include <string>

#include "types.hpp"

namespace spectral {

// Spectrum of a real trace on the natural FFT grid [0, fs).  transform_len = 0
// pads to the next power of two; any other value must be >= the trace length
// and is honored exactly (non power-of-two lengths go through the chirp
// transform route internally).  Bin k sits at k * fs / transform_len.
Spectrum fft_spectrum(const Trace& t, std::size_t transform_len = 0);

// Keep only bins whose frequency falls in [f_lo, f_hi] (inclusive, with a half
// ulp of slack at the edges).  Throws std::invalid_argument when the window is
// empty or misses the axis entirely.
Spectrum slice_band(const Spectrum& s, double f_lo_hz, double f_hi_hz);

// CSV columns: frequency_hz,re,im,magnitude_db.  Readers accept files written
// by write_spectrum_csv; frequencies must advance by a uniform step.
void write_spectrum_csv(const Spectrum& s, std::ostream& out);
void write_spectrum_csv_file(const Spectrum& s, const std::string& path);
Spectrum read_spectrum_csv(std::istream& in, const std::string& origin = "spectrum csv");
Spectrum read_spectrum_csv_file(const std::string& path);

// JSON object with axis metadata and parallel re/im/magnitude_db arrays.
void write_spectrum_json(const Spectrum& s, std::ostream& out);
void write_spectrum_json_file(const Spectrum& s, const std::string& path);

}  // namespace spectral
