#pragma once

#include <iosfwd>
#include <string>

#include "heckelab/twisted.hpp"

namespace heckelab {

// CSV with header N,alpha,re,im,abs,abs_dec. The double columns are C99
// hex-floats so a written series reloads bit-identically; abs_dec repeats
// the magnitude in plain decimal for eyeballing.
std::string format_series_csv(const SumSeries& series);
void write_series_csv(const std::string& path, const SumSeries& series);
SumSeries parse_series_csv(std::istream& in);
SumSeries read_series_csv(const std::string& path);

// Minimal log-log SVG chart of |S(N)| with reference slopes 3/4 and 5/6.
void write_series_svg(const std::string& path, const SumSeries& series);

}  // namespace heckelab
