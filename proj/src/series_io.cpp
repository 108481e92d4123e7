#include "heckelab/series_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace heckelab {

namespace {

std::string hexf(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%a", v);
    return buf;
}

double parse_hexf(const std::string& s) {
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str()) throw std::runtime_error("bad numeric field in CSV: '" + s + "'");
    return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

}  // namespace

std::string format_series_csv(const SumSeries& series) {
    std::ostringstream os;
    os << "N,alpha,re,im,abs,abs_dec\n";
    char dec[40];
    for (std::size_t j = 0; j < series.grid.size(); ++j) {
        const double re = series.values[j].real(), im = series.values[j].imag();
        const double mag = std::abs(series.values[j]);
        std::snprintf(dec, sizeof dec, "%.9g", mag);
        os << series.grid[j] << ',' << hexf(series.alpha) << ',' << hexf(re) << ',' << hexf(im)
           << ',' << hexf(mag) << ',' << dec << '\n';
    }
    return os.str();
}

void write_series_csv(const std::string& path, const SumSeries& series) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << format_series_csv(series);
    if (!os) throw std::runtime_error("write failed: " + path);
}

SumSeries parse_series_csv(std::istream& in) {
    SumSeries s;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty CSV");
    if (line.rfind("N,alpha,re,im,abs", 0) != 0)
        throw std::runtime_error("unexpected CSV header: " + line);
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() < 5) throw std::runtime_error("short CSV row: " + line);
        const uint64_t n = std::stoull(fields[0]);
        const double alpha = parse_hexf(fields[1]);
        if (first) {
            s.alpha = alpha;
            first = false;
        } else if (alpha != s.alpha) {
            throw std::runtime_error("CSV mixes alpha values");
        }
        if (!s.grid.empty() && n <= s.grid.back())
            throw std::runtime_error("CSV grid must be strictly increasing");
        s.grid.push_back(n);
        s.values.emplace_back(parse_hexf(fields[2]), parse_hexf(fields[3]));
    }
    if (s.grid.empty()) throw std::runtime_error("CSV has no data rows");
    return s;
}

SumSeries read_series_csv(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open: " + path);
    return parse_series_csv(is);
}

void write_series_svg(const std::string& path, const SumSeries& series) {
    const double W = 720, H = 480, ml = 70, mr = 20, mt = 20, mb = 50;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    std::vector<std::pair<double, double>> pts;
    for (std::size_t j = 0; j < series.grid.size(); ++j) {
        const double mag = std::abs(series.values[j]);
        if (mag <= 0) continue;
        const double lx = std::log10(double(series.grid[j])), ly = std::log10(mag);
        pts.emplace_back(lx, ly);
        xmin = std::min(xmin, lx);
        xmax = std::max(xmax, lx);
        ymin = std::min(ymin, ly);
        ymax = std::max(ymax, ly);
    }
    if (pts.size() < 2) throw std::runtime_error("not enough nonzero points for a chart");
    if (xmax - xmin < 1e-9) xmax = xmin + 1;
    ymin -= 0.2;
    ymax += 0.2;
    auto px = [&](double lx) { return ml + (lx - xmin) / (xmax - xmin) * (W - ml - mr); };
    auto py = [&](double ly) { return H - mb - (ly - ymin) / (ymax - ymin) * (H - mt - mb); };

    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H << "'>\n"
       << "<rect width='100%' height='100%' fill='white'/>\n";
    // axes
    os << "<line x1='" << ml << "' y1='" << H - mb << "' x2='" << W - mr << "' y2='" << H - mb
       << "' stroke='black'/>\n"
       << "<line x1='" << ml << "' y1='" << mt << "' x2='" << ml << "' y2='" << H - mb
       << "' stroke='black'/>\n";
    os << "<text x='" << (W / 2) << "' y='" << (H - 12)
       << "' font-size='14' text-anchor='middle'>log10 N</text>\n";
    os << "<text x='16' y='" << (H / 2)
       << "' font-size='14' text-anchor='middle' transform='rotate(-90 16 " << (H / 2)
       << ")'>log10 |S(N)|</text>\n";
    // reference slopes through the first point
    for (double slope : {0.75, 5.0 / 6.0}) {
        const double y0 = pts.front().second;
        const double x0 = pts.front().first;
        os << "<line x1='" << px(x0) << "' y1='" << py(y0) << "' x2='" << px(xmax) << "' y2='"
           << py(y0 + slope * (xmax - x0))
           << "' stroke='" << (slope == 0.75 ? "#999999" : "#cc4444")
           << "' stroke-dasharray='6,4'/>\n";
        os << "<text x='" << (px(xmax) - 60) << "' y='" << (py(y0 + slope * (xmax - x0)) - 6)
           << "' font-size='12' fill='" << (slope == 0.75 ? "#999999" : "#cc4444") << "'>slope "
           << (slope == 0.75 ? "3/4" : "5/6") << "</text>\n";
    }
    os << "<polyline fill='none' stroke='#2255aa' stroke-width='1.5' points='";
    for (const auto& [lx, ly] : pts) os << px(lx) << ',' << py(ly) << ' ';
    os << "'/>\n";
    for (const auto& [lx, ly] : pts)
        os << "<circle cx='" << px(lx) << "' cy='" << py(ly) << "' r='2.5' fill='#2255aa'/>\n";
    os << "</svg>\n";
    if (!os) throw std::runtime_error("write failed: " + path);
}

}  // namespace heckelab
