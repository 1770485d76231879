#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace yudo {

/// Minimal self-contained SVG line plot (no external assets). Series are
/// drawn as polylines with markers; axes can be logarithmic.
class LinePlot {
  public:
    LinePlot(std::string title, std::string xlabel, std::string ylabel, bool log_x, bool log_y)
        : title_(std::move(title)),
          xlabel_(std::move(xlabel)),
          ylabel_(std::move(ylabel)),
          log_x_(log_x),
          log_y_(log_y) {}

    void add_series(std::string name, std::vector<double> xs, std::vector<double> ys) {
        series_.push_back({std::move(name), std::move(xs), std::move(ys)});
    }

    void write(const std::filesystem::path& path) const {
        const double W = 720, H = 480, ml = 80, mr = 160, mt = 48, mb = 56;
        double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
        for (const auto& s : series_)
            for (size_t i = 0; i < s.xs.size(); ++i) {
                const double x = tx(s.xs[i]), y = ty(s.ys[i]);
                if (!std::isfinite(x) || !std::isfinite(y)) continue;
                xmin = std::min(xmin, x);
                xmax = std::max(xmax, x);
                ymin = std::min(ymin, y);
                ymax = std::max(ymax, y);
            }
        if (xmin > xmax) {
            xmin = 0;
            xmax = 1;
        }
        if (ymin > ymax) {
            ymin = 0;
            ymax = 1;
        }
        if (xmax - xmin < 1e-12) {
            xmin -= 0.5;
            xmax += 0.5;
        }
        if (ymax - ymin < 1e-12) {
            ymin -= 0.5;
            ymax += 0.5;
        }
        auto px = [&](double x) { return ml + (tx(x) - xmin) / (xmax - xmin) * (W - ml - mr); };
        auto py = [&](double y) { return H - mb - (ty(y) - ymin) / (ymax - ymin) * (H - mt - mb); };

        std::ofstream out(path);
        if (!out) throw std::runtime_error("LinePlot: cannot open " + path.string());
        out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H
            << "' viewBox='0 0 " << W << ' ' << H << "'>\n"
            << "<rect width='100%' height='100%' fill='white'/>\n"
            << "<text x='" << W / 2 << "' y='24' text-anchor='middle' font-size='16'>" << title_
            << "</text>\n";

        // frame and ticks
        out << "<rect x='" << ml << "' y='" << mt << "' width='" << W - ml - mr << "' height='"
            << H - mt - mb << "' fill='none' stroke='black'/>\n";
        const int ticks = 5;
        for (int i = 0; i <= ticks; ++i) {
            const double fx = xmin + (xmax - xmin) * i / ticks;
            const double fy = ymin + (ymax - ymin) * i / ticks;
            const double X = ml + (W - ml - mr) * i / ticks;
            const double Y = H - mb - (H - mt - mb) * i / ticks;
            out << "<line x1='" << X << "' y1='" << H - mb << "' x2='" << X << "' y2='"
                << H - mb + 5 << "' stroke='black'/>\n";
            out << "<text x='" << X << "' y='" << H - mb + 20
                << "' text-anchor='middle' font-size='11'>" << tick_label(fx, log_x_)
                << "</text>\n";
            out << "<line x1='" << ml - 5 << "' y1='" << Y << "' x2='" << ml << "' y2='" << Y
                << "' stroke='black'/>\n";
            out << "<text x='" << ml - 8 << "' y='" << Y + 4
                << "' text-anchor='end' font-size='11'>" << tick_label(fy, log_y_) << "</text>\n";
        }
        out << "<text x='" << (ml + W - mr) / 2 << "' y='" << H - 12
            << "' text-anchor='middle' font-size='13'>" << xlabel_ << "</text>\n";
        out << "<text x='16' y='" << (mt + H - mb) / 2
            << "' text-anchor='middle' font-size='13' transform='rotate(-90 16 "
            << (mt + H - mb) / 2 << ")'>" << ylabel_ << "</text>\n";

        static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                        "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
        for (size_t s = 0; s < series_.size(); ++s) {
            const char* color = palette[s % 8];
            out << "<polyline fill='none' stroke='" << color << "' stroke-width='1.5' points='";
            for (size_t i = 0; i < series_[s].xs.size(); ++i) {
                if (!std::isfinite(tx(series_[s].xs[i])) || !std::isfinite(ty(series_[s].ys[i])))
                    continue;
                out << px(series_[s].xs[i]) << ',' << py(series_[s].ys[i]) << ' ';
            }
            out << "'/>\n";
            for (size_t i = 0; i < series_[s].xs.size(); ++i) {
                if (!std::isfinite(tx(series_[s].xs[i])) || !std::isfinite(ty(series_[s].ys[i])))
                    continue;
                out << "<circle cx='" << px(series_[s].xs[i]) << "' cy='" << py(series_[s].ys[i])
                    << "' r='2.5' fill='" << color << "'/>\n";
            }
            const double ly = mt + 16.0 * (double(s) + 1.0);
            out << "<line x1='" << W - mr + 10 << "' y1='" << ly << "' x2='" << W - mr + 30
                << "' y2='" << ly << "' stroke='" << color << "' stroke-width='2'/>\n";
            out << "<text x='" << W - mr + 36 << "' y='" << ly + 4 << "' font-size='11'>"
                << series_[s].name << "</text>\n";
        }
        out << "</svg>\n";
    }

  private:
    struct Series {
        std::string name;
        std::vector<double> xs, ys;
    };

    double tx(double x) const { return log_x_ ? std::log10(x) : x; }
    double ty(double y) const { return log_y_ ? std::log10(y) : y; }

    static std::string tick_label(double v, bool log_axis) {
        char buf[32];
        if (log_axis)
            std::snprintf(buf, sizeof(buf), "1e%.1f", v);
        else
            std::snprintf(buf, sizeof(buf), "%.3g", v);
        return buf;
    }

    std::string title_, xlabel_, ylabel_;
    bool log_x_, log_y_;
    std::vector<Series> series_;
};

}  // namespace yudo
