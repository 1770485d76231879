#pragma once

#include <bit>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "dynamics.hpp"

namespace yudo {

static_assert(std::endian::native == std::endian::little,
              "snapshot payloads are little-endian");

/// Shortest round-trip decimal representation, stable across runs.
inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// Field snapshot files: one ASCII header line "YUD1 <n> <length> <time>"
// followed by n*n little-endian 64-bit floats, row-major.
// ---------------------------------------------------------------------------

inline void write_snapshot(const std::filesystem::path& path, const ScalarField& f, double time) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_snapshot: cannot open " + path.string());
    out << "YUD1 " << f.grid.n << ' ' << format_double(f.grid.length) << ' '
        << format_double(time) << '\n';
    out.write(reinterpret_cast<const char*>(f.values.data()),
              static_cast<std::streamsize>(f.values.size() * sizeof(double)));
    if (!out) throw std::runtime_error("write_snapshot: short write to " + path.string());
}

inline ScalarField read_snapshot(const std::filesystem::path& path, double* time_out = nullptr) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_snapshot: cannot open " + path.string());
    std::string line;
    std::getline(in, line);
    std::istringstream head(line);
    std::string magic;
    int n = 0;
    double length = 0.0, time = 0.0;
    head >> magic >> n >> length >> time;
    if (magic != "YUD1" || !head)
        throw std::runtime_error("read_snapshot: bad header in " + path.string());
    GridSpec grid(n);
    grid.length = length;
    ScalarField f(grid);
    in.read(reinterpret_cast<char*>(f.values.data()),
            static_cast<std::streamsize>(f.values.size() * sizeof(double)));
    if (in.gcount() != static_cast<std::streamsize>(f.values.size() * sizeof(double)))
        throw std::runtime_error("read_snapshot: truncated payload in " + path.string());
    if (time_out) *time_out = time;
    return f;
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

class CsvWriter {
  public:
    CsvWriter(const std::filesystem::path& path, const std::string& header) : out_(path) {
        if (!out_) throw std::runtime_error("CsvWriter: cannot open " + path.string());
        out_ << header << '\n';
    }

    void row(const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
    }

  private:
    std::ofstream out_;
};

/// Schema shared by every diagnostic emission.
inline constexpr const char* diagnostics_csv_header = "experiment,time,nu,quantity,value";

// ---------------------------------------------------------------------------
// Trajectory directories: one snapshot file per stored time plus index.csv.
// ---------------------------------------------------------------------------

inline void write_trajectory(const std::filesystem::path& dir, const Trajectory& traj) {
    std::filesystem::create_directories(dir);
    CsvWriter index(dir / "index.csv", "step,time,energy,enstrophy,max_abs_vorticity");
    for (const auto& s : traj.snapshots) {
        char name[32];
        std::snprintf(name, sizeof(name), "snapshot_%08ld.yud", s.step);
        write_snapshot(dir / name, s.omega, s.time);
        index.row({std::to_string(s.step), format_double(s.time), format_double(s.energy),
                   format_double(s.enstrophy), format_double(s.max_abs)});
    }
}

inline Trajectory read_trajectory(const std::filesystem::path& dir) {
    std::ifstream index(dir / "index.csv");
    if (!index) throw std::runtime_error("read_trajectory: no index.csv in " + dir.string());
    Trajectory traj;
    std::string line;
    std::getline(index, line);  // header
    while (std::getline(index, line)) {
        if (line.empty()) continue;
        TrajectorySnapshot s;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream cells(line);
        cells >> s.step >> s.time >> s.energy >> s.enstrophy >> s.max_abs;
        char name[32];
        std::snprintf(name, sizeof(name), "snapshot_%08ld.yud", s.step);
        s.omega = read_snapshot(dir / name);
        const SpectralField w = to_spectral(s.omega);
        s.palinstrophy = palinstrophy(w);
        traj.snapshots.push_back(std::move(s));
    }
    if (traj.snapshots.empty()) throw std::runtime_error("read_trajectory: empty index");
    traj.grid = traj.snapshots.front().omega.grid;
    for (const auto& s : traj.snapshots)
        traj.max_observed_linf = std::max(traj.max_observed_linf, s.max_abs);
    return traj;
}

}  // namespace yudo
