#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "initial_data.hpp"
#include "spectral.hpp"

namespace yudo {

/// Plain-text configuration: "key = value" lines grouped under bracketed
/// [section] headers; '#' starts a comment.
class Config {
  public:
    Config() = default;

    static Config parse(std::istream& in) {
        Config cfg;
        std::string line, section;
        while (std::getline(in, line)) {
            const size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            const std::string t = trim(line);
            if (t.empty()) continue;
            if (t.front() == '[' && t.back() == ']') {
                section = trim(t.substr(1, t.size() - 2));
                cfg.sections_[section];
                continue;
            }
            const size_t eq = t.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("config: expected key = value, got '" + t + "'");
            cfg.sections_[section][trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
        }
        return cfg;
    }

    static Config load(const std::filesystem::path& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("config: cannot open " + path.string());
        return parse(in);
    }

    bool has(const std::string& section, const std::string& key) const {
        const auto s = sections_.find(section);
        return s != sections_.end() && s->second.count(key) > 0;
    }

    std::string get(const std::string& section, const std::string& key,
                    const std::string& fallback = "") const {
        const auto s = sections_.find(section);
        if (s == sections_.end()) return fallback;
        const auto k = s->second.find(key);
        return k == s->second.end() ? fallback : k->second;
    }

    double get_double(const std::string& section, const std::string& key, double fallback) const {
        const std::string v = get(section, key);
        return v.empty() ? fallback : std::stod(v);
    }

    long get_long(const std::string& section, const std::string& key, long fallback) const {
        const std::string v = get(section, key);
        return v.empty() ? fallback : std::stol(v);
    }

    std::vector<double> get_list(const std::string& section, const std::string& key,
                                 std::vector<double> fallback) const {
        const std::string v = get(section, key);
        if (v.empty()) return fallback;
        std::vector<double> out;
        std::istringstream ss(v);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(std::stod(trim(item)));
        return out;
    }

  private:
    static std::string trim(const std::string& s) {
        const size_t a = s.find_first_not_of(" \t\r");
        if (a == std::string::npos) return "";
        const size_t b = s.find_last_not_of(" \t\r");
        return s.substr(a, b - a + 1);
    }

    std::map<std::string, std::map<std::string, std::string>> sections_;
};

/// Initial-data selector: "name" or "name:key=value,key=value".
/// Known names: eigenmode (n), taylor_green (amp), random_besov (s, amp, ell),
/// disk (r, amp), koch (iter, amp). An "ell" key adds mollification at that
/// scale; "amp" rescales after construction.
inline ScalarField make_initial_data(const std::string& selector, const GridSpec& grid,
                                     std::uint64_t seed) {
    std::string name = selector;
    std::map<std::string, double> kv;
    const size_t colon = selector.find(':');
    if (colon != std::string::npos) {
        name = selector.substr(0, colon);
        std::istringstream args(selector.substr(colon + 1));
        std::string item;
        while (std::getline(args, item, ',')) {
            const size_t eq = item.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("initial data selector: bad argument '" + item + "'");
            kv[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
        }
    }
    auto arg = [&](const std::string& key, double fallback) {
        const auto it = kv.find(key);
        return it == kv.end() ? fallback : it->second;
    };

    ScalarField f;
    if (name == "eigenmode") {
        f = eigenmode(static_cast<int>(arg("n", 1)), grid);
    } else if (name == "taylor_green") {
        f = taylor_green(grid);
    } else if (name == "random_besov") {
        f = random_besov(arg("s", 0.5), seed, grid);
    } else if (name == "disk") {
        f = vortex_patch(PatchSpec::disk(arg("r", 1.0)), grid);
    } else if (name == "koch") {
        f = vortex_patch(PatchSpec::koch(static_cast<int>(arg("iter", 3))), grid);
    } else {
        throw std::invalid_argument("initial data selector: unknown factory '" + name + "'");
    }
    const double ell = arg("ell", 0.0);
    if (ell > 0.0) f = mollify(f, ell);
    f *= arg("amp", 1.0);
    f.project_zero_mean();
    return f;
}

}  // namespace yudo
