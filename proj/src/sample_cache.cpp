#include "zb/sample_cache.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <vector>

namespace zb {

std::uint64_t SampleCache::key(double t) {
    std::uint64_t k;
    std::memcpy(&k, &t, sizeof k);
    return k;
}

SampleCache SampleCache::load(const std::string& path) {
    SampleCache c;
    std::ifstream in(path);
    if (!in) return c;
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        double t, re, im;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &t, &re, &im) == 3)
            c.store(t, {re, im});
    }
    return c;
}

std::optional<std::complex<double>> SampleCache::lookup(double t) const {
    auto it = map_.find(key(t));
    if (it == map_.end()) return std::nullopt;
    return it->second.second;
}

void SampleCache::store(double t, std::complex<double> z) {
    map_[key(t)] = {t, z};
}

void SampleCache::save(const std::string& path) const {
    std::vector<std::pair<double, std::complex<double>>> rows;
    rows.reserve(map_.size());
    for (const auto& [k, v] : map_) rows.push_back(v);
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::ofstream out(path);
    out << "t,zeta_re,zeta_im\n";
    char buf[128];
    for (const auto& [t, z] : rows) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", t, z.real(), z.imag());
        out << buf;
    }
}

} // namespace zb
