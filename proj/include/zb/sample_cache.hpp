#pragma once
// CSV cache of zeta samples, so expensive evaluations can be reused across
// runs. Format: header "t,zeta_re,zeta_im", then one row per sample with
// 17-significant-digit fields (round-trip exact).

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>

namespace zb {

class SampleCache {
  public:
    SampleCache() = default;

    // Loads rows from path if the file exists; a missing file is an empty cache.
    static SampleCache load(const std::string& path);

    std::optional<std::complex<double>> lookup(double t) const;
    void store(double t, std::complex<double> z);

    // Writes all rows sorted by t. Deterministic bytes for identical content.
    void save(const std::string& path) const;

    std::size_t size() const { return map_.size(); }

  private:
    static std::uint64_t key(double t);
    std::unordered_map<std::uint64_t, std::pair<double, std::complex<double>>> map_;
};

} // namespace zb
