#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hyperforge/lseries.hpp"

namespace hyperforge {

// On-disk store of eta-quotient coefficient arrays. Each file holds a 16-byte
// header ("ETACOEF1", u32 N, u32 checksum) followed by a_0..a_N as
// little-endian int64. The checksum is FNV-1a-32 of the payload; files are
// named by an FNV-1a-64 digest of the spec.
class CoefficientCache {
 public:
  explicit CoefficientCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& directory() const { return dir_; }
  std::filesystem::path file_for(const EtaQuotientSpec& spec) const;

  // The first N+1 coefficients if a file with at least that many exists.
  std::optional<std::vector<std::int64_t>> load(const EtaQuotientSpec& spec, std::size_t N) const;
  void store(const EtaQuotientSpec& spec, const std::vector<std::int64_t>& coeffs) const;

  // Loads or computes (and stores) the series.
  CoefficientSeries get(const EtaQuotientSpec& spec, std::size_t N) const;

 private:
  std::filesystem::path dir_;
};

std::string canonical_spec(const EtaQuotientSpec& spec);
std::uint64_t fnv1a(const std::string& data);

// Uses the cache when dir is set, otherwise computes directly.
CoefficientSeries cached_eta_coeffs(const EtaQuotientSpec& spec, std::size_t N,
                                    const std::optional<std::filesystem::path>& dir);

}  // namespace hyperforge
