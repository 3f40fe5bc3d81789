#include "hyperforge/coefficient_cache.hpp"

#include <array>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <mutex>
#include <sstream>

#include "hyperforge/errors.hpp"

namespace hyperforge {

namespace {

constexpr char kMagic[8] = {'E', 'T', 'A', 'C', 'O', 'E', 'F', '1'};

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

void put_u32(std::ostream& out, std::uint32_t v) {
  std::array<unsigned char, 4> b{};
  for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b.data()), 4);
}

std::uint32_t fnv1a32(const unsigned char* data, std::size_t size) {
  std::uint32_t h = 2166136261U;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= data[i];
    h *= 16777619U;
  }
  return h;
}

std::uint32_t get_u32(const unsigned char* b) {
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

}  // namespace

std::string canonical_spec(const EtaQuotientSpec& spec) {
  std::ostringstream s;
  for (const auto& [d, e] : spec.exponents) {
    if (e != 0) s << d << '^' << e << ';';
  }
  s << "q=" << spec.q_power.to_string();
  return s.str();
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::filesystem::path CoefficientCache::file_for(const EtaQuotientSpec& spec) const {
  char name[32];
  std::snprintf(name, sizeof name, "eta-%016llx.bin", static_cast<unsigned long long>(fnv1a(canonical_spec(spec))));
  return dir_ / name;
}

std::optional<std::vector<std::int64_t>> CoefficientCache::load(const EtaQuotientSpec& spec,
                                                                std::size_t N) const {
  const auto path = file_for(spec);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  unsigned char header[16];
  if (!in.read(reinterpret_cast<char*>(header), 16) || std::memcmp(header, kMagic, 8) != 0) {
    throw CacheError("bad header in " + path.string());
  }
  const std::uint32_t stored = get_u32(header + 8);
  const auto expected = 16 + 8 * (static_cast<std::uintmax_t>(stored) + 1);
  if (std::filesystem::file_size(path) != expected) throw CacheError("truncated cache file " + path.string());
  if (stored < N) return std::nullopt;
  std::vector<unsigned char> raw(8 * (static_cast<std::size_t>(stored) + 1));
  if (!in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()))) {
    throw CacheError("short read from " + path.string());
  }
  if (fnv1a32(raw.data(), raw.size()) != get_u32(header + 12)) {
    throw CacheError("checksum mismatch in " + path.string());
  }
  std::vector<std::int64_t> out(N + 1);
  for (std::size_t i = 0; i <= N; ++i) {
    std::uint64_t v = 0;
    for (int b = 7; b >= 0; --b) v = (v << 8) | raw[8 * i + b];
    out[i] = static_cast<std::int64_t>(v);
  }
  return out;
}

void CoefficientCache::store(const EtaQuotientSpec& spec, const std::vector<std::int64_t>& coeffs) const {
  if (coeffs.empty() || coeffs.size() - 1 > 0xffffffffULL) throw CacheError("cannot cache this many coefficients");
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw CacheError("cannot create " + dir_.string() + ": " + ec.message());
  const auto path = file_for(spec);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write " + tmp.string());
    std::vector<unsigned char> raw(8 * coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      const auto v = static_cast<std::uint64_t>(coeffs[i]);
      for (int b = 0; b < 8; ++b) raw[8 * i + b] = static_cast<unsigned char>(v >> (8 * b));
    }
    out.write(kMagic, 8);
    put_u32(out, static_cast<std::uint32_t>(coeffs.size() - 1));
    put_u32(out, fnv1a32(raw.data(), raw.size()));
    out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (!out) throw CacheError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw CacheError("cannot rename " + tmp.string() + ": " + ec.message());
}

CoefficientSeries CoefficientCache::get(const EtaQuotientSpec& spec, std::size_t N) const {
  std::lock_guard<std::mutex> lock(cache_mutex());
  if (auto hit = load(spec, N)) {
    CoefficientSeries cs;
    cs.source = spec;
    cs.coeffs = std::move(*hit);
    const int total = spec.total_exponent();
    cs.integral_weight = total % 2 == 0;
    cs.weight = total / 2;
    cs.cusp = cs.coeffs[0] == 0;
    return cs;
  }
  CoefficientSeries cs = eta_coeffs(spec, N);
  store(spec, cs.coeffs);
  return cs;
}

CoefficientSeries cached_eta_coeffs(const EtaQuotientSpec& spec, std::size_t N,
                                    const std::optional<std::filesystem::path>& dir) {
  if (!dir) return eta_coeffs(spec, N);
  return CoefficientCache(*dir).get(spec, N);
}

}  // namespace hyperforge
