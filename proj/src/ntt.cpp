#include "hyperforge/ntt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hyperforge/errors.hpp"

namespace hyperforge {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Montgomery arithmetic with R = 2^64 for an odd modulus below 2^62.
class Montgomery {
 public:
  explicit Montgomery(u64 mod) : p_(mod) {
    u64 inv = mod;
    for (int i = 0; i < 6; ++i) inv *= 2 - mod * inv;
    neg_inv_ = ~inv + 1;
    r2_ = static_cast<u64>((static_cast<u128>(1) << 64) % mod);
    r2_ = static_cast<u64>(static_cast<u128>(r2_) * r2_ % mod);
  }
  u64 mod() const { return p_; }
  u64 reduce(u128 t) const {
    const u64 m = static_cast<u64>(t) * neg_inv_;
    const u64 r = static_cast<u64>((t + static_cast<u128>(m) * p_) >> 64);
    return r - (p_ & (0 - static_cast<u64>(r >= p_)));
  }
  u64 mul(u64 a, u64 b) const { return reduce(static_cast<u128>(a) * b); }
  u64 to(u64 a) const { return mul(a % p_, r2_); }
  u64 from(u64 a) const { return reduce(a); }
  u64 add(u64 a, u64 b) const {
    const u64 s = a + b;
    return s - (p_ & (0 - static_cast<u64>(s >= p_)));
  }
  u64 sub(u64 a, u64 b) const { return a - b + (p_ & (0 - static_cast<u64>(a < b))); }
  u64 pow(u64 base_m, u64 e) const {
    u64 r = to(1);
    while (e) {
      if (e & 1) r = mul(r, base_m);
      base_m = mul(base_m, base_m);
      e >>= 1;
    }
    return r;
  }

 private:
  u64 p_, neg_inv_, r2_;
};

struct Prime {
  u64 p;
  u64 generator;
};

constexpr Prime kPrimes[2] = {{4179340454199820289ULL, 3}, {2485986994308513793ULL, 5}};

constexpr std::size_t kBlock = std::size_t{1} << 14;

void dif_stage(u64* a, std::size_t size, std::size_t len, std::size_t stride, const std::vector<u64>& w,
               const Montgomery& m) {
  for (std::size_t i = 0; i < size; i += 2 * len) {
    for (std::size_t j = 0; j < len; ++j) {
      const u64 u = a[i + j], v = a[i + j + len];
      a[i + j] = m.add(u, v);
      a[i + j + len] = m.mul(m.sub(u, v), w[j * stride]);
    }
  }
}

void dit_stage(u64* a, std::size_t size, std::size_t len, std::size_t stride, std::size_t half,
               const std::vector<u64>& w, const Montgomery& m) {
  for (std::size_t i = 0; i < size; i += 2 * len) {
    for (std::size_t j = 0; j < len; ++j) {
      const std::size_t k = j * stride;
      const u64 u = a[i + j];
      u64 v = a[i + j + len];
      if (k != 0) v = m.sub(0, m.mul(v, w[half - k]));
      a[i + j] = m.add(u, v);
      a[i + j + len] = m.sub(u, v);
    }
  }
}

// Forward transform: decimation in frequency, natural order in, bit-reversed out.
// Stages shorter than a cache block are finished block by block.
void forward(std::vector<u64>& a, const std::vector<u64>& w, const Montgomery& m) {
  const std::size_t L = a.size();
  const std::size_t block = std::min(L, kBlock);
  std::size_t len = L / 2;
  for (; len >= block; len /= 2) dif_stage(a.data(), L, len, L / (2 * len), w, m);
  for (std::size_t b = 0; b < L; b += block) {
    for (std::size_t l = len; l >= 1; l /= 2) dif_stage(a.data() + b, block, l, L / (2 * l), w, m);
  }
}

// Inverse transform: decimation in time, bit-reversed in, natural order out.
// Inverse roots are w^{-k} = -w^{L/2-k}.
void inverse(std::vector<u64>& a, const std::vector<u64>& w, const Montgomery& m) {
  const std::size_t L = a.size();
  const std::size_t half = L / 2;
  const std::size_t block = std::min(L, kBlock);
  for (std::size_t b = 0; b < L; b += block) {
    for (std::size_t l = 1; l < block; l *= 2) dit_stage(a.data() + b, block, l, L / (2 * l), half, w, m);
  }
  for (std::size_t len = block; len < L; len *= 2) dit_stage(a.data(), L, len, L / (2 * len), half, w, m);
  const u64 inv_len = m.pow(m.to(L), m.mod() - 2);
  for (auto& x : a) x = m.mul(x, inv_len);
}

std::vector<u64> residues_mod(const std::vector<std::vector<std::int64_t>>& factors, std::size_t n,
                              std::size_t L, const Prime& prime) {
  const Montgomery m(prime.p);
  std::vector<u64> w(L / 2);
  const u64 root = m.pow(m.to(prime.generator), (prime.p - 1) / L);
  u64 cur = m.to(1);
  for (auto& x : w) {
    x = cur;
    cur = m.mul(cur, root);
  }
  std::vector<u64> acc;
  for (const auto& f : factors) {
    std::vector<u64> a(L, 0);
    const std::size_t len = std::min(n, f.size());
    for (std::size_t i = 0; i < len; ++i) {
      const std::int64_t v = f[i];
      const u64 r = v >= 0 ? static_cast<u64>(v) % prime.p
                           : (prime.p - (static_cast<u64>(-(v + 1)) + 1) % prime.p) % prime.p;
      a[i] = m.to(r);
    }
    forward(a, w, m);
    if (acc.empty()) {
      acc = std::move(a);
    } else {
      for (std::size_t i = 0; i < L; ++i) acc[i] = m.mul(acc[i], a[i]);
    }
  }
  inverse(acc, w, m);
  std::vector<u64> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = m.from(acc[i]);
  return out;
}

u64 powmod(u64 b, u64 e, u64 p) {
  u128 r = 1, x = b % p;
  while (e) {
    if (e & 1) r = r * x % p;
    x = x * x % p;
    e >>= 1;
  }
  return static_cast<u64>(r);
}

}  // namespace

std::vector<std::int64_t> exact_product(const std::vector<std::vector<std::int64_t>>& factors,
                                        std::size_t n) {
  if (n == 0) return {};
  if (factors.empty()) {
    std::vector<std::int64_t> one(n, 0);
    one[0] = 1;
    return one;
  }
  long double log_bound = 0;
  std::size_t degree = 0;
  for (const auto& f : factors) {
    long double l1 = 0;
    const std::size_t len = std::min(n, f.size());
    for (std::size_t i = 0; i < len; ++i) l1 += std::fabs(static_cast<long double>(f[i]));
    if (l1 == 0) return std::vector<std::int64_t>(n, 0);
    log_bound += std::log2(l1);
    degree += len - 1;
  }
  if (log_bound > 121) throw CoefficientOverflow("product may exceed the exact CRT range");
  std::size_t L = 2;
  while (L <= degree) L *= 2;
  if (L > (std::size_t{1} << 40)) throw CoefficientOverflow("transform length too large");

  const std::vector<u64> r1 = residues_mod(factors, n, L, kPrimes[0]);
  const std::vector<u64> r2 = residues_mod(factors, n, L, kPrimes[1]);
  const u64 p1 = kPrimes[0].p, p2 = kPrimes[1].p;
  const u64 p1_inv = powmod(p1 % p2, p2 - 2, p2);
  const i128 modulus = static_cast<i128>(p1) * p2;
  std::vector<std::int64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const u64 diff = (r2[i] + p2 - r1[i] % p2) % p2;
    const u64 k = static_cast<u64>(static_cast<u128>(diff) * p1_inv % p2);
    i128 x = static_cast<i128>(r1[i]) + static_cast<i128>(k) * p1;
    if (x > modulus / 2) x -= modulus;
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
      throw CoefficientOverflow("coefficient does not fit in 64 bits");
    }
    out[i] = static_cast<std::int64_t>(x);
  }
  return out;
}

std::vector<std::int64_t> sparse_product(const std::vector<std::int64_t>& dense,
                                         const std::vector<std::pair<std::size_t, std::int64_t>>& sparse,
                                         std::size_t n) {
  std::vector<i128> acc(n, 0);
  const std::size_t len = std::min(n, dense.size());
  for (const auto& [e, c] : sparse) {
    if (e >= n) continue;
    for (std::size_t i = 0; i + e < n && i < len; ++i) acc[i + e] += static_cast<i128>(dense[i]) * c;
  }
  std::vector<std::int64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (acc[i] > std::numeric_limits<std::int64_t>::max() || acc[i] < std::numeric_limits<std::int64_t>::min()) {
      throw CoefficientOverflow("coefficient does not fit in 64 bits");
    }
    out[i] = static_cast<std::int64_t>(acc[i]);
  }
  return out;
}

}  // namespace hyperforge
