#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "hyperforge/coefficient_cache.hpp"
#include "hyperforge/errors.hpp"
#include "hyperforge/lseries.hpp"
#include "hyperforge/ntt.hpp"

using namespace hyperforge;

namespace {

std::vector<std::int64_t> naive_product(const std::vector<std::vector<std::int64_t>>& fs, std::size_t n) {
  std::vector<std::int64_t> acc(n, 0);
  acc[0] = 1;
  for (const auto& f : fs) {
    std::vector<std::int64_t> next(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (acc[i] == 0) continue;
      for (std::size_t j = 0; j < f.size() && i + j < n; ++j) next[i + j] += acc[i] * f[j];
    }
    acc = next;
  }
  return acc;
}

// Expands q^shift prod (1 - q^{dk})^e factor by factor.
std::vector<std::int64_t> eta_oracle(const EtaQuotientSpec& spec, std::size_t N) {
  std::vector<std::int64_t> a(N + 1, 0);
  a[0] = 1;
  for (const auto& [d, e] : spec.exponents) {
    for (std::size_t k = static_cast<std::size_t>(d); k <= N; k += static_cast<std::size_t>(d)) {
      for (int r = 0; r < std::abs(e); ++r) {
        if (e > 0) {
          for (std::size_t i = N; i >= k; --i) a[i] -= a[i - k];
        } else {
          for (std::size_t i = k; i <= N; ++i) a[i] += a[i - k];
        }
      }
    }
  }
  const long shift = spec.q_power.numerator().get_si();
  std::vector<std::int64_t> out(N + 1, 0);
  for (std::size_t i = 0; i + shift <= N; ++i) out[i + shift] = a[i];
  return out;
}

}  // namespace

TEST_CASE("exact NTT product matches schoolbook convolution") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(-1000, 1000);
  for (std::size_t n : {1u, 7u, 300u, 2500u}) {
    std::vector<std::vector<std::int64_t>> fs(3);
    for (auto& f : fs) {
      f.resize(n);
      for (auto& x : f) x = dist(rng);
    }
    CHECK(exact_product(fs, n) == naive_product(fs, n));
  }
  std::vector<std::vector<std::int64_t>> big = {{std::int64_t{1} << 62, 1}, {std::int64_t{1} << 62}};
  CHECK_THROWS_AS(exact_product(big, 2), CoefficientOverflow);
}

TEST_CASE("eta products agree with factor-by-factor expansion") {
  for (const auto& form : named_forms()) {
    CAPTURE(form.name);
    const CoefficientSeries cs = eta_coeffs(form.spec, 3000);
    CHECK(cs.coeffs == eta_oracle(form.spec, 3000));
    CHECK(cs.coeffs[1] == 1);
    CHECK(cs.weight == form.weight);
    CHECK(cs.cusp);
  }
  const auto g = eta_coeffs(named_form("g12").spec, 50);
  const auto g_oracle = eta_oracle(named_form("g12").spec, 50);
  for (std::size_t n = 1; n <= 10; ++n) CHECK(g.coeffs[n] == g_oracle[n]);

  EtaQuotientSpec mixed{{{1, -2}, {2, 5}, {3, 1}}, ExactRational(2)};
  CHECK(eta_coeffs(mixed, 120).coeffs == eta_oracle(mixed, 120));
}

TEST_CASE("transform path agrees with the small path and with itself at 2N") {
  for (const auto& form : named_forms()) {
    CAPTURE(form.name);
    const auto small = eta_coeffs(form.spec, 30000);
    const auto large = eta_coeffs(form.spec, 90000);
    const auto larger = eta_coeffs(form.spec, 180000);
    CHECK(std::equal(small.coeffs.begin(), small.coeffs.end(), large.coeffs.begin()));
    CHECK(std::equal(large.coeffs.begin(), large.coeffs.end(), larger.coeffs.begin()));
    CHECK_FALSE(deligne_violation(larger).has_value());
  }
}

TEST_CASE("degenerate and invalid eta quotients") {
  EtaQuotientSpec one{{}, ExactRational(0)};
  const auto cs = eta_coeffs(one, 5);
  CHECK(cs.coeffs == std::vector<std::int64_t>{1, 0, 0, 0, 0, 0});
  CHECK_FALSE(cs.cusp);
  EtaQuotientSpec half{{{1, 1}}, ExactRational(1, 2)};
  CHECK_THROWS_AS(eta_coeffs(half, 10), FractionalLeadingPower);
  EtaQuotientSpec partitions{{{1, -1}}, ExactRational(0)};
  const auto p = eta_coeffs(partitions, 100);
  CHECK(p.coeffs[10] == 42);
  CHECK(p.coeffs[100] == 190569292);
  CHECK_THROWS_AS(eta_coeffs(partitions, 1000), CoefficientOverflow);
}

TEST_CASE("divisor tail bound dominates the actual tail") {
  const std::size_t N = 1000, M = 2000000;
  std::vector<std::uint32_t> d(M + 1, 0);
  for (std::size_t i = 1; i <= M; ++i) {
    for (std::size_t j = i; j <= M; j += i) ++d[j];
  }
  for (long double sigma : {2.0L, 1.5L}) {
    long double partial = 0;
    for (std::size_t n = N + 1; n <= M; ++n) partial += d[n] * std::pow(static_cast<long double>(n), -sigma);
    CHECK(partial < divisor_tail_bound(N, sigma));
    CHECK(divisor_tail_bound(N, sigma) < 1.5L * (partial + divisor_tail_bound(M, sigma)));
  }
  CHECK(std::isinf(divisor_tail_bound(100, 1)));
}

TEST_CASE("direct L-values") {
  PrecisionContext ctx;
  CoefficientSeries zero;
  zero.coeffs.assign(11, 0);
  zero.weight = 3;
  const AppValue z = lvalue_direct(zero, 3, ctx);
  CHECK(z.value.is_zero());
  CHECK(z.err == 0);

  const auto g = eta_coeffs(named_form("g12").spec, 200000);
  const AppValue one = lvalue_direct(g, 3, ctx, TailMode::rigorous, 1);
  const AppValue four = lvalue_direct(g, 3, ctx, TailMode::rigorous, 4);
  CHECK(mpfr_equal_p(one.value.re.get(), four.value.re.get()));
  CHECK(one.rigor == Rigor::rigorous);
  CHECK(one.err < 1e-4L);
  CHECK(std::fabs(one.value.re.to_ld() - 0.8998925541313733L) < one.err);
  CHECK_THROWS_AS(lvalue_direct(g, 2, ctx), DivergesError);

  const auto f15 = eta_coeffs(named_form("f15").spec, 200000);
  const AppValue h = lvalue_direct(f15, 2, ctx, TailMode::heuristic);
  CHECK(h.rigor == Rigor::heuristic);
  CHECK(std::fabs(h.value.re.to_ld() - 0.6614751879210697L) < std::max(h.err, 1e-4L));
  CHECK_THROWS_AS(lvalue_direct(f15, 1, ctx), DivergesError);
}

TEST_CASE("smoothed L-values agree with direct sums") {
  PrecisionContext ctx;
  struct Expect {
    const char* name;
    long s;
    long double value;
  };
  for (const Expect& e : {Expect{"g12", 3, 0.8998925541313733L}, Expect{"f8", 3, 0.7417059948871517L},
                          Expect{"f15", 2, 0.6614751879210697L}}) {
    CAPTURE(e.name);
    const NamedForm& form = named_form(e.name);
    const auto cs = eta_coeffs(form.spec, 100000);
    const AppValue smooth = lvalue_smoothed(cs, e.s, form.level, form.weight, form.sign, ctx);
    CHECK(smooth.err < 1e-30L);
    CHECK(std::fabs(smooth.value.re.to_ld() - e.value) < 1e-15L);
    if (form.weight == 3) {
      const AppValue direct = lvalue_direct(cs, e.s, ctx);
      CHECK(std::fabs((smooth.value.re - direct.value.re).to_ld()) < direct.err);
    }
  }
  const NamedForm& g = named_form("g12");
  const auto cs = eta_coeffs(g.spec, 1000);
  int passing = 0;
  for (int sign : {-1, 1}) {
    try {
      lvalue_smoothed(cs, 3, g.level, g.weight, sign, ctx);
      ++passing;
    } catch (const InconsistentFunctionalEquation&) {
    }
  }
  CHECK(passing == 1);
  CHECK_THROWS_AS(lvalue_smoothed(cs, 3, 16, 3, 1, ctx), InconsistentFunctionalEquation);
  CoefficientSeries zero;
  zero.coeffs.assign(5, 0);
  CHECK(lvalue_smoothed(zero, 3, 12, 3, 1, ctx).value.is_zero());
}

TEST_CASE("coefficient cache round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "hyperforge-cache-test";
  std::filesystem::remove_all(dir);
  CoefficientCache cache(dir);
  const auto& spec = named_form("f15").spec;
  CHECK_FALSE(cache.load(spec, 10).has_value());
  const auto computed = cache.get(spec, 500);
  CHECK(std::filesystem::file_size(cache.file_for(spec)) == 16 + 8 * 501);
  {
    std::ifstream in(cache.file_for(spec), std::ios::binary);
    char header[16];
    in.read(header, 16);
    CHECK(std::string(header, 8) == "ETACOEF1");
    CHECK(static_cast<unsigned char>(header[8]) == (500 & 0xff));
    CHECK(static_cast<unsigned char>(header[9]) == (500 >> 8));
  }
  const auto loaded = cache.load(spec, 300);
  REQUIRE(loaded.has_value());
  CHECK(std::equal(loaded->begin(), loaded->end(), computed.coeffs.begin()));
  CHECK_FALSE(cache.load(spec, 501).has_value());
  CHECK(cached_eta_coeffs(spec, 200, dir).coeffs == eta_coeffs(spec, 200).coeffs);

  std::filesystem::resize_file(cache.file_for(spec), 100);
  CHECK_THROWS_AS(cache.load(spec, 5), CacheError);
  {
    std::ofstream out(cache.file_for(spec), std::ios::binary | std::ios::trunc);
    out << "NOTMAGIC________";
  }
  CHECK_THROWS_AS(cache.load(spec, 5), CacheError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache detects a flipped payload byte") {
  const auto dir = std::filesystem::temp_directory_path() / "hyperforge-cache-flip";
  std::filesystem::remove_all(dir);
  CoefficientCache cache(dir);
  const auto& spec = named_form("g12").spec;
  cache.get(spec, 100);
  REQUIRE(cache.load(spec, 100).has_value());
  {
    std::fstream f(cache.file_for(spec), std::ios::binary | std::ios::in | std::ios::out);
    f.seekp(16 + 8 * 37);
    f.put('\x55');
  }
  CHECK_THROWS_AS(cache.load(spec, 10), CacheError);
  std::filesystem::remove_all(dir);
}
