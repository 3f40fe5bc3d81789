#include "hyperforge/lseries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>
#include <utility>

#include "hyperforge/errors.hpp"
#include "hyperforge/ntt.hpp"

namespace hyperforge {

namespace {

using Sparse = std::vector<std::pair<std::size_t, std::int64_t>>;
using Dense = std::vector<std::int64_t>;

constexpr std::size_t kSmallSeries = std::size_t{1} << 15;
constexpr std::size_t kMaxTransform = std::size_t{1} << 26;

// (q^d; q^d)_inf = sum_k (-1)^k q^{d k(3k-1)/2}, k in Z
Sparse pentagonal(std::size_t d, std::size_t n) {
  Sparse s{{0, 1}};
  for (std::size_t k = 1;; ++k) {
    const std::size_t e1 = d * (k * (3 * k - 1) / 2);
    if (e1 >= n) break;
    const std::int64_t sign = k % 2 ? -1 : 1;
    s.emplace_back(e1, sign);
    const std::size_t e2 = d * (k * (3 * k + 1) / 2);
    if (e2 < n) s.emplace_back(e2, sign);
  }
  std::sort(s.begin(), s.end());
  return s;
}

// (q^d; q^d)_inf^3 = sum_{k>=0} (-1)^k (2k+1) q^{d k(k+1)/2}
Sparse jacobi_cube(std::size_t d, std::size_t n) {
  Sparse s;
  for (std::size_t k = 0;; ++k) {
    const std::size_t e = d * (k * (k + 1) / 2);
    if (e >= n) break;
    s.emplace_back(e, (k % 2 ? -1 : 1) * static_cast<std::int64_t>(2 * k + 1));
  }
  return s;
}

// 1 / (q^d; q^d)_inf via Euler's recurrence for the partition numbers.
Dense partitions(std::size_t d, std::size_t n) {
  const std::size_t m = (n + d - 1) / d;
  std::vector<__int128> p(m, 0);
  p[0] = 1;
  const Sparse pent = pentagonal(1, m);
  for (std::size_t i = 1; i < m; ++i) {
    __int128 acc = 0;
    for (std::size_t t = 1; t < pent.size() && pent[t].first <= i; ++t) {
      acc -= pent[t].second * p[i - pent[t].first];
    }
    if (acc > std::numeric_limits<std::int64_t>::max()) {
      throw CoefficientOverflow("partition numbers exceed 64 bits");
    }
    p[i] = acc;
  }
  Dense out(n, 0);
  for (std::size_t i = 0; i < m; ++i) out[i * d] = static_cast<std::int64_t>(p[i]);
  return out;
}

Dense expand(const Sparse& s, std::size_t n) {
  Dense out(n, 0);
  for (const auto& [e, c] : s) {
    if (e < n) out[e] += c;
  }
  return out;
}

Dense sparse_times_sparse(const Sparse& a, const Sparse& b, std::size_t n) {
  std::vector<__int128> acc(n, 0);
  for (const auto& [ea, ca] : a) {
    if (ea >= n) break;
    for (const auto& [eb, cb] : b) {
      if (ea + eb >= n) break;
      acc[ea + eb] += static_cast<__int128>(ca) * cb;
    }
  }
  Dense out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (acc[i] > std::numeric_limits<std::int64_t>::max() || acc[i] < std::numeric_limits<std::int64_t>::min()) {
      throw CoefficientOverflow("coefficient does not fit in 64 bits");
    }
    out[i] = static_cast<std::int64_t>(acc[i]);
  }
  return out;
}

Dense multiply_blocks(std::vector<Dense> blocks, std::size_t n) {
  while (blocks.size() > 1) {
    std::vector<Dense> group;
    std::size_t degree = 0;
    while (!blocks.empty()) {
      const std::size_t len = std::min(n, blocks.back().size());
      if (!group.empty() && degree + len > kMaxTransform / 2) break;
      degree += len;
      group.push_back(std::move(blocks.back()));
      blocks.pop_back();
    }
    blocks.insert(blocks.begin(), exact_product(group, n));
  }
  return blocks.empty() ? Dense{} : std::move(blocks.front());
}

Dense eta_product(const EtaQuotientSpec& spec, std::size_t n) {
  std::vector<Sparse> sparse;
  std::vector<Dense> dense;
  for (const auto& [d, e] : spec.exponents) {
    const auto dd = static_cast<std::size_t>(d);
    if (e > 0) {
      for (int i = 0; i < e / 3; ++i) sparse.push_back(jacobi_cube(dd, n));
      for (int i = 0; i < e % 3; ++i) sparse.push_back(pentagonal(dd, n));
    } else {
      for (int i = 0; i < -e; ++i) dense.push_back(partitions(dd, n));
    }
  }
  std::sort(sparse.begin(), sparse.end(), [](const Sparse& a, const Sparse& b) { return a.size() > b.size(); });
  std::optional<Sparse> leftover;
  if (sparse.size() % 2 == 1) {
    leftover = std::move(sparse.back());
    sparse.pop_back();
  }
  for (std::size_t i = 0; i < sparse.size(); i += 2) {
    dense.push_back(sparse_times_sparse(sparse[i], sparse[i + 1], n));
  }
  if (leftover && (n > kSmallSeries || dense.empty())) {
    dense.push_back(expand(*leftover, n));
    leftover.reset();
  }
  Dense result = dense.empty() ? expand(Sparse{{0, 1}}, n) : multiply_blocks(std::move(dense), n);
  if (leftover) result = sparse_product(result, *leftover, n);
  return result;
}

long double kahan_sum(const std::vector<long double>& xs) {
  long double s = 0, c = 0;
  for (long double x : xs) {
    const long double y = x - c;
    const long double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

}  // namespace

CoefficientSeries eta_coeffs(const EtaQuotientSpec& spec, std::size_t N) {
  spec.validate();
  if (N < 1) throw DomainError("eta_coeffs needs N >= 1");
  if (!spec.q_power.is_integer() || spec.q_power.sign() < 0) {
    throw FractionalLeadingPower("leading power " + spec.q_power.to_string() + " is not a nonnegative integer");
  }
  const long shift = spec.q_power.numerator().get_si();
  CoefficientSeries cs;
  cs.source = spec;
  const int total = spec.total_exponent();
  cs.integral_weight = total % 2 == 0;
  cs.weight = total / 2;
  cs.coeffs.assign(N + 1, 0);
  if (static_cast<std::size_t>(shift) <= N) {
    const Dense body = eta_product(spec, N + 1 - static_cast<std::size_t>(shift));
    std::copy(body.begin(), body.end(), cs.coeffs.begin() + shift);
  }
  cs.cusp = cs.coeffs[0] == 0;
  return cs;
}

std::optional<std::size_t> deligne_violation(const CoefficientSeries& cs) {
  const std::size_t N = cs.size();
  std::vector<std::uint32_t> d(N + 1, 0);
  for (std::size_t i = 1; i <= N; ++i) {
    for (std::size_t j = i; j <= N; j += i) ++d[j];
  }
  const int w1 = cs.weight - 1;
  for (std::size_t n = 1; n <= N; ++n) {
    const std::int64_t a = cs.coeffs[n];
    if (a == 0) continue;
    if (w1 >= 0 && w1 <= 4) {
      unsigned __int128 rhs = static_cast<unsigned __int128>(d[n]) * d[n];
      for (int i = 0; i < w1; ++i) rhs *= n;
      const unsigned __int128 ua = static_cast<unsigned __int128>(a < 0 ? -a : a);
      if (ua * ua > rhs) return n;
    } else {
      const long double bound = d[n] * std::pow(static_cast<long double>(n), w1 / 2.0L);
      if (std::fabs(static_cast<long double>(a)) > bound * (1 + 1e-15L)) return n;
    }
  }
  return std::nullopt;
}

long double divisor_tail_bound(long double N, long double sigma) {
  if (!(sigma > 1)) return std::numeric_limits<long double>::infinity();
  const long double gamma = 0.57721566490153286060651209L;
  const long double s1 = sigma - 1;
  const long double main = std::pow(N, -s1) * ((std::log(N) + 2 * gamma) / s1 + 1 / (s1 * s1));
  // |sum_{n<=x} d(n) - x log x - (2 gamma - 1) x| <= 0.961 sqrt(x)
  const long double rest = 0.961L * std::pow(N, 0.5L - sigma) * (1 + sigma / (sigma - 0.5L));
  return main + rest;
}

AppValue lvalue_direct(const CoefficientSeries& cs, long s, const PrecisionContext& ctx, TailMode mode,
                       unsigned threads) {
  const Bits prec = ctx.compute_bits();
  const std::size_t N = cs.size();
  if (std::all_of(cs.coeffs.begin(), cs.coeffs.end(), [](std::int64_t a) { return a == 0; })) {
    return AppValue(Real(prec), 0.0L);
  }
  if (!cs.integral_weight) throw DomainError("L-values need an integral weight");
  if (!cs.cusp) throw DomainError("L-values need a cusp form (a_0 = 0)");
  if (!(2 * s > cs.weight + 1)) {
    throw DivergesError("sum d(n) n^{(w-1)/2 - s} diverges for w = " + std::to_string(cs.weight) +
                        ", s = " + std::to_string(s));
  }

  const std::size_t chunks = 64;
  std::vector<long double> partial(chunks, 0), magnitude_sum(chunks, 0);
  auto run_chunk = [&](std::size_t c) {
    const std::size_t lo = 1 + c * N / chunks, hi = (c + 1) * N / chunks;
    long double sum = 0, comp = 0, mag = 0;
    for (std::size_t n = lo; n <= hi; ++n) {
      const std::int64_t a = cs.coeffs[n];
      if (a == 0) continue;
      const long double inv = 1.0L / static_cast<long double>(n);
      long double p = 1;
      for (long i = 0; i < s; ++i) p *= inv;
      const long double t = static_cast<long double>(a) * p;
      mag += std::fabs(t);
      const long double y = t - comp;
      const long double z = sum + y;
      comp = (z - sum) - y;
      sum = z;
    }
    partial[c] = sum;
    magnitude_sum[c] = mag;
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, chunks));
  if (workers == 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t c = w; c < chunks; c += workers) run_chunk(c);
      });
    }
    for (auto& t : pool) t.join();
  }
  const long double total = kahan_sum(partial);
  const long double mag = kahan_sum(magnitude_sum);
  const long double eps = std::numeric_limits<long double>::epsilon();
  const long double rounding = (static_cast<long double>(s) + 2 * chunks + 8) * eps * mag;

  long double tail;
  if (mode == TailMode::rigorous) {
    const long double sigma = static_cast<long double>(s) - (cs.weight - 1) / 2.0L;
    tail = divisor_tail_bound(static_cast<long double>(N), sigma);
  } else {
    long double suffix = 0, widest = 0;
    for (std::size_t n = N; n > N / 2; --n) {
      suffix += static_cast<long double>(cs.coeffs[n]) * std::pow(static_cast<long double>(n), -static_cast<long double>(s));
      widest = std::max(widest, std::fabs(suffix));
    }
    tail = 2 * widest;
  }
  return AppValue(Real(total, prec), tail + rounding,
                  mode == TailMode::rigorous ? Rigor::rigorous : Rigor::heuristic);
}

namespace {

// Gamma(a, x) for integer a and x > 0.
Real upper_gamma(long a, const Real& x) {
  const Bits prec = x.precision();
  const Real ex = exp(-x);
  if (a >= 1) {
    Real term(1L, prec), sum(1L, prec), fact(1L, prec);
    for (long k = 1; k < a; ++k) {
      term *= x;
      term /= k;
      sum += term;
      fact *= k;
    }
    return fact * ex * sum;
  }
  Real g = -eint(-x);
  for (long b = -1; b >= a; --b) g = (g - pow(x, Real(b, prec)) * ex) / Real(b, prec);
  return g;
}

Real completed(const CoefficientSeries& cs, long s, long w, int sign, const Real& A, const Real& y0,
               std::size_t terms, Bits prec) {
  Real total(prec);
  const Real As = pow(A, Real(s, prec));
  const Real Aws = pow(A, Real(w - s, prec));
  for (std::size_t n = 1; n <= terms; ++n) {
    const std::int64_t a = cs.coeffs[n];
    if (a == 0) continue;
    const Real nn(static_cast<long>(n), prec);
    Real t = As * pow(nn, Real(-s, prec)) * upper_gamma(s, nn * y0 / A);
    Real u = Aws * pow(nn, Real(s - w, prec)) * upper_gamma(w - s, nn / (y0 * A));
    if (sign < 0) u = -u;
    total += Real(static_cast<long>(a), prec) * (t + u);
  }
  return total;
}

}  // namespace

std::size_t smoothed_terms_needed(long level, const PrecisionContext& ctx) {
  const long double A = std::sqrt(static_cast<long double>(level)) / (2 * 3.14159265358979323846L);
  const long double bits = static_cast<long double>(ctx.compute_bits()) + 32;
  return static_cast<std::size_t>(std::ceil(bits * 0.6931471805599453L * A * 1.2L)) + 16;
}

AppValue lvalue_smoothed(const CoefficientSeries& cs, long s, long level, int weight, int sign,
                         const PrecisionContext& ctx) {
  const Bits prec = ctx.compute_bits();
  if (std::all_of(cs.coeffs.begin(), cs.coeffs.end(), [](std::int64_t a) { return a == 0; })) {
    return AppValue(Real(prec), 0.0L, Rigor::heuristic);
  }
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  if (level < 1 || s < 1) throw DomainError("smoothed L-values need level >= 1 and integer s >= 1");
  if (!cs.integral_weight || cs.weight != weight) throw DomainError("weight does not match the coefficients");
  const std::size_t terms = smoothed_terms_needed(level, ctx);
  if (cs.size() < terms) {
    throw DomainError("smoothed sum needs " + std::to_string(terms) + " coefficients, have " +
                      std::to_string(cs.size()));
  }
  const Real A = sqrt(Real(level, prec)) / (2L * const_pi(prec));
  Real norm = pow(A, Real(s, prec)) * gamma(Real(s, prec));
  const Real l1 = completed(cs, s, weight, sign, A, Real(1L, prec), terms, prec) / norm;
  const Real l2 = completed(cs, s, weight, sign, A, Real(6L, prec) / 5L, terms, prec) / norm;
  const long double diff = std::fabs((l1 - l2).to_ld());
  const long double scale = std::max(1.0L, std::fabs(l1.to_ld()));
  if (diff > std::ldexp(scale, -static_cast<int>(ctx.working_bits / 2))) {
    throw InconsistentFunctionalEquation("smoothed L-value depends on the split point (level " +
                                         std::to_string(level) + ", sign " + std::to_string(sign) + ")");
  }
  const long double err = diff + rounding_bound(scale, prec, 64.0L * static_cast<long double>(terms));
  return AppValue(l1, err, Rigor::heuristic);
}

const std::vector<NamedForm>& named_forms() {
  static const std::vector<NamedForm> forms = [] {
    std::vector<NamedForm> v;
    v.push_back({"f8", EtaQuotientSpec{{{1, 2}, {2, 1}, {4, 1}, {8, 2}}, ExactRational(1)}, 8, 3, 1});
    v.push_back({"g12", EtaQuotientSpec{{{2, 3}, {6, 3}}, ExactRational(1)}, 12, 3, 1});
    v.push_back({"f15", EtaQuotientSpec{{{1, 1}, {3, 1}, {5, 1}, {15, 1}}, ExactRational(1)}, 15, 2, 1});
    return v;
  }();
  return forms;
}

const NamedForm& named_form(const std::string& name) {
  for (const auto& f : named_forms()) {
    if (f.name == name) return f;
  }
  throw UnknownId("unknown modular form '" + name + "'");
}

}  // namespace hyperforge
