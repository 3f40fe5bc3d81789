#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <vector>

#include "hyperforge/errors.hpp"
#include "hyperforge/mahler.hpp"

namespace hyperforge {

namespace {

struct GridResult {
  long double mean = 0;
  long double min_abs = std::numeric_limits<long double>::infinity();
};

// Grid points theta_k = (k + 1/2) / N. The last variable is handled in an
// inner loop after collecting the coefficient of each of its powers.
struct Layout {
  std::vector<std::vector<int>> exps_per_var;  // distinct exponents per variable
  std::vector<std::vector<int>> term_index;    // term -> index into exps_per_var[v]
};

Layout make_layout(const LaurentPolynomial& p) {
  Layout l;
  l.exps_per_var.resize(p.variables);
  std::vector<std::map<int, int>> idx(p.variables);
  for (const auto& [e, c] : p.terms) {
    for (int v = 0; v < p.variables; ++v) idx[v].emplace(e[v], 0);
  }
  for (int v = 0; v < p.variables; ++v) {
    for (auto& [e, i] : idx[v]) {
      i = static_cast<int>(l.exps_per_var[v].size());
      l.exps_per_var[v].push_back(e);
    }
  }
  for (const auto& [e, c] : p.terms) {
    std::vector<int> ti(p.variables);
    for (int v = 0; v < p.variables; ++v) ti[v] = idx[v][e[v]];
    l.term_index.push_back(ti);
  }
  return l;
}

using CLD = std::complex<long double>;

GridResult grid_long_double(const LaurentPolynomial& p, unsigned N) {
  const Layout layout = make_layout(p);
  const int m = p.variables;
  const long double two_pi = 6.283185307179586476925286766559L;
  // table[v][ei][k] = exp(2 pi i e (k + 1/2) / N), reduced exactly mod 2N.
  std::vector<std::vector<std::vector<CLD>>> table(m);
  for (int v = 0; v < m; ++v) {
    for (int e : layout.exps_per_var[v]) {
      std::vector<CLD> row(N);
      for (unsigned k = 0; k < N; ++k) {
        const long long num = ((static_cast<long long>(e) * (2 * k + 1)) % (2LL * N) + 2LL * N) % (2LL * N);
        const long double ang = two_pi * static_cast<long double>(num) / (2.0L * N);
        row[k] = CLD(std::cos(ang), std::sin(ang));
      }
      table[v].push_back(std::move(row));
    }
  }
  std::vector<CLD> coeffs;
  for (const auto& [e, c] : p.terms) coeffs.emplace_back(c.re.to_ld(), c.im.to_ld());

  const std::size_t nlast = layout.exps_per_var[m - 1].size();
  std::size_t outer = 1;
  for (int v = 0; v + 1 < m; ++v) outer *= N;

  GridResult r;
  long double total = 0;
  long double min_norm = std::numeric_limits<long double>::infinity();
  std::vector<unsigned> idx(m > 1 ? m - 1 : 0, 0);
  std::vector<CLD> C(nlast);
  for (std::size_t o = 0; o < outer; ++o) {
    std::fill(C.begin(), C.end(), CLD(0, 0));
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
      CLD w = coeffs[t];
      for (int v = 0; v + 1 < m; ++v) w *= table[v][layout.term_index[t][v]][idx[v]];
      C[layout.term_index[t][m - 1]] += w;
    }
    long double row = 0;
    for (unsigned k = 0; k < N; ++k) {
      CLD s(0, 0);
      for (std::size_t i = 0; i < nlast; ++i) s += C[i] * table[m - 1][i][k];
      const long double nrm = std::norm(s);
      if (nrm < min_norm) min_norm = nrm;
      row += std::log(nrm);
    }
    total += row;
    for (int v = m - 2; v >= 0; --v) {
      if (++idx[v] < N) break;
      idx[v] = 0;
    }
  }
  long double count = 1;
  for (int v = 0; v < m; ++v) count *= N;
  r.mean = total / (2 * count);
  r.min_abs = std::sqrt(min_norm);
  return r;
}

struct MpGrid {
  Real mean;
  long double min_abs;
};

MpGrid grid_mpfr(const LaurentPolynomial& p, unsigned N, Bits prec) {
  const Layout layout = make_layout(p);
  const int m = p.variables;
  const Real pi = const_pi(prec);
  std::vector<std::vector<std::vector<Complex>>> table(m);
  for (int v = 0; v < m; ++v) {
    for (int e : layout.exps_per_var[v]) {
      std::vector<Complex> row;
      row.reserve(N);
      for (unsigned k = 0; k < N; ++k) {
        const long long num = ((static_cast<long long>(e) * (2 * k + 1)) % (2LL * N) + 2LL * N) % (2LL * N);
        const Real ang = pi * static_cast<long>(num) / static_cast<long>(N);
        row.emplace_back(cos(ang), sin(ang));
      }
      table[v].push_back(std::move(row));
    }
  }
  const std::size_t nlast = layout.exps_per_var[m - 1].size();
  std::size_t outer = 1;
  for (int v = 0; v + 1 < m; ++v) outer *= N;
  Real total(prec);
  long double min_abs = std::numeric_limits<long double>::infinity();
  std::vector<unsigned> idx(m > 1 ? m - 1 : 0, 0);
  std::vector<Complex> C(nlast, Complex(prec));
  for (std::size_t o = 0; o < outer; ++o) {
    for (auto& c : C) c = Complex(prec);
    for (std::size_t t = 0; t < p.terms.size(); ++t) {
      Complex w = p.terms[t].second.rounded(prec);
      for (int v = 0; v + 1 < m; ++v) w *= table[v][layout.term_index[t][v]][idx[v]];
      C[layout.term_index[t][m - 1]] += w;
    }
    for (unsigned k = 0; k < N; ++k) {
      Complex s(prec);
      for (std::size_t i = 0; i < nlast; ++i) s += C[i] * table[m - 1][i][k];
      const Real nrm = s.re * s.re + s.im * s.im;
      const long double a = std::sqrt(nrm.to_ld());
      if (a < min_abs) min_abs = a;
      total += log(nrm);
    }
    for (int v = m - 2; v >= 0; --v) {
      if (++idx[v] < N) break;
      idx[v] = 0;
    }
  }
  long count = 1;
  for (int v = 0; v < m; ++v) count *= static_cast<long>(N);
  return MpGrid{total / (2L * count), min_abs};
}

}  // namespace

AppValue mahler_torus_integral(const LaurentPolynomial& p, unsigned grid, const PrecisionContext& ctx) {
  if (p.variables < 1) throw DomainError("torus integral needs at least one variable");
  if (p.terms.empty()) throw NearZeroOnTorus("zero polynomial");
  if (grid < 2) throw DomainError("grid must have at least 2 points per dimension");
  const long double threshold = std::ldexp(1.0L, -static_cast<int>(ctx.working_bits / 2));
  const Bits prec = ctx.compute_bits();
  if (p.variables <= 2) {
    MpGrid a = grid_mpfr(p, grid, prec);
    MpGrid b = grid_mpfr(p, 2 * grid, prec);
    if (std::min(a.min_abs, b.min_abs) < threshold) {
      throw NearZeroOnTorus("polynomial (nearly) vanishes on the torus");
    }
    const long double err = std::fabs((a.mean - b.mean).to_ld()) +
                            rounding_bound(std::fabs(a.mean.to_ld()) + 1, prec, 64.0L);
    return AppValue(a.mean, err, Rigor::heuristic);
  }
  GridResult a = grid_long_double(p, grid);
  GridResult b = grid_long_double(p, 2 * grid);
  if (std::min(a.min_abs, b.min_abs) < threshold) {
    throw NearZeroOnTorus("polynomial (nearly) vanishes on the torus");
  }
  const long double err = std::fabs(a.mean - b.mean) + 1e-16L * (std::fabs(a.mean) + 1);
  return AppValue(Real(a.mean, prec), err, Rigor::heuristic);
}

}  // namespace hyperforge
