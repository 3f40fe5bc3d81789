#include "hyperforge/catalog.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>

#include "catalog_internal.hpp"
#include "hyperforge/coefficient_cache.hpp"
#include "hyperforge/errors.hpp"

namespace hyperforge {

const std::string& ParamPoint::get(const std::string& name) const {
  for (const auto& [k, v] : values) {
    if (k == name) return v;
  }
  throw DomainError("missing parameter '" + name + "'");
}

namespace catalog_detail {

ExactRational rational_param(const ParamPoint& p, const std::string& name) {
  try {
    return ExactRational::parse(p.get(name));
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception& e) {
    throw DomainError("parameter '" + name + "': " + e.what());
  }
}

Complex complex_param(const ParamPoint& p, const std::string& name, Bits prec) {
  const std::string& text = p.get(name);
  if (text.empty() || text.back() != 'i') {
    return Complex(rational_param(p, name).to_real(prec));
  }
  const std::string body = text.substr(0, text.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  try {
    if (split == std::string::npos) {
      return Complex(Real(0L, prec), ExactRational::parse(body).to_real(prec));
    }
    std::string im = body.substr(split);
    if (im.front() == '+') im.erase(0, 1);
    return Complex(ExactRational::parse(body.substr(0, split)).to_real(prec),
                   ExactRational::parse(im).to_real(prec));
  } catch (const std::exception& e) {
    throw DomainError("parameter '" + name + "': " + e.what());
  }
}

AppValue combine(const std::vector<std::pair<ExactRational, AppValue>>& terms, Bits prec) {
  AppValue acc(Complex(prec), 0);
  for (const auto& [c, v] : terms) acc = av_add(acc, av_scale(v, c.to_real(prec)));
  return acc;
}

AppValue constant(const Real& v) { return av_exact(v); }

AppValue constant(const ExactRational& v, Bits prec) { return av_exact(v.to_real(prec)); }

TailMajorant poly_geometric_majorant(long double A, long double B, long double rho, long double K) {
  return [=](std::size_t n, long double) {
    const long double m = static_cast<long double>(n + 1);
    const long double lead = K * std::pow(rho, m);
    return lead * ((A * m + B) / (1 - rho) + A * rho / ((1 - rho) * (1 - rho)));
  };
}

AppValue bounded_series(const TermGenerator& term, const TailMajorant& majorant,
                        const PrecisionContext& ctx, std::size_t budget, std::string* note) {
  try {
    return sum_with_tail(term, majorant, ctx.with_max_terms(budget));
  } catch (const TermCapExceeded&) {
    SumReport report;
    AppValue v = sum_accelerated(term, budget, ctx, &report);
    if (note && report.accelerated) {
      *note = "Levin-accelerated after " + std::to_string(report.terms) + " terms";
    }
    return v;
  }
}

std::shared_ptr<const CoefficientSeries> form_series(const std::string& name, const EvalContext& ec) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, std::size_t>, std::shared_ptr<const CoefficientSeries>> memo;
  const std::size_t N = ec.options.lseries_terms;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(name, N);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  auto cs = std::make_shared<const CoefficientSeries>(
      cached_eta_coeffs(named_form(name).spec, N, ec.options.cache_dir));
  memo.emplace(key, cs);
  return cs;
}

}  // namespace catalog_detail

namespace {

std::vector<IdentityCheck> build_registry() {
  std::vector<IdentityCheck> all;
  catalog_detail::register_modular(all);
  catalog_detail::register_hypergeometric(all);
  catalog_detail::register_pi(all);
  std::sort(all.begin(), all.end(),
            [](const IdentityCheck& a, const IdentityCheck& b) { return a.id < b.id; });
  return all;
}

}  // namespace

const std::vector<IdentityCheck>& list_checks() {
  static const std::vector<IdentityCheck> registry = build_registry();
  return registry;
}

const IdentityCheck& find_check(const std::string& id) {
  const auto& all = list_checks();
  auto it = std::lower_bound(all.begin(), all.end(), id,
                             [](const IdentityCheck& c, const std::string& key) { return c.id < key; });
  if (it == all.end() || it->id != id) throw UnknownId("unknown check '" + id + "'");
  return *it;
}

CheckResult run_check(const std::string& id, const ParamPoint& params, const RunOptions& options) {
  const IdentityCheck& check = find_check(id);
  if (options.precision < 64) throw DomainError("precision must be at least 64 bits");

  CheckResult result;
  result.id = id;
  result.params = params.values;
  result.precision_bits = options.precision;
  const auto start = std::chrono::steady_clock::now();
  const EvalContext ec{PrecisionContext(options.precision), options};
  try {
    Sides sides = check.evaluate(params, ec);
    result.lhs = std::move(sides.lhs);
    result.rhs = std::move(sides.rhs);
    judge(result, check.tolerance, options.precision, check.conjectural);
    if (!sides.note.empty()) result.note = result.note.empty() ? sides.note : result.note + "; " + sides.note;
    if (result.verdict == Verdict::fail && sides.modulus_branch) {
      CheckResult alt = result;
      alt.lhs = std::move(sides.modulus_branch->first);
      alt.rhs = std::move(sides.modulus_branch->second);
      alt.note.clear();
      judge(alt, check.tolerance, options.precision, false);
      if (alt.verdict == Verdict::pass) {
        alt.verdict = Verdict::branch_error;
        alt.note = "holds only with |q|^r for the leading q-power";
        result = std::move(alt);
      }
    }
  } catch (const DomainError& e) {
    result.verdict = Verdict::skipped;
    result.note = e.what();
  }
  result.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<CheckResult> run_check(const std::string& id, const RunOptions& options) {
  const IdentityCheck& check = find_check(id);
  std::vector<CheckResult> out;
  if (check.defaults.empty()) {
    out.push_back(run_check(id, ParamPoint{}, options));
  } else {
    for (const auto& p : check.defaults) out.push_back(run_check(id, p, options));
  }
  return out;
}

bool glob_match(const std::string& pattern, const std::string& id) {
  return fnmatch(pattern.c_str(), id.c_str(), 0) == 0;
}

std::vector<const IdentityCheck*> select_checks(const std::vector<std::string>& filters,
                                                bool include_controls) {
  std::vector<const IdentityCheck*> out;
  for (const auto& c : list_checks()) {
    if (c.control && !include_controls) continue;
    bool keep = filters.empty();
    for (const auto& f : filters) keep = keep || glob_match(f, c.id);
    if (keep) out.push_back(&c);
  }
  return out;
}

std::vector<CheckResult> run_all(const std::vector<std::string>& filters, const RunOptions& options) {
  struct Task {
    const IdentityCheck* check;
    ParamPoint params;
  };
  std::vector<Task> tasks;
  for (const IdentityCheck* c : select_checks(filters, options.include_controls)) {
    if (c->defaults.empty()) {
      tasks.push_back({c, ParamPoint{}});
    } else {
      for (const auto& p : c->defaults) tasks.push_back({c, p});
    }
  }
  std::vector<CheckResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      results[i] = run_check(tasks[i].check->id, tasks[i].params, options);
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(tasks.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return results;
}

}  // namespace hyperforge
