#include "hyperforge/report.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "json.hpp"

namespace hyperforge {

namespace {

using Json = nlohmann::ordered_json;

Json side_json(const AppValue& v, unsigned bits) {
  Json j;
  j["value"] = decimal(v.value.re, bits);
  if (!v.value.im.is_zero()) j["imag"] = decimal(v.value.im, bits);
  j["err"] = decimal_err(v.err);
  j["rigor"] = to_string(v.rigor);
  return j;
}

std::string short_number(const Real& x) { return x.to_string(3); }

}  // namespace

std::string decimal(const Real& x, unsigned bits) {
  if (x.is_zero()) return "0";
  return x.to_string_bits(bits);
}

std::string decimal_err(long double err) {
  if (!std::isfinite(err)) return "inf";
  if (err == 0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3Le", err);
  return buf;
}

std::string render_json(const std::vector<CheckResult>& results) {
  Json out = Json::array();
  for (const auto& r : results) {
    Json j;
    j["id"] = r.id;
    Json params = Json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    if (r.verdict == Verdict::skipped) {
      j["lhs"] = nullptr;
      j["rhs"] = nullptr;
      j["abs_residual"] = nullptr;
      j["rel_residual"] = nullptr;
    } else {
      j["lhs"] = side_json(r.lhs, r.precision_bits);
      j["rhs"] = side_json(r.rhs, r.precision_bits);
      j["abs_residual"] = r.abs_residual.to_string(6);
      j["rel_residual"] = r.rel_residual.to_string(6);
    }
    j["verdict"] = to_string(r.verdict);
    j["bits"] = r.precision_bits;
    j["ms"] = std::round(r.elapsed_ms * 1000.0) / 1000.0;
    if (!r.note.empty()) j["note"] = r.note;
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

std::string render_text(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  std::map<std::string, int> counts;
  for (const auto& r : results) {
    std::string params;
    for (const auto& [k, v] : r.params) params += (params.empty() ? "" : ",") + k + "=" + v;
    char line[512];
    std::snprintf(line, sizeof line, "%-16s %-24s %-14s", to_string(r.verdict), r.id.c_str(), params.c_str());
    os << line;
    if (r.verdict != Verdict::skipped) {
      os << " |res|=" << short_number(r.abs_residual) << " rel=" << short_number(r.rel_residual)
         << " err=" << decimal_err(r.lhs.err + r.rhs.err);
    }
    std::snprintf(line, sizeof line, " %u bits %.1f ms", r.precision_bits, r.elapsed_ms);
    os << line;
    if (!r.note.empty()) os << "  [" << r.note << "]";
    os << "\n";
    ++counts[to_string(r.verdict)];
  }
  os << results.size() << " results:";
  for (const auto& [k, n] : counts) os << " " << k << "=" << n;
  os << "\n";
  return os.str();
}

int verify_exit_code(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (r.verdict == Verdict::fail || r.verdict == Verdict::skipped) return 1;
  }
  return 0;
}

}  // namespace hyperforge
