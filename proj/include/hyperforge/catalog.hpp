#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperforge/check.hpp"
#include "hyperforge/precision.hpp"

namespace hyperforge {

// Named parameter values kept as exact decimal or rational text ("1/100").
struct ParamPoint {
  ParamPoint() = default;
  ParamPoint(std::initializer_list<std::pair<std::string, std::string>> init) : values(init) {}

  const std::string& get(const std::string& name) const;

  std::vector<std::pair<std::string, std::string>> values;
};

struct RunOptions {
  unsigned precision = 128;
  std::size_t lseries_terms = 10'000'000;
  std::optional<std::filesystem::path> cache_dir;
  unsigned threads = 1;
  bool include_controls = false;
};

struct EvalContext {
  PrecisionContext ctx;
  RunOptions options;
};

struct Sides {
  AppValue lhs;
  AppValue rhs;
  std::string note;
  // Both sides again under the |q|^r convention for fractional leading powers.
  std::optional<std::pair<AppValue, AppValue>> modulus_branch;
};

using Evaluator = std::function<Sides(const ParamPoint&, const EvalContext&)>;

struct IdentityCheck {
  std::string id;
  std::string anchor;
  std::string domain;
  std::vector<std::string> param_names;
  std::vector<ParamPoint> defaults;
  Tolerance tolerance;
  bool conjectural = false;
  bool control = false;
  Evaluator evaluate;
};

// The full registry, sorted by id.
const std::vector<IdentityCheck>& list_checks();
// Throws UnknownId.
const IdentityCheck& find_check(const std::string& id);

// One evaluation. A DomainError becomes SKIPPED with the message as note.
CheckResult run_check(const std::string& id, const ParamPoint& params, const RunOptions& options);
// Every default point of one entry.
std::vector<CheckResult> run_check(const std::string& id, const RunOptions& options);

bool glob_match(const std::string& pattern, const std::string& id);

// Entries whose id matches any of the globs (all when empty), evaluated at
// their defaults on a pool of options.threads workers. Results are ordered by
// id and then by default point. Controls only with options.include_controls.
std::vector<CheckResult> run_all(const std::vector<std::string>& filters, const RunOptions& options);
// The entries run_all would evaluate.
std::vector<const IdentityCheck*> select_checks(const std::vector<std::string>& filters,
                                                bool include_controls);

}  // namespace hyperforge
