#include <set>

#include "doctest.h"
#include "hyperforge/catalog.hpp"
#include "hyperforge/errors.hpp"
#include "hyperforge/report.hpp"
#include "json.hpp"

using namespace hyperforge;

namespace {

RunOptions quick() {
  RunOptions o;
  o.precision = 128;
  o.lseries_terms = 200000;
  return o;
}

bool accepted(Verdict v) {
  return v == Verdict::pass || v == Verdict::branch_error || v == Verdict::conjectural_pass;
}

}  // namespace

TEST_CASE("registry is sorted, unique and large enough") {
  const auto& all = list_checks();
  CHECK(all.size() >= 40);
  std::set<std::string> ids;
  for (std::size_t i = 0; i < all.size(); ++i) {
    ids.insert(all[i].id);
    if (i > 0) CHECK(all[i - 1].id < all[i].id);
    CHECK(static_cast<bool>(all[i].evaluate));
    CHECK_FALSE(all[i].anchor.empty());
    for (const auto& p : all[i].defaults) CHECK(p.values.size() == all[i].param_names.size());
  }
  CHECK(ids.size() == all.size());
  CHECK(ids.count("PI_1") == 1);
  CHECK(ids.count("LEMMA23_s2_q") == 1);
  CHECK(ids.count("CHUDNOVSKY") == 1);
}

TEST_CASE("unknown ids and globs") {
  CHECK_THROWS_AS(find_check("NOPE"), UnknownId);
  CHECK_THROWS_AS(run_check("NOPE", quick()), UnknownId);
  CHECK(select_checks({"PI_*"}, false).size() == 4);
  CHECK(select_checks({"PI_*"}, true).size() == 5);
  CHECK(select_checks({"NOPE*"}, true).empty());
  CHECK(glob_match("LEMMA23_s?_q", "LEMMA23_s3_q"));
  CHECK_FALSE(glob_match("LEMMA23_s?_q", "LEMMA23_s3_q2"));
  for (const IdentityCheck* c : select_checks({}, false)) CHECK_FALSE(c->control);
}

TEST_CASE("every default point verifies") {
  const auto results = run_all({}, quick());
  CHECK(results.size() >= 90);
  for (const auto& r : results) {
    INFO(r.id << " " << r.note << " " << to_string(r.verdict));
    CHECK(accepted(r.verdict));
  }
  CHECK(verify_exit_code(results) == 0);
}

TEST_CASE("negative controls fail at every precision") {
  for (unsigned bits : {64u, 128u, 256u}) {
    RunOptions o = quick();
    o.precision = bits;
    o.include_controls = true;
    std::vector<std::string> ids;
    for (const auto& c : list_checks()) {
      if (c.control) ids.push_back(c.id);
    }
    REQUIRE(ids.size() >= 5);
    const auto results = run_all(ids, o);
    for (const auto& r : results) {
      INFO(r.id << " at " << bits);
      CHECK(r.verdict == Verdict::fail);
    }
    CHECK(verify_exit_code(results) == 1);
  }
}

TEST_CASE("lemma identities hold at points off the default grid") {
  for (const char* p : {"1/30", "3/40", "1/7"}) {
    for (const char* id : {"LEMMA23_s2_q", "LEMMA23_s3_q2", "LEMMA23_s4_q3", "LEMMA23_t1sq_q"}) {
      const CheckResult r = run_check(id, ParamPoint{{"p", p}}, quick());
      INFO(id << " p=" << p);
      CHECK(r.verdict == Verdict::pass);
    }
  }
}

TEST_CASE("bad parameters skip instead of failing") {
  const CheckResult r = run_check("THM24_G1", ParamPoint{{"z", "1"}}, quick());
  CHECK(r.verdict == Verdict::skipped);
  CHECK_FALSE(r.note.empty());
  CHECK(verify_exit_code({r}) == 1);
  const CheckResult missing = run_check("THM24_G1", ParamPoint{}, quick());
  CHECK(missing.verdict == Verdict::skipped);
}

TEST_CASE("json report carries the documented fields") {
  const auto results = run_all({"PI_1", "LEMMA23_s2_mq2"}, quick());
  const auto doc = nlohmann::json::parse(render_json(results));
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 4);
  for (const auto& r : doc) {
    for (const char* key : {"id", "params", "lhs", "rhs", "abs_residual", "rel_residual", "verdict", "bits", "ms"}) {
      CHECK(r.contains(key));
    }
    CHECK(r["bits"] == 128);
    CHECK(r["lhs"].contains("err"));
    CHECK(r["lhs"].contains("rigor"));
  }
  CHECK(doc[0]["id"] == "LEMMA23_s2_mq2");
  CHECK(doc[0]["verdict"] == "BRANCH_ERROR");
  CHECK(doc[0].contains("note"));
  CHECK(doc[3]["id"] == "PI_1");
  CHECK(doc[3]["verdict"] == "PASS");
  CHECK(doc[3]["params"].empty());
  CHECK(render_text(results).find("BRANCH_ERROR") != std::string::npos);
}
