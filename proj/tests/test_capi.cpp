#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <string>

#include "cyldom/cyldom.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  cyldom_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status strings and version") {
  CHECK(std::string(cyldom_status_name(CYLDOM_OK)) == "ok");
  CHECK(std::string(cyldom_status_name(CYLDOM_ERR_INCOMPLETE_TABLE)) == "incomplete table");
  CHECK(std::strlen(cyldom_version()) > 0);
}

TEST_CASE("null arguments and bad input become error codes") {
  CHECK(cyldom_state_count(5, nullptr) == CYLDOM_ERR_INVALID_ARGUMENT);
  uint64_t count = 0;
  CHECK(cyldom_state_count(0, &count) == CYLDOM_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(cyldom_last_error()) > 0);
  cyldom_variant v;
  CHECK(cyldom_parse_variant("sideways", &v) == CYLDOM_ERR_INVALID_ARGUMENT);
  CHECK(cyldom_parse_variant("interior", &v) == CYLDOM_OK);
  CHECK(v == CYLDOM_INTERIOR);
  int64_t num = 0, den = 0;
  CHECK(cyldom_paper_lower_bound(10, 12, &num, &den) == CYLDOM_ERR_DOMAIN);
  cyldom_waste_table* t = nullptr;
  CHECK(cyldom_waste_table_load("/nonexistent/table.json", &t) == CYLDOM_ERR_IO);
  CHECK(t == nullptr);
  int gamma = 0;
  CHECK(cyldom_exact_domination_number(40, 3, &gamma) == CYLDOM_ERR_CAPACITY);
}

TEST_CASE("counts") {
  uint64_t count = 0;
  REQUIRE(cyldom_state_count(10, &count) == CYLDOM_OK);
  CHECK(count == 8119);
  REQUIRE(cyldom_transition_count(10, CYLDOM_INTERIOR, &count) == CYLDOM_OK);
  CHECK(count == 3330304);
  int64_t w = 0;
  REQUIRE(cyldom_brute_min_waste(3, 5, CYLDOM_BOUNDARY, &w) == CYLDOM_OK);
  CHECK(w == 3);
  int gamma = 0;
  REQUIRE(cyldom_exact_domination_number(10, 12, &gamma) == CYLDOM_OK);
  CHECK(gamma == 28);
}

TEST_CASE("waste table lifecycle") {
  cyldom_dp_config cfg;
  cyldom_dp_config_default(CYLDOM_INTERIOR, &cfg);
  CHECK(cfg.n_max == 40);
  CHECK(cfg.p_max == 16);
  CHECK(cfg.window == 10);
  cfg.threads = 2;
  cyldom_waste_table* t = nullptr;
  REQUIRE(cyldom_waste_table_compute(5, CYLDOM_INTERIOR, &cfg, nullptr, nullptr, &t) == CYLDOM_OK);
  cyldom_table_info info;
  REQUIRE(cyldom_waste_table_info(t, &info) == CYLDOM_OK);
  CHECK(info.height == 5);
  CHECK(info.seeds_total == 99);
  CHECK(info.seeds_certified == 99);
  CHECK(info.has_global == 1);
  CHECK(info.global_first == 9);
  CHECK(info.global_period == 5);
  CHECK(info.global_increment == 0);
  REQUIRE(info.residue_count == 5);
  int64_t res[5];
  CHECK(cyldom_waste_table_residues(t, res, 5) == CYLDOM_OK);
  int64_t big = 0, small = 0;
  REQUIRE(cyldom_waste_table_query(t, 1000001, &big) == CYLDOM_OK);
  CHECK(big == res[1]);

  const auto dir = (std::filesystem::temp_directory_path() / "cyldom_capi_cache").string();
  std::filesystem::remove_all(dir);
  cyldom_waste_table* none = nullptr;
  CHECK(cyldom_waste_table_load_cached(dir.c_str(), CYLDOM_INTERIOR, 5, 40, &none) == CYLDOM_OK);
  CHECK(none == nullptr);
  char* path = nullptr;
  REQUIRE(cyldom_waste_table_store_cached(dir.c_str(), t, &path) == CYLDOM_OK);
  CHECK(take(path).find("waste_interior_h5_n40_v1.json") != std::string::npos);
  cyldom_waste_table* back = nullptr;
  REQUIRE(cyldom_waste_table_load_cached(dir.c_str(), CYLDOM_INTERIOR, 5, 40, &back) == CYLDOM_OK);
  REQUIRE(back != nullptr);
  for (int64_t n = 1; n <= 60; ++n) {
    REQUIRE(cyldom_waste_table_query(t, n, &big) == CYLDOM_OK);
    REQUIRE(cyldom_waste_table_query(back, n, &small) == CYLDOM_OK);
    CHECK(big == small);
  }
  char* a = nullptr;
  char* b = nullptr;
  cyldom_waste_table_to_json(t, &a);
  cyldom_waste_table_to_json(back, &b);
  CHECK(take(a) == take(b));
  cyldom_waste_table_free(back);
  cyldom_waste_table_free(t);
  std::filesystem::remove_all(dir);
}

TEST_CASE("reports through the C interface") {
  cyldom_table_set* set = nullptr;
  REQUIRE(cyldom_table_set_new(&set) == CYLDOM_OK);
  for (int h = 1; h <= 6; ++h) {
    for (cyldom_variant v : {CYLDOM_BOUNDARY, CYLDOM_INTERIOR}) {
      cyldom_waste_table* t = nullptr;
      REQUIRE(cyldom_waste_table_compute(h, v, nullptr, nullptr, nullptr, &t) == CYLDOM_OK);
      REQUIRE(cyldom_table_set_add(set, t) == CYLDOM_OK);
      cyldom_waste_table_free(t);  // the set keeps its own reference
    }
  }
  cyldom_report_options opts;
  cyldom_report_options_default(&opts);
  opts.with_exact = 1;
  cyldom_report* r = nullptr;
  REQUIRE(cyldom_report_make(10, 12, set, &opts, &r) == CYLDOM_OK);
  cyldom_report_values v;
  REQUIRE(cyldom_report_values_get(r, &v) == CYLDOM_OK);
  CHECK(v.has_exact == 1);
  CHECK(v.exact == 28);
  CHECK(v.lower <= 28);
  CHECK(v.has_paper_lower == 0);
  CHECK(v.has_partition == 1);
  char* row = nullptr;
  REQUIRE(cyldom_report_format(r, CYLDOM_FORMAT_CSV, &row) == CYLDOM_OK);
  CHECK(take(row).rfind("10,12,", 0) == 0);
  char* header = nullptr;
  REQUIRE(cyldom_report_header(CYLDOM_FORMAT_CSV, &header) == CYLDOM_OK);
  CHECK(take(header) == "n,m,lower,paper_lower,upper_ref,exact,partition");
  cyldom_report_free(r);

  // Without tables only the trivial bound remains.
  REQUIRE(cyldom_report_make(65, 20, nullptr, nullptr, &r) == CYLDOM_OK);
  REQUIRE(cyldom_report_values_get(r, &v) == CYLDOM_OK);
  CHECK(v.lower == 260);
  CHECK(v.has_partition == 0);
  CHECK(v.upper_ref_num == 286);
  CHECK(v.upper_ref_den == 1);
  cyldom_report_free(r);
  cyldom_table_set_free(set);

  int64_t num = 0, den = 0;
  REQUIRE(cyldom_paper_lower_bound(66, 30, &num, &den) == CYLDOM_OK);
  CHECK(num == 2118);
  CHECK(den == 5);
  REQUIRE(cyldom_upper_bound_reference(67, 30, &num, &den) == CYLDOM_OK);
  CHECK(num == 432);
  CHECK(den == 1);
}

TEST_CASE("verify entry point") {
  int passed = 0;
  char* json = nullptr;
  REQUIRE(cyldom_verify("oracle", 1, nullptr, nullptr, nullptr, &passed, &json) == CYLDOM_OK);
  CHECK(passed == 1);
  CHECK(take(json).find("\"suite\": \"oracle\"") != std::string::npos);
  CHECK(cyldom_verify("bogus", 1, nullptr, nullptr, nullptr, &passed, nullptr) == CYLDOM_ERR_INVALID_ARGUMENT);
}
