#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <vector>

#include <json.hpp>

#include "cyldom/cache.hpp"
#include "cyldom/error.hpp"
#include "cyldom/verify.hpp"

using namespace cyldom;
namespace fs = std::filesystem;

namespace {

std::vector<Waste> interior_series(Waste residue3) {
  const Waste residues[5] = {0, 6, 5, residue3, 6};
  std::vector<Waste> d = {0, 6, 5, 6, 6, 0, 5, 5, 9, 6};
  for (int n = 10; n <= 40; ++n) d.push_back(residues[n % 5]);
  return d;
}

std::string seeded_cache(const std::string& name, Waste residue3) {
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  std::vector<Waste> b(141);
  for (int n = 0; n <= 140; ++n) b[static_cast<std::size_t>(n)] = n;
  store_cached(dir.string(), WasteTable::from_series(Variant::Boundary, 10, b, GlobalCertificate{65, 1, 1}, 8119, 8119));
  store_cached(dir.string(),
               WasteTable::from_series(Variant::Interior, 10, interior_series(residue3), GlobalCertificate{12, 5, 0}, 8119, 8119));
  return dir.string();
}

}  // namespace

TEST_CASE("suite names") {
  CHECK(parse_suite("oracle") == Suite::Oracle);
  CHECK(parse_suite("paper") == Suite::Paper);
  CHECK(parse_suite("all") == Suite::All);
  CHECK_FALSE(parse_suite("fast").has_value());
  CHECK(suite_name(Suite::Paper) == "paper");
}

TEST_CASE("oracle suite passes and reports every check") {
  const VerifyReport r = run_verify(Suite::Oracle);
  CHECK(r.passed());
  CHECK(r.failures().empty());
  CHECK(r.checks.size() >= 15);
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["suite"] == "oracle");
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() == r.checks.size());
}

TEST_CASE("oracle suite is the same for any worker count") {
  VerifyOptions one, eight;
  eight.threads = 8;
  CHECK(run_verify(Suite::Oracle, one).to_json() == run_verify(Suite::Oracle, eight).to_json());
}

TEST_CASE("paper suite reads cached tables") {
  VerifyOptions opts;
  opts.cache_dir = seeded_cache("cyldom_verify_good", 9);
  const VerifyReport r = run_verify(Suite::Paper, opts);
  CHECK(r.passed());
  fs::remove_all(opts.cache_dir);
}

TEST_CASE("paper suite flags a wrong table") {
  VerifyOptions opts;
  opts.cache_dir = seeded_cache("cyldom_verify_bad", 8);
  const VerifyReport r = run_verify(Suite::Paper, opts);
  CHECK_FALSE(r.passed());
  const auto f = r.failures();
  CHECK(std::find(f.begin(), f.end(), "interior-h10") != f.end());
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["passed"] == false);
  CHECK(j["failures"].size() == f.size());
  fs::remove_all(opts.cache_dir);
}

TEST_CASE("cache file names carry variant, height, n_max and version") {
  CHECK(cache_file_name(Variant::Interior, 10, 40) == "waste_interior_h10_n40_v1.json");
  const fs::path dir = fs::temp_directory_path() / "cyldom_cache_names";
  fs::remove_all(dir);
  CHECK(load_cached(dir.string(), Variant::Boundary, 10, 140) == nullptr);
  fs::create_directories(dir);
  {
    std::ofstream(dir / cache_file_name(Variant::Boundary, 10, 140)) << "{broken";
  }
  CHECK_THROWS_AS(load_cached(dir.string(), Variant::Boundary, 10, 140), Error);
  fs::remove_all(dir);
}
