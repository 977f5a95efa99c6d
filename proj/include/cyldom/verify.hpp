#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cyldom {

enum class Suite { Oracle, Paper, All };

std::optional<Suite> parse_suite(std::string_view name) noexcept;
std::string_view suite_name(Suite s) noexcept;

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  int threads = 1;
  std::string cache_dir;  // empty: always compute the height-10 tables
  std::function<void(const std::string&)> log;
};

struct VerifyReport {
  Suite suite = Suite::All;
  std::vector<Check> checks;

  bool passed() const noexcept;
  std::vector<std::string> failures() const;
  // {"suite", "passed", "checks": [{name, passed, detail}], "failures": [...]}
  std::string to_json() const;
};

// Oracle suite: small-strip DP against brute force, exact-solver cross-checks,
// witness replay. Paper suite: the two height-10 tables and the closed forms.
VerifyReport run_verify(Suite suite, const VerifyOptions& options = {});

}  // namespace cyldom
