// Command-line front end. Everything goes through the C interface.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "cyldom/cyldom.h"

namespace {

enum Exit : int {
  kOk = 0,
  kFailure = 1,
  kBadArguments = 2,
  kPartial = 3,
  kMissingTables = 4,
  kVerifyFailed = 5,
};

// Largest height computed on demand without --compute.
constexpr int kAutoComputeMaxHeight = 8;

struct CliError {
  int code;
  std::string message;
};

int exit_code_for(cyldom_status s) {
  switch (s) {
    case CYLDOM_OK: return kOk;
    case CYLDOM_ERR_INVALID_ARGUMENT:
    case CYLDOM_ERR_DOMAIN: return kBadArguments;
    case CYLDOM_ERR_INCOMPLETE_TABLE: return kMissingTables;
    default: return kFailure;
  }
}

void check(cyldom_status s) {
  if (s != CYLDOM_OK) throw CliError{exit_code_for(s), std::string(cyldom_status_name(s)) + ": " + cyldom_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  cyldom_string_free(s);
  return out;
}

struct TableDeleter {
  void operator()(cyldom_waste_table* t) const { cyldom_waste_table_free(t); }
};
struct SetDeleter {
  void operator()(cyldom_table_set* s) const { cyldom_table_set_free(s); }
};
struct ReportDeleter {
  void operator()(cyldom_report* r) const { cyldom_report_free(r); }
};
using TablePtr = std::unique_ptr<cyldom_waste_table, TableDeleter>;
using SetPtr = std::unique_ptr<cyldom_table_set, SetDeleter>;
using ReportPtr = std::unique_ptr<cyldom_report, ReportDeleter>;

struct RunConfig {
  int threads = 0;  // 0: resolve from the environment
  std::optional<int> n_max;
  int p_max = 16;
  int window = 10;
  std::string cache_dir;
  std::string format;
  std::string out;
  bool compute = false;
  bool quiet = false;
};

int resolve_threads(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("CYLDOM_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
    throw CliError{kBadArguments, std::string("CYLDOM_THREADS must be a positive integer, got '") + env + "'"};
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string default_cache_dir() {
  const char* env = std::getenv("CYLDOM_CACHE_DIR");
  return env && *env ? env : ".cyldom-cache";
}

cyldom_dp_config dp_config(const RunConfig& cfg, cyldom_variant v) {
  cyldom_dp_config c;
  cyldom_dp_config_default(v, &c);
  if (cfg.n_max) c.n_max = *cfg.n_max;
  c.p_max = cfg.p_max;
  c.window = cfg.window;
  c.threads = resolve_threads(cfg.threads);
  return c;
}

const char* variant_str(cyldom_variant v) { return v == CYLDOM_BOUNDARY ? "boundary" : "interior"; }

void progress_to_stderr(size_t done, size_t total, void*) {
  const size_t step = std::max<size_t>(1, total / 10);
  if (done % step == 0 || done == total) std::fprintf(stderr, "  seeds %zu/%zu\n", done, total);
}

// Emits to --out when given, stdout otherwise.
void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  f << text;
  if (!f) throw CliError{kFailure, "cannot write " + cfg.out};
}

TablePtr compute_table(const RunConfig& cfg, int height, cyldom_variant v) {
  const cyldom_dp_config c = dp_config(cfg, v);
  if (!cfg.quiet)
    std::fprintf(stderr, "computing %s h=%d, n_max %d, %d thread(s)\n", variant_str(v), height, c.n_max, c.threads);
  cyldom_waste_table* t = nullptr;
  check(cyldom_waste_table_compute(height, v, &c, cfg.quiet ? nullptr : progress_to_stderr, nullptr, &t));
  TablePtr table(t);
  check(cyldom_waste_table_store_cached(cfg.cache_dir.c_str(), table.get(), nullptr));
  return table;
}

TablePtr cached_table(const RunConfig& cfg, int height, cyldom_variant v) {
  const cyldom_dp_config c = dp_config(cfg, v);
  cyldom_waste_table* t = nullptr;
  check(cyldom_waste_table_load_cached(cfg.cache_dir.c_str(), v, height, c.n_max, &t));
  return TablePtr(t);
}

cyldom_table_info info_of(const cyldom_waste_table* t) {
  cyldom_table_info info;
  check(cyldom_waste_table_info(t, &info));
  return info;
}

std::vector<std::int64_t> parse_range(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string part;
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used != s.size() || v < 1) throw std::invalid_argument(s);
      return static_cast<std::int64_t>(v);
    } catch (const std::exception&) {
      throw CliError{kBadArguments, std::string("bad ") + what + " value '" + s + "'"};
    }
  };
  while (std::getline(ss, part, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(number(part));
      continue;
    }
    const std::int64_t a = number(part.substr(0, dots)), b = number(part.substr(dots + 2));
    if (b - a > 100000) throw CliError{kBadArguments, std::string(what) + " range too long"};
    for (std::int64_t x = a; x <= b; ++x) out.push_back(x);
  }
  return out;
}

cyldom_format parse_format(const std::string& f) {
  if (f == "json") return CYLDOM_FORMAT_JSON;
  if (f == "csv") return CYLDOM_FORMAT_CSV;
  if (f == "markdown") return CYLDOM_FORMAT_MARKDOWN;
  throw CliError{kBadArguments, "unknown format '" + f + "'"};
}

// ---- strip ----

int cmd_strip(const RunConfig& cfg, int height, const std::string& variant_name, bool recompute) {
  cyldom_variant v;
  check(cyldom_parse_variant(variant_name.c_str(), &v));
  TablePtr table = recompute ? nullptr : cached_table(cfg, height, v);
  const bool from_cache = table != nullptr;
  if (!table) table = compute_table(cfg, height, v);
  const cyldom_table_info info = info_of(table.get());

  if (cfg.format == "json") {
    emit(cfg, take([&] {
           char* s = nullptr;
           check(cyldom_waste_table_to_json(table.get(), &s));
           return s;
         }()) + "\n");
  } else {
    std::ostringstream os;
    os << variant_str(v) << " h=" << height << " n_max=" << info.n_max << (from_cache ? " (cached)" : "") << "\n";
    os << "certified seeds: " << info.seeds_certified << "/" << info.seeds_total << "\n";
    if (info.has_global)
      os << "(N,p,q) = (" << info.global_first << "," << info.global_period << "," << info.global_increment << ")\n";
    else
      os << "(N,p,q) = none\n";
    if (info.residue_count > 0) {
      std::vector<std::int64_t> res(info.residue_count);
      check(cyldom_waste_table_residues(table.get(), res.data(), res.size()));
      os << "residues:";
      for (std::size_t k = 0; k < res.size(); ++k) os << (k ? "," : " ") << res[k];
      os << "\n";
    }
    os << "d(n), n = 1.." << info.n_max << ":";
    for (int n = 1; n <= info.n_max; ++n) {
      std::int64_t w = 0;
      check(cyldom_waste_table_query(table.get(), n, &w));
      os << ' ' << w;
    }
    os << "\n";
    char* name = nullptr;
    check(cyldom_cache_file_name(v, height, info.n_max, &name));
    os << "cache: " << cfg.cache_dir << "/" << take(name) << "\n";
    emit(cfg, os.str());
  }
  return info.seeds_total > 0 && info.seeds_certified == info.seeds_total ? kOk : kPartial;
}

// ---- bound / table ----

std::set<int> default_heights(std::int64_t m) {
  if (m >= 20) return {10};
  std::set<int> out;
  for (int h = 1; h < m && h <= kAutoComputeMaxHeight; ++h) out.insert(h);
  return out;
}

// Gathers every table a partition of m could use over the given heights.
SetPtr gather_tables(const RunConfig& cfg, const std::set<std::int64_t>& ms, const std::set<int>& fixed) {
  std::set<std::pair<int, int>> needed;  // (variant, height)
  for (std::int64_t m : ms) {
    const std::set<int> heights = fixed.empty() ? default_heights(m) : fixed;
    if (heights.empty()) continue;
    const int smallest = *heights.begin();
    for (int h : heights) {
      if (m - h >= smallest) needed.insert({CYLDOM_BOUNDARY, h});
      if (m - h >= 2 * smallest) needed.insert({CYLDOM_INTERIOR, h});
    }
  }

  cyldom_table_set* raw = nullptr;
  check(cyldom_table_set_new(&raw));
  SetPtr set(raw);
  std::vector<std::string> missing;
  for (const auto& [vi, h] : needed) {
    const auto v = static_cast<cyldom_variant>(vi);
    TablePtr t = cached_table(cfg, h, v);
    if (!t && (cfg.compute || h <= kAutoComputeMaxHeight)) t = compute_table(cfg, h, v);
    if (!t) {
      char* name = nullptr;
      check(cyldom_cache_file_name(v, h, dp_config(cfg, v).n_max, &name));
      missing.push_back(take(name));
      continue;
    }
    check(cyldom_table_set_add(set.get(), t.get()));
  }
  if (!missing.empty()) {
    std::string msg = "missing waste tables in " + cfg.cache_dir + ":";
    for (const auto& m : missing) msg += " " + m;
    throw CliError{kMissingTables, msg + " (run `strip` for them or pass --compute)"};
  }
  return set;
}

std::string report_line(const cyldom_report* r, cyldom_format f) {
  char* s = nullptr;
  check(cyldom_report_format(r, f, &s));
  return take(s);
}

ReportPtr make_report(std::int64_t n, std::int64_t m, const cyldom_table_set* set, bool exact) {
  cyldom_report_options opts;
  cyldom_report_options_default(&opts);
  opts.with_exact = exact ? 1 : 0;
  cyldom_report* r = nullptr;
  check(cyldom_report_make(n, m, set, &opts, &r));
  return ReportPtr(r);
}

int cmd_bound(const RunConfig& cfg, std::int64_t n, std::int64_t m, const std::set<int>& heights, bool exact) {
  if (n < 1 || m < 1) throw CliError{kBadArguments, "--n and --m must be positive"};
  const cyldom_format f = parse_format(cfg.format);
  SetPtr set = gather_tables(cfg, {m}, heights);
  ReportPtr r = make_report(n, m, set.get(), exact);
  std::string text;
  if (f != CYLDOM_FORMAT_JSON) {
    char* header = nullptr;
    check(cyldom_report_header(f, &header));
    text = take(header) + "\n";
  }
  emit(cfg, text + report_line(r.get(), f) + "\n");
  return kOk;
}

int cmd_table(const RunConfig& cfg, const std::string& n_spec, const std::string& m_spec,
              const std::set<int>& heights, bool exact) {
  const cyldom_format f = parse_format(cfg.format);
  const std::vector<std::int64_t> ns = parse_range(n_spec, "--n");
  const std::vector<std::int64_t> ms = parse_range(m_spec, "--m");
  std::string text;
  if (f == CYLDOM_FORMAT_JSON) {
    text = "[";
  } else {
    char* header = nullptr;
    check(cyldom_report_header(f, &header));
    text = take(header) + "\n";
  }
  if (!ns.empty() && !ms.empty()) {
    SetPtr set = gather_tables(cfg, {ms.begin(), ms.end()}, heights);
    bool first = true;
    for (std::int64_t m : ms) {
      for (std::int64_t n : ns) {
        ReportPtr r = make_report(n, m, set.get(), exact);
        if (f == CYLDOM_FORMAT_JSON) {
          text += (first ? "\n  " : ",\n  ") + report_line(r.get(), f);
        } else {
          text += report_line(r.get(), f) + "\n";
        }
        first = false;
      }
    }
    if (f == CYLDOM_FORMAT_JSON && !first) text += "\n";
  }
  if (f == CYLDOM_FORMAT_JSON) text += "]\n";
  emit(cfg, text);
  return kOk;
}

// ---- verify ----

void log_to_stderr(const char* line, void*) { std::fprintf(stderr, "%s\n", line); }

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
  int passed = 0;
  char* json = nullptr;
  check(cyldom_verify(suite.c_str(), resolve_threads(cfg.threads), cfg.cache_dir.c_str(),
                      cfg.quiet ? nullptr : log_to_stderr, nullptr, &passed, &json));
  emit(cfg, take(json) + "\n");
  return passed ? kOk : kVerifyFailed;
}

void add_dp_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--threads", cfg.threads, "Worker threads (default: $CYLDOM_THREADS, else all cores)")
      ->check(CLI::Range(1, 1024));
  cmd->add_option_function<int>("--n-max", [&cfg](int v) { cfg.n_max = v; }, "Columns to iterate")
      ->check(CLI::Range(1, 4096));
  cmd->add_option("--p-max", cfg.p_max, "Largest period searched")->check(CLI::Range(1, 256));
  cmd->add_option("--window", cfg.window, "Extra columns a period must survive")->check(CLI::Range(0, 4096));
  cmd->add_option("--cache-dir", cfg.cache_dir, "Waste table cache (default: $CYLDOM_CACHE_DIR or .cyldom-cache)");
  cmd->add_flag("--quiet", cfg.quiet, "No progress output");
}

std::set<int> parse_heights(const std::string& spec) {
  std::set<int> out;
  if (spec.empty()) return out;
  for (std::int64_t h : parse_range(spec, "--heights")) {
    if (h > 20) throw CliError{kBadArguments, "strip heights above 20 are not supported"};
    out.insert(static_cast<int>(h));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified lower bounds for domination numbers of cylinders C_n x P_m"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.cache_dir = default_cache_dir();

  int height = 0;
  std::string variant;
  bool recompute = false;
  auto* strip = app.add_subcommand("strip", "Compute (or load) the waste table of one strip");
  strip->add_option("--height", height, "Strip height")->required()->check(CLI::Range(1, 20));
  strip->add_option("--variant", variant, "boundary or interior")->required()->check(CLI::IsMember({"boundary", "interior"}));
  strip->add_option("--out", cfg.out, "Write the summary (or JSON) here instead of stdout");
  strip->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  strip->add_flag("--recompute", recompute, "Ignore a cached table");
  add_dp_flags(strip, cfg);

  std::int64_t n = 0, m = 0;
  std::string heights_spec;
  bool exact = false;
  auto* bound = app.add_subcommand("bound", "Bounds for one cylinder");
  bound->add_option("--n", n, "Cycle length")->required();
  bound->add_option("--m", m, "Path length")->required();
  bound->add_option("--format", cfg.format, "json, csv or markdown")->check(CLI::IsMember({"json", "csv", "markdown"}));
  bound->add_option("--out", cfg.out, "Output file");
  bound->add_option("--heights", heights_spec, "Strip heights to use, e.g. 8,10 (default: 10 for m >= 20, else 1..8)");
  bound->add_flag("--compute", cfg.compute, "Compute missing tables instead of failing");
  bound->add_flag("--exact", exact, "Add the exact value when within the solver limits");
  add_dp_flags(bound, cfg);

  std::string n_spec, m_spec;
  auto* table = app.add_subcommand("table", "Bound table over ranges of n and m");
  table->add_option("--n", n_spec, "Range a..b or list")->required();
  table->add_option("--m", m_spec, "Range a..b or list")->required();
  table->add_option("--format", cfg.format, "csv, markdown or json")->check(CLI::IsMember({"json", "csv", "markdown"}));
  table->add_option("--out", cfg.out, "Output file");
  table->add_option("--heights", heights_spec, "Strip heights to use");
  table->add_flag("--compute", cfg.compute, "Compute missing tables instead of failing");
  table->add_flag("--exact", exact, "Add exact values when within the solver limits");
  add_dp_flags(table, cfg);

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "oracle, paper or all")->check(CLI::IsMember({"oracle", "paper", "all"}));
  verify->add_option("--out", cfg.out, "Write the JSON report here");
  add_dp_flags(verify, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadArguments;
  }

  try {
    if (*strip) {
      if (cfg.format.empty()) cfg.format = "text";
      return cmd_strip(cfg, height, variant, recompute);
    }
    if (*bound) {
      if (cfg.format.empty()) cfg.format = "json";
      return cmd_bound(cfg, n, m, parse_heights(heights_spec), exact);
    }
    if (*table) {
      if (cfg.format.empty()) cfg.format = "csv";
      return cmd_table(cfg, n_spec, m_spec, parse_heights(heights_spec), exact);
    }
    if (*verify) return cmd_verify(cfg, suite);
  } catch (const CliError& e) {
    std::fprintf(stderr, "cyldom: %s\n", e.message.c_str());
    return e.code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "cyldom: %s\n", e.what());
    return kFailure;
  }
  return kBadArguments;
}
