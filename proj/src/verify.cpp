#include "cyldom/verify.hpp"

#include <exception>
#include <memory>

#include <json.hpp>

#include "cyldom/bounds.hpp"
#include "cyldom/cache.hpp"
#include "cyldom/dp_engine.hpp"
#include "cyldom/oracle.hpp"
#include "cyldom/state_space.hpp"

namespace cyldom {

std::optional<Suite> parse_suite(std::string_view name) noexcept {
  if (name == "oracle") return Suite::Oracle;
  if (name == "paper") return Suite::Paper;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

std::string_view suite_name(Suite s) noexcept {
  switch (s) {
    case Suite::Oracle: return "oracle";
    case Suite::Paper: return "paper";
    case Suite::All: break;
  }
  return "all";
}

bool VerifyReport::passed() const noexcept {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::vector<std::string> VerifyReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c.name);
  return out;
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite_name(suite);
  j["passed"] = passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["failures"] = failures();
  return j.dump(2);
}

namespace {

class Recorder {
 public:
  Recorder(VerifyReport& report, const VerifyOptions& options) : report_(report), options_(options) {}

  // Runs body; an exception counts as a failed check with its message as detail.
  template <typename Body>
  void check(std::string name, Body&& body) {
    Check c{std::move(name), false, {}};
    try {
      c.passed = body(c.detail);
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = std::string("exception: ") + e.what();
    }
    if (options_.log) options_.log((c.passed ? "pass " : "FAIL ") + c.name + (c.detail.empty() ? "" : ": " + c.detail));
    report_.checks.push_back(std::move(c));
  }

 private:
  VerifyReport& report_;
  const VerifyOptions& options_;
};

std::string variant_tag(Variant v) { return std::string(variant_name(v)); }

void oracle_suite(Recorder& rec, const VerifyOptions& options) {
  for (int h = 1; h <= 6; ++h) {
    rec.check("state-count-h" + std::to_string(h), [h](std::string& detail) {
      std::size_t brute = 0;
      std::vector<int> e(static_cast<std::size_t>(h), 0);
      int total = 1;
      for (int k = 0; k < h; ++k) total *= 3;
      for (int code = 0; code < total; ++code) {
        int c = code;
        for (auto& x : e) {
          x = c % 3;
          c /= 3;
        }
        if (StateWord::from_entries(e).valid()) ++brute;
      }
      const std::size_t got = enumerate_valid_states(h).size();
      detail = std::to_string(got) + " vs " + std::to_string(brute);
      return got == brute;
    });
  }

  for (Variant v : {Variant::Boundary, Variant::Interior}) {
    for (int h = 1; h <= 3; ++h) {
      rec.check("dp-vs-brute-" + variant_tag(v) + "-h" + std::to_string(h), [&](std::string& detail) {
        const TransitionTable table = build_transition_table(h, v);
        DpParams params;
        params.n_max = 5;
        params.threads = options.threads;
        const WasteTable w = compute_waste_table(table, params);
        bool ok = true;
        for (int n = 1; n <= 5; ++n) {
          const Waste dp = w.query(n);
          const std::int64_t brute = oracle::brute_min_waste(h, n, v);
          detail += (n > 1 ? " " : "") + std::to_string(dp) + "/" + std::to_string(brute);
          ok = ok && dp == brute;
        }
        return ok;
      });
      rec.check("witness-replay-" + variant_tag(v) + "-h" + std::to_string(h), [&](std::string& detail) {
        const TransitionTable table = build_transition_table(h, v);
        int replayed = 0;
        for (int n = 1; n <= 4; ++n) {
          for (StateIndex s = 0; s < table.state_count(); ++s) {
            const SeedRun run = run_seed(s, table, n);
            if (!finite(run.diagonal[static_cast<std::size_t>(n)])) continue;
            const Witness wit = reconstruct_witness(s, n, table);
            oracle::VertexSet set(n, h);
            for (const auto& [c, r] : wit.vertices) set.insert(c, r);
            if (wit.waste != run.diagonal[static_cast<std::size_t>(n)] ||
                oracle::waste_of(set, v) != wit.waste || !oracle::almost_dominates(set, v)) {
              detail = "seed " + std::to_string(s) + " n " + std::to_string(n);
              return false;
            }
            ++replayed;
          }
        }
        detail = std::to_string(replayed) + " witnesses";
        return true;
      });
    }
  }

  rec.check("exact-modes-agree", [](std::string& detail) {
    const oracle::ExactLimits limits{20, 20, 20};
    int instances = 0;
    for (int n = 3; n <= 20; ++n) {
      for (int m = 1; n * m <= 20; ++m) {
        const int a = oracle::exact_domination_number(n, m, oracle::ExactMode::Exhaustive, false, limits).gamma;
        const int b = oracle::exact_domination_number(n, m, oracle::ExactMode::Profile, false, limits).gamma;
        if (a != b) {
          detail = "n " + std::to_string(n) + " m " + std::to_string(m);
          return false;
        }
        ++instances;
      }
    }
    detail = std::to_string(instances) + " instances";
    return true;
  });

  rec.check("cycle-domination", [](std::string& detail) {
    for (int n = 3; n <= 12; ++n) {
      if (oracle::exact_domination_number(n, 1).gamma != (n + 2) / 3) {
        detail = "n " + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  rec.check("exact-10x12", [](std::string& detail) {
    const oracle::ExactResult r = oracle::exact_domination_number(10, 12, oracle::ExactMode::Auto, true);
    detail = "gamma " + std::to_string(r.gamma);
    return r.gamma == 28 && r.witness && r.witness->size() == 28 && oracle::dominates(*r.witness);
  });

  rec.check("cyclic-state-count", [](std::string& detail) {
    for (int n = 3; n <= 10; ++n) {
      std::uint64_t brute = 0;
      int total = 1;
      for (int k = 0; k < n; ++k) total *= 3;
      for (int code = 0; code < total; ++code) {
        std::vector<int> e(static_cast<std::size_t>(n));
        int c = code;
        for (auto& x : e) {
          x = c % 3;
          c /= 3;
        }
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) {
          const int a = e[static_cast<std::size_t>(j)], b = e[static_cast<std::size_t>((j + 1) % n)];
          ok = a + b != 2 || a == b;
        }
        brute += ok;
      }
      if (oracle::count_cyclic_states(n) != brute) {
        detail = "n " + std::to_string(n);
        return false;
      }
    }
    detail = "n = 10: " + std::to_string(oracle::count_cyclic_states(10));
    return true;
  });
}

std::shared_ptr<const WasteTable> height10(Variant v, const VerifyOptions& options) {
  DpParams params = default_params(v);
  params.threads = options.threads;
  if (!options.cache_dir.empty())
    if (auto cached = load_cached(options.cache_dir, v, 10, params.n_max)) return cached;
  if (options.log) options.log("computing " + variant_tag(v) + " h=10 table, n_max " + std::to_string(params.n_max));
  auto table = std::make_shared<const WasteTable>(compute_waste_table(build_transition_table(10, v), params));
  if (!options.cache_dir.empty()) store_cached(options.cache_dir, *table);
  return table;
}

std::string global_string(const std::optional<GlobalCertificate>& g) {
  if (!g) return "no global certificate";
  return "(N,p,q) = (" + std::to_string(g->first) + "," + std::to_string(g->period) + "," +
         std::to_string(g->increment) + ")";
}

void paper_suite(Recorder& rec, const VerifyOptions& options) {
  std::shared_ptr<const WasteTable> interior, boundary;
  rec.check("interior-h10", [&](std::string& detail) {
    interior = height10(Variant::Interior, options);
    detail = global_string(interior->global());
    const auto& g = interior->global();
    const auto& res = interior->residue_constants();
    const bool ok = interior->fully_certified() && g && *g == GlobalCertificate{12, 5, 0} && res &&
                    *res == std::vector<Waste>{0, 6, 5, 9, 6} && interior->query(1000003) == 9;
    return ok;
  });
  rec.check("boundary-h10", [&](std::string& detail) {
    boundary = height10(Variant::Boundary, options);
    detail = global_string(boundary->global());
    const auto& g = boundary->global();
    bool ok = boundary->fully_certified() && g && *g == GlobalCertificate{65, 1, 1};
    for (int n = 65; n <= 80; ++n) ok = ok && boundary->query(n) == n;
    return ok && boundary->query(100) == 100;
  });
  if (!interior || !boundary) return;

  TableSet tables;
  tables.add(interior);
  tables.add(boundary);
  rec.check("formula-consistency", [&](std::string& detail) {
    for (int n = 65; n <= 74; ++n) {
      for (int m : {20, 30, 40}) {
        const BoundReport r = make_report(n, m, tables);
        const Rational pl = paper_lower_bound(n, m);
        if (r.lower != pl.ceil() || !(pl <= upper_bound_reference(n, m))) {
          detail = "n " + std::to_string(n) + " m " + std::to_string(m) + ": lower " +
                   std::to_string(r.lower) + " vs " + pl.to_string();
          return false;
        }
      }
    }
    return true;
  });
  rec.check("gap-2.2", [&](std::string& detail) {
    for (int n : {67, 72, 1002})
      for (int m : {20, 30, 40})
        if (upper_bound_reference(n, m) - paper_lower_bound(n, m) != Rational(11, 5)) {
          detail = "n " + std::to_string(n) + " m " + std::to_string(m);
          return false;
        }
    return true;
  });
  rec.check("bound-65x20", [&](std::string& detail) {
    const BoundReport r = make_report(65, 20, tables);
    detail = "lower " + std::to_string(r.lower) + ", " + r.status();
    return r.lower == 286 && r.upper_ref == Rational(286) && r.status() == "exact";
  });
  rec.check("bound-67x30", [&](std::string& detail) {
    const BoundReport r = make_report(67, 30, tables);
    detail = "lower " + std::to_string(r.lower);
    return r.lower == 430 && r.total_waste == 2 * 67 + 5;
  });
}

}  // namespace

VerifyReport run_verify(Suite suite, const VerifyOptions& options) {
  VerifyReport report;
  report.suite = suite;
  Recorder rec(report, options);
  if (suite != Suite::Paper) oracle_suite(rec, options);
  if (suite != Suite::Oracle) paper_suite(rec, options);
  return report;
}

}  // namespace cyldom
