// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// All comparisons are exact integer or rational equality.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cyldom/bounds.hpp"
#include "cyldom/dp_engine.hpp"
#include "cyldom/oracle.hpp"

using namespace cyldom;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = false;
  std::string detail;
};

int g_failures = 0;

void criterion(int id, const char* title, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget_seconds > 0 && secs > budget_seconds) {
    o.passed = false;
    o.detail += " (over the " + std::to_string(static_cast<int>(budget_seconds)) + " s budget)";
  }
  if (!o.passed) ++g_failures;
  std::printf("[%s] criterion %d: %s | %s | %.1f s\n", o.passed ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string triple(const std::optional<GlobalCertificate>& g) {
  if (!g) return "(none)";
  return "(" + std::to_string(g->first) + "," + std::to_string(g->period) + "," + std::to_string(g->increment) + ")";
}

WasteTable height10(Variant v) {
  DpParams p = default_params(v);
  p.threads = 1;
  return compute_waste_table(build_transition_table(10, v), p);
}

}  // namespace

int main() {
  std::shared_ptr<const WasteTable> interior, boundary;

  criterion(1, "interior h=10 certifies (12,5,0) with residues 0,6,5,9,6", 4 * 3600, [&] {
    interior = std::make_shared<const WasteTable>(height10(Variant::Interior));
    const auto& g = interior->global();
    bool ok = interior->fully_certified() && g && *g == GlobalCertificate{12, 5, 0};
    const std::vector<Waste> expected{0, 6, 5, 9, 6};
    ok = ok && interior->residue_constants() && *interior->residue_constants() == expected;
    for (int n = 12; n <= interior->n_max() + 200; ++n)
      ok = ok && interior->query(n) == expected[static_cast<std::size_t>(n % 5)];
    ok = ok && interior->query(1000003) == 9;
    return Outcome{ok, "seeds " + std::to_string(interior->seeds_certified()) + "/" +
                           std::to_string(interior->seeds_total()) + ", (N,p,q) = " + triple(g)};
  });

  criterion(2, "boundary h=10 certifies d(n) = n for 65 <= n <= 80 with (p,q) = (1,1)", 6 * 3600, [&] {
    boundary = std::make_shared<const WasteTable>(height10(Variant::Boundary));
    const auto& g = boundary->global();
    bool ok = boundary->fully_certified() && g && g->period == 1 && g->increment == 1 && g->first <= 65;
    for (int n = 65; n <= 80; ++n) ok = ok && boundary->query(n) == n;
    ok = ok && boundary->query(100) == 100 && boundary->query(64) == 64;
    return Outcome{ok, "seeds " + std::to_string(boundary->seeds_certified()) + "/" +
                           std::to_string(boundary->seeds_total()) + ", (N,p,q) = " + triple(g)};
  });

  criterion(3, "DP minimum equals brute force for h in 1..3, n in 3..5, both variants", 120, [] {
    int cases = 0;
    for (Variant v : {Variant::Boundary, Variant::Interior}) {
      for (int h = 1; h <= 3; ++h) {
        DpParams p;
        p.n_max = 5;
        const WasteTable t = compute_waste_table(build_transition_table(h, v), p);
        for (int n = 3; n <= 5; ++n) {
          if (t.query(n) != oracle::brute_min_waste(h, n, v))
            return Outcome{false, std::string(variant_name(v)) + " h=" + std::to_string(h) + " n=" + std::to_string(n)};
          ++cases;
        }
      }
    }
    return Outcome{true, std::to_string(cases) + " cases equal"};
  });

  criterion(4, "gamma(C10 x P12) = 28 and exact modes agree for n*m <= 20", 300, [] {
    const oracle::ExactResult r = oracle::exact_domination_number(10, 12, oracle::ExactMode::Auto, true);
    if (r.gamma != 28 || !r.witness || !oracle::dominates(*r.witness) || r.witness->size() != 28)
      return Outcome{false, "gamma " + std::to_string(r.gamma)};
    const oracle::ExactLimits limits{20, 20, 20};
    int instances = 0;
    for (int n = 3; n <= 20; ++n) {
      for (int m = 1; n * m <= 20; ++m) {
        const int a = oracle::exact_domination_number(n, m, oracle::ExactMode::Exhaustive, false, limits).gamma;
        const int b = oracle::exact_domination_number(n, m, oracle::ExactMode::Profile, false, limits).gamma;
        if (a != b) return Outcome{false, "modes differ at n=" + std::to_string(n) + " m=" + std::to_string(m)};
        ++instances;
      }
    }
    return Outcome{true, "gamma 28, " + std::to_string(instances) + " instances agree"};
  });

  criterion(5, "height-10 lower bounds equal the closed form; gap 2.2 for n = 2 mod 5", 60, [&] {
    if (!interior || !boundary) return Outcome{false, "height-10 tables unavailable"};
    TableSet tables;
    tables.add(interior);
    tables.add(boundary);
    int cases = 0;
    for (int n = 65; n <= 74; ++n) {
      for (int m : {20, 30, 40}) {
        const BoundReport r = make_report(n, m, tables);
        const Rational pl = paper_lower_bound(n, m);
        const Rational ub = upper_bound_reference(n, m);
        if (r.lower != pl.ceil() || !(pl <= ub))
          return Outcome{false, "n=" + std::to_string(n) + " m=" + std::to_string(m) + " lower " +
                                    std::to_string(r.lower) + " vs " + pl.to_string()};
        if (n % 5 == 2 && ub - pl != Rational(11, 5))
          return Outcome{false, "gap at n=" + std::to_string(n) + " m=" + std::to_string(m) + " is " + (ub - pl).to_string()};
        ++cases;
      }
    }
    return Outcome{true, std::to_string(cases) + " (n,m) pairs"};
  });

  criterion(6, "step invariance and monotonicity, witness replay, worker-count determinism", 600, [] {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<Waste> value(0, 2000), shift(0, 700), drop(0, 60);
    std::bernoulli_distribution inf(0.1);
    int trials = 0;
    for (Variant v : {Variant::Boundary, Variant::Interior}) {
      const TransitionTable t = build_transition_table(5, v);
      for (int k = 0; k < 600; ++k, ++trials) {
        WasteVector w(t.state_count());
        for (auto& x : w) x = inf(rng) ? kInfiniteWaste : value(rng);
        const Waste q = shift(rng);
        WasteVector shifted(w.size()), lower(w.size()), a(w.size()), b(w.size()), c(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
          shifted[i] = add_waste(w[i], q);
          lower[i] = finite(w[i]) ? std::max<Waste>(0, w[i] - drop(rng)) : w[i];
        }
        relax_column(t, w, a);
        relax_column(t, shifted, b);
        relax_column(t, lower, c);
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (b[i] != add_waste(a[i], q)) return Outcome{false, "translation invariance broken"};
          if (c[i] > a[i]) return Outcome{false, "monotonicity broken"};
        }
      }
    }

    int witnesses = 0;
    for (Variant v : {Variant::Boundary, Variant::Interior}) {
      for (int h = 1; h <= 3; ++h) {
        const TransitionTable t = build_transition_table(h, v);
        for (int n = 1; n <= 4; ++n) {
          for (StateIndex s = 0; s < t.state_count(); ++s) {
            const Waste dp = run_seed(s, t, n).diagonal[static_cast<std::size_t>(n)];
            if (!finite(dp)) continue;
            const Witness w = reconstruct_witness(s, n, t);
            oracle::VertexSet set(n, h);
            for (const auto& [col, row] : w.vertices) set.insert(col, row);
            if (w.waste != dp || oracle::waste_of(set, v) != dp || !oracle::almost_dominates(set, v))
              return Outcome{false, "witness mismatch"};
            ++witnesses;
          }
        }
      }
    }

    for (Variant v : {Variant::Boundary, Variant::Interior}) {
      const TransitionTable t = build_transition_table(7, v);
      DpParams p;
      p.n_max = 60;
      std::string reference;
      for (int threads : {1, 4, 8}) {
        p.threads = threads;
        const std::string json = compute_waste_table(t, p).to_json();
        if (reference.empty()) reference = json;
        if (json != reference) return Outcome{false, "worker count changed the result"};
      }
    }
    return Outcome{true, std::to_string(trials) + " random trials, " + std::to_string(witnesses) +
                             " witnesses, 1/4/8 workers identical"};
  });

  std::printf("acceptance: %d failure(s)\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
