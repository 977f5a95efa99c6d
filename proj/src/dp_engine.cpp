#include "cyldom/dp_engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cyldom/error.hpp"

namespace cyldom {

WasteVector initial_vector(std::size_t state_count, StateIndex seed) {
  if (seed >= state_count) fail(ErrorKind::InvalidArgument, "seed index out of range");
  WasteVector w(state_count, kInfiniteWaste);
  w[seed] = 0;
  return w;
}

void relax_column(const TransitionTable& table, std::span<const Waste> in, std::span<Waste> out) {
  const std::size_t states = table.state_count();
  if (in.size() != states || out.size() != states)
    fail(ErrorKind::InvalidArgument, "waste vector size does not match the state table");
  std::fill(out.begin(), out.end(), kInfiniteWaste);
  for (StateIndex u = 0; u < states; ++u) {
    if (!finite(in[u])) continue;
    const auto to = table.targets_of(u);
    const auto cost = table.costs_of(u);
    for (std::size_t k = 0; k < to.size(); ++k)
      out[to[k]] = std::min(out[to[k]], in[u] + cost[k]);
  }
}

DpParams default_params(Variant v) {
  DpParams p;
  p.n_max = v == Variant::Boundary ? 140 : 40;
  return p;
}

Waste SeedRun::value_at(std::int64_t n) const {
  if (n < 0) fail(ErrorKind::InvalidArgument, "column count must be nonnegative");
  if (n <= n_max()) return diagonal[static_cast<std::size_t>(n)];
  if (!certificate)
    fail(ErrorKind::IncompleteTable,
         "seed " + std::to_string(seed) + " has no periodicity certificate");
  const std::int64_t p = certificate->period;
  const std::int64_t k = (n - n_max() + p - 1) / p;
  return add_waste(diagonal[static_cast<std::size_t>(n - k * p)], k * certificate->increment);
}

namespace {

// Seeds run side by side, one per 16-bit lane, so that one pass over the edge
// list relaxes kLanes DP rows at once.
constexpr int kLanes = 32;
constexpr std::uint16_t kInf16 = 0xFF00;

// Edges grouped by target so each output cell is a register-held running min.
// Lane values carry a per-column offset: after i columns a lane stores
// w_i + i * bias, which keeps every biased edge cost nonnegative.
struct PullIndex {
  std::vector<std::uint64_t> offsets;
  std::vector<std::uint32_t> packed;  // (source << 8) | (cost + bias)
  int bias = 0;
};

int cost_bias(const TransitionTable& table) { return std::max(0, -table.min_cost()); }

PullIndex make_pull_index(const TransitionTable& table) {
  const std::size_t states = table.state_count();
  PullIndex idx;
  idx.bias = cost_bias(table);
  idx.offsets.assign(states + 1, 0);
  for (StateIndex u = 0; u < states; ++u)
    for (StateIndex t : table.targets_of(u)) ++idx.offsets[t + 1];
  std::partial_sum(idx.offsets.begin(), idx.offsets.end(), idx.offsets.begin());
  idx.packed.resize(table.transition_count());
  std::vector<std::uint64_t> fill(idx.offsets.begin(), idx.offsets.end() - 1);
  for (StateIndex u = 0; u < states; ++u) {
    const auto to = table.targets_of(u);
    const auto cost = table.costs_of(u);
    for (std::size_t k = 0; k < to.size(); ++k)
      idx.packed[fill[to[k]]++] = (u << 8) | static_cast<std::uint32_t>(cost[k] + idx.bias);
  }
  return idx;
}

// GCC/Clang vector extension: one value per lane, lowered to whatever SIMD
// width the target offers.
typedef std::uint16_t LaneVector __attribute__((vector_size(kLanes * sizeof(std::uint16_t))));

void step_lanes(const PullIndex& idx, const std::uint16_t* __restrict cur,
                std::uint16_t* __restrict next, std::size_t states) {
  const LaneVector inf = LaneVector{} + kInf16;
  const auto* src = reinterpret_cast<const LaneVector*>(cur);
  auto* dst = reinterpret_cast<LaneVector*>(next);
  const std::uint32_t* packed = idx.packed.data();
  for (std::size_t t = 0; t < states; ++t) {
    LaneVector acc = inf;
    const std::uint64_t end = idx.offsets[t + 1];
    for (std::uint64_t e = idx.offsets[t]; e < end; ++e) {
      const std::uint32_t p = packed[e];
      const LaneVector cand = src[p >> 8] + static_cast<std::uint16_t>(p & 0xFFu);
      acc = acc < cand ? acc : cand;
    }
    dst[t] = acc < inf ? acc : inf;
  }
}

class BatchRunner {
 public:
  BatchRunner(const TransitionTable& table, const PullIndex& idx, int n_max, PeriodSearch search)
      : table_(table),
        idx_(idx),
        n_max_(n_max),
        search_(search),
        states_(table.state_count()),
        slots_(static_cast<std::size_t>(search.p_max) + 1),
        ring_(slots_ * states_) {}

  void run(std::span<const StateIndex> seeds, std::span<SeedRun> out) {
    const int lanes = static_cast<int>(seeds.size());
    std::uint16_t* first = slot(0);
    std::fill(first, first + states_ * kLanes, kInf16);
    for (int l = 0; l < kLanes; ++l) first[lane_seed(seeds, l) * kLanes + l] = 0;

    for (int l = 0; l < lanes; ++l) {
      SeedRun& r = out[static_cast<std::size_t>(l)];
      r.seed = seeds[static_cast<std::size_t>(l)];
      r.height = table_.height();
      r.variant = table_.variant();
      r.state_count = states_;
      r.diagonal.assign(static_cast<std::size_t>(n_max_) + 1, 0);
      r.certificate.reset();
    }

    struct LaneState {
      bool matched = false;
      SeedCertificate cert;
    };
    std::vector<LaneState> lane(static_cast<std::size_t>(lanes));

    for (int n = 1; n <= n_max_; ++n) {
      step_lanes(idx_, slot(n - 1), slot(n), states_);
      const std::uint16_t* cur = slot(n);
      const std::int64_t offset = static_cast<std::int64_t>(n) * idx_.bias;
      for (int l = 0; l < lanes; ++l) {
        const std::uint16_t v = cur[seeds[static_cast<std::size_t>(l)] * kLanes + l];
        out[static_cast<std::size_t>(l)].diagonal[static_cast<std::size_t>(n)] =
            v >= kInf16 ? kInfiniteWaste : static_cast<Waste>(v) - offset;

        LaneState& ls = lane[static_cast<std::size_t>(l)];
        if (ls.matched) {
          const auto diff = lane_shift(n, ls.cert.period, l);
          if (!diff || *diff != ls.cert.increment + ls.cert.period * idx_.bias)
            throw std::logic_error("periodicity match failed to propagate");
          ++ls.cert.verified_window;
          continue;
        }
        for (int p = 1; p <= std::min(search_.p_max, n); ++p) {
          if (const auto diff = lane_shift(n, p, l)) {
            ls.matched = true;
            ls.cert = {seeds[static_cast<std::size_t>(l)], n, p, *diff - p * idx_.bias, 0};
            break;
          }
        }
      }
    }
    for (int l = 0; l < lanes; ++l) {
      const LaneState& ls = lane[static_cast<std::size_t>(l)];
      if (ls.matched && ls.cert.verified_window >= search_.window)
        out[static_cast<std::size_t>(l)].certificate = ls.cert;
    }
  }

 private:
  std::uint16_t* slot(int n) {
    return reinterpret_cast<std::uint16_t*>(ring_.data() + (static_cast<std::size_t>(n) % slots_) * states_);
  }

  static StateIndex lane_seed(std::span<const StateIndex> seeds, int l) {
    // Spare lanes repeat the first seed; their output is discarded.
    return static_cast<std::size_t>(l) < seeds.size() ? seeds[static_cast<std::size_t>(l)]
                                                      : seeds[0];
  }

  // Constant c with column n = column n-p + c on lane l (same infinite entries),
  // or nullopt.
  std::optional<std::int64_t> lane_shift(int n, int p, int l) {
    const std::uint16_t* a = slot(n);
    const std::uint16_t* b = slot(n - p);
    std::optional<std::int64_t> diff;
    for (std::size_t t = 0; t < states_; ++t) {
      const std::uint16_t x = a[t * kLanes + l];
      const std::uint16_t y = b[t * kLanes + l];
      if (x >= kInf16 || y >= kInf16) {
        if ((x >= kInf16) != (y >= kInf16)) return std::nullopt;
        continue;
      }
      const std::int64_t d = static_cast<std::int64_t>(x) - y;
      if (!diff) diff = d;
      else if (*diff != d) return std::nullopt;
    }
    return diff;
  }

  const TransitionTable& table_;
  const PullIndex& idx_;
  int n_max_;
  PeriodSearch search_;
  std::size_t states_;
  std::size_t slots_;
  std::vector<LaneVector> ring_;
};

void check_search(const PeriodSearch& s, int n_max) {
  if (n_max < 1) fail(ErrorKind::InvalidArgument, "n_max must be at least 1");
  if (s.p_max < 1) fail(ErrorKind::InvalidArgument, "p_max must be at least 1");
  if (s.window < 0) fail(ErrorKind::InvalidArgument, "window must be nonnegative");
}

}  // namespace

void check_capacity(const TransitionTable& table, int n_max) {
  const int bias = cost_bias(table);
  if (table.max_cost() + bias > 0xFF)
    fail(ErrorKind::Capacity, "edge costs do not fit the packed edge format");
  if (table.state_count() >= (std::size_t{1} << 24))
    fail(ErrorKind::Capacity, "too many states for the packed edge format");
  const std::int64_t worst = static_cast<std::int64_t>(n_max) * (table.max_cost() + bias);
  if (worst >= kInf16)
    fail(ErrorKind::Capacity, "n_max " + std::to_string(n_max) +
                                  " overflows the 16-bit waste lanes at height " +
                                  std::to_string(table.height()));
}

std::vector<SeedRun> run_seeds(const TransitionTable& table, std::span<const StateIndex> seeds,
                               const DpParams& params) {
  check_search(params.search, params.n_max);
  check_capacity(table, params.n_max);
  for (StateIndex s : seeds)
    if (s >= table.state_count()) fail(ErrorKind::InvalidArgument, "seed index out of range");

  const PullIndex idx = make_pull_index(table);
  std::vector<SeedRun> out(seeds.size());
  const std::size_t batches = (seeds.size() + kLanes - 1) / kLanes;
  const int workers =
      static_cast<int>(std::max<std::size_t>(1, std::min<std::size_t>(
                                                    static_cast<std::size_t>(std::max(1, params.threads)),
                                                    batches)));

  std::atomic<std::size_t> next_batch{0};
  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    try {
      BatchRunner runner(table, idx, params.n_max, params.search);
      for (;;) {
        const std::size_t b = next_batch.fetch_add(1);
        if (b >= batches) break;
        const std::size_t lo = b * kLanes;
        const std::size_t hi = std::min(seeds.size(), lo + kLanes);
        runner.run(seeds.subspan(lo, hi - lo), std::span<SeedRun>(out).subspan(lo, hi - lo));
        const std::size_t finished = done.fetch_add(hi - lo) + (hi - lo);
        if (params.progress) {
          std::lock_guard lock(progress_mutex);
          params.progress(finished, seeds.size());
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next_batch.store(batches);
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

SeedRun run_seed(StateIndex seed, const TransitionTable& table, int n_max, PeriodSearch search) {
  DpParams params;
  params.n_max = n_max;
  params.search = search;
  const StateIndex one[] = {seed};
  return std::move(run_seeds(table, one, params).front());
}

std::vector<SeedRun> run_all_seeds(const TransitionTable& table, const DpParams& params) {
  const std::size_t states = table.state_count();
  const StateTable& st = table.states();
  const bool mirror = params.use_reflection && table.variant() == Variant::Interior;

  std::vector<StateIndex> seeds;
  for (StateIndex s = 0; s < states; ++s)
    if (!mirror || st.reflected(s) >= s) seeds.push_back(s);
  std::vector<SeedRun> runs = run_seeds(table, seeds, params);
  if (!mirror) return runs;

  std::vector<SeedRun> all(states);
  for (auto& r : runs) {
    const StateIndex twin = st.reflected(r.seed);
    if (twin != r.seed) {
      SeedRun copy = r;
      copy.seed = twin;
      if (copy.certificate) copy.certificate->seed = twin;
      all[twin] = std::move(copy);
    }
    all[r.seed] = std::move(r);
  }
  return all;
}

namespace {

struct Rate {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

Rate make_rate(std::int64_t num, std::int64_t den) {
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return {num / g, den / g};
}

bool rate_less(const Rate& a, const Rate& b) { return a.num * b.den < b.num * a.den; }
bool rate_equal(const Rate& a, const Rate& b) { return a.num * b.den == b.num * a.den; }

constexpr std::int64_t kMaxGlobalPeriod = 1 << 12;
constexpr std::int64_t kMaxGlobalHorizon = 1 << 15;

// Derives periodicity of d(n) = min_s w_n(s, s) from the per-seed certificates.
// Past T = max_s first_s each seed value is d_s(n) = r_s n + (p_s-periodic part),
// so seeds with a rate above the minimum stop mattering once their linear lower
// bound clears the best minimum-rate seed; after that point d(n) - r_min n is
// periodic with the lcm of the minimum-rate periods.
std::optional<GlobalCertificate> certify_global(const std::vector<SeedRun>& runs,
                                                std::vector<Waste>& series) {
  for (const auto& r : runs)
    if (!r.certificate) return std::nullopt;

  std::int64_t transient = 0;
  for (const auto& r : runs) transient = std::max<std::int64_t>(transient, r.certificate->first);

  auto has_finite = [&](const SeedRun& r) {
    for (std::int64_t n = transient; n < transient + r.certificate->period; ++n)
      if (finite(r.value_at(n))) return true;
    return false;
  };

  std::vector<const SeedRun*> active;
  for (const auto& r : runs)
    if (has_finite(r)) active.push_back(&r);
  if (active.empty()) return std::nullopt;

  auto rate_of = [](const SeedRun& r) {
    return make_rate(r.certificate->increment, r.certificate->period);
  };
  Rate best = rate_of(*active.front());
  for (const auto* r : active)
    if (rate_less(rate_of(*r), best)) best = rate_of(*r);

  std::vector<const SeedRun*> slowest, others;
  std::int64_t lcm = 1;
  for (const auto* r : active) {
    if (rate_equal(rate_of(*r), best)) {
      slowest.push_back(r);
      lcm = std::lcm(lcm, static_cast<std::int64_t>(r->certificate->period));
      if (lcm > kMaxGlobalPeriod) return std::nullopt;
    } else {
      others.push_back(r);
    }
  }

  // Upper envelope of the minimum-rate seeds: d(n) <= r_min n + upper.
  long double upper = -INFINITY;
  for (std::int64_t n = transient; n < transient + lcm; ++n) {
    Waste m = kInfiniteWaste;
    for (const auto* r : slowest) m = std::min(m, r->value_at(n));
    if (!finite(m)) return std::nullopt;
    upper = std::max(upper, static_cast<long double>(m) -
                                static_cast<long double>(best.num) * n / best.den);
  }

  std::int64_t settled = transient;
  for (const auto* r : others) {
    const Rate rr = rate_of(*r);
    long double lower = INFINITY;
    for (std::int64_t n = transient; n < transient + r->certificate->period; ++n) {
      const Waste v = r->value_at(n);
      if (finite(v))
        lower = std::min(lower, static_cast<long double>(v) -
                                    static_cast<long double>(rr.num) * n / rr.den);
    }
    const long double gap = static_cast<long double>(rr.num) / rr.den -
                            static_cast<long double>(best.num) / best.den;
    const long double cross = (upper - lower) / gap;
    if (cross > static_cast<long double>(kMaxGlobalHorizon)) return std::nullopt;
    settled = std::max<std::int64_t>(settled, static_cast<std::int64_t>(std::floor(cross)) + 2);
  }

  const std::int64_t horizon = settled + 2 * lcm;
  if (horizon > kMaxGlobalHorizon) return std::nullopt;
  series.assign(static_cast<std::size_t>(horizon) + 1, kInfiniteWaste);
  for (const auto& r : runs)
    for (std::int64_t n = 0; n <= horizon; ++n)
      series[static_cast<std::size_t>(n)] =
          std::min(series[static_cast<std::size_t>(n)], r.value_at(n));

  auto holds = [&](std::int64_t n, std::int64_t p, Waste q) {
    return series[static_cast<std::size_t>(n)] ==
           add_waste(series[static_cast<std::size_t>(n - p)], q);
  };

  for (std::int64_t p = 1; p <= lcm; ++p) {
    if (lcm % p != 0 || (p * best.num) % best.den != 0) continue;
    const Waste q = p * best.num / best.den;
    bool periodic = true;
    for (std::int64_t n = settled + p; n < settled + p + lcm && periodic; ++n)
      periodic = holds(n, p, q);
    if (!periodic) continue;
    std::int64_t first = settled + p;
    while (first > p && holds(first - 1, p, q)) --first;
    return GlobalCertificate{static_cast<int>(first), static_cast<int>(p), q};
  }
  return std::nullopt;
}

}  // namespace

std::span<const SeedRun> WasteTable::seed_runs() const noexcept {
  if (!runs_) return {};
  return *runs_;
}

WasteTable aggregate(std::vector<SeedRun> runs) {
  if (runs.empty()) fail(ErrorKind::InvalidArgument, "no seed runs to aggregate");
  std::sort(runs.begin(), runs.end(),
            [](const SeedRun& a, const SeedRun& b) { return a.seed < b.seed; });
  const SeedRun& head = runs.front();
  for (const auto& r : runs) {
    if (r.height != head.height || r.variant != head.variant)
      fail(ErrorKind::InvalidArgument, "seed runs mix heights or variants");
    if (r.n_max() != head.n_max() || r.state_count != head.state_count)
      fail(ErrorKind::InvalidArgument, "seed runs mix n_max or state tables");
  }
  if (runs.size() != head.state_count)
    fail(ErrorKind::InvalidArgument, "aggregate needs exactly one run per valid seed");
  for (std::size_t k = 0; k < runs.size(); ++k)
    if (runs[k].seed != k) fail(ErrorKind::InvalidArgument, "seed runs are missing a seed");

  WasteTable t;
  t.variant_ = head.variant;
  t.height_ = head.height;
  t.d_.assign(static_cast<std::size_t>(head.n_max()) + 1, kInfiniteWaste);
  for (const auto& r : runs) {
    for (std::size_t n = 0; n < t.d_.size(); ++n) t.d_[n] = std::min(t.d_[n], r.diagonal[n]);
    if (r.certificate) ++t.seeds_certified_;
  }
  t.seeds_total_ = runs.size();
  for (Waste v : t.d_)
    if (finite(v) && v < 0) throw std::logic_error("negative diagonal waste");

  std::vector<Waste> series;
  t.global_ = certify_global(runs, series);
  if (t.global_) {
    const std::int64_t p = t.global_->period;
    const Waste q = t.global_->increment;
    // Keep d(n) up to first + period - 1 so the certificate can be applied
    // from recorded values alone.
    for (std::int64_t n = t.n_max() + 1; n < t.global_->first + p; ++n)
      t.tail_.push_back(series[static_cast<std::size_t>(n)]);
    if (q % p == 0) {
      std::vector<Waste> res(static_cast<std::size_t>(p));
      for (std::int64_t r = 0; r < p; ++r) {
        const std::int64_t n = t.global_->first + (((r - t.global_->first) % p) + p) % p;
        const Waste v = series[static_cast<std::size_t>(n)];
        res[static_cast<std::size_t>(r)] = finite(v) ? v - (q / p) * n : kInfiniteWaste;
      }
      t.residues_ = std::move(res);
    }
  }
  t.runs_ = std::make_shared<const std::vector<SeedRun>>(std::move(runs));
  return t;
}

WasteTable WasteTable::from_series(Variant variant, int height, std::vector<Waste> d,
                                   std::optional<GlobalCertificate> global,
                                   std::size_t seeds_total, std::size_t seeds_certified) {
  if (d.empty()) fail(ErrorKind::InvalidArgument, "empty waste series");
  if (height < 1) fail(ErrorKind::InvalidArgument, "height must be positive");
  WasteTable t;
  t.variant_ = variant;
  t.height_ = height;
  t.d_ = std::move(d);
  t.seeds_total_ = seeds_total;
  t.seeds_certified_ = seeds_certified;
  if (global) {
    if (global->period < 1 || global->first < global->period ||
        global->first + global->period - 1 > t.n_max())
      fail(ErrorKind::InvalidArgument, "global certificate not covered by the recorded series");
    t.global_ = global;
    const std::int64_t p = global->period;
    const Waste q = global->increment;
    if (q % p == 0) {
      std::vector<Waste> res(static_cast<std::size_t>(p));
      for (std::int64_t r = 0; r < p; ++r) {
        const std::int64_t n = global->first + (((r - global->first) % p) + p) % p;
        const Waste v = t.d_[static_cast<std::size_t>(n)];
        res[static_cast<std::size_t>(r)] = finite(v) ? v - (q / p) * n : kInfiniteWaste;
      }
      t.residues_ = std::move(res);
    }
  }
  return t;
}

Waste WasteTable::query(std::int64_t n) const {
  if (n < 0) fail(ErrorKind::InvalidArgument, "column count must be nonnegative");
  if (n <= n_max()) return d_[static_cast<std::size_t>(n)];
  if (runs_ && fully_certified()) {
    Waste best = kInfiniteWaste;
    for (const auto& r : *runs_) best = std::min(best, r.value_at(n));
    return best;
  }
  if (!global_)
    fail(ErrorKind::IncompleteTable,
         std::string(variant_name(variant_)) + " table for height " + std::to_string(height_) +
             " is not certified beyond n = " + std::to_string(n_max()));
  const std::int64_t last = n_max() + static_cast<std::int64_t>(tail_.size());
  auto recorded_at = [&](std::int64_t k) {
    return k <= n_max() ? d_[static_cast<std::size_t>(k)]
                        : tail_[static_cast<std::size_t>(k - n_max() - 1)];
  };
  if (n <= last) return recorded_at(n);
  const std::int64_t p = global_->period;
  const std::int64_t k = (n - last + p - 1) / p;
  return add_waste(recorded_at(n - k * p), k * global_->increment);
}

Witness reconstruct_witness(StateIndex seed, int n, const TransitionTable& table,
                            std::size_t max_cells) {
  const std::size_t states = table.state_count();
  if (seed >= states) fail(ErrorKind::InvalidArgument, "seed index out of range");
  if (n < 1) fail(ErrorKind::InvalidArgument, "witness needs at least one column");
  if (static_cast<std::size_t>(n) * states > max_cells)
    fail(ErrorKind::Capacity, "parent tracking for " + std::to_string(n) + " columns exceeds cap");

  std::vector<StateIndex> parent(static_cast<std::size_t>(n) * states, 0);
  // Second key: vertices used so far.
  WasteVector cur = initial_vector(states, seed);
  WasteVector next(states);
  std::vector<int> size(states, 0), next_size(states);
  for (int i = 1; i <= n; ++i) {
    std::fill(next.begin(), next.end(), kInfiniteWaste);
    StateIndex* par = parent.data() + static_cast<std::size_t>(i - 1) * states;
    for (StateIndex u = 0; u < states; ++u) {
      if (!finite(cur[u])) continue;
      const auto to = table.targets_of(u);
      const auto cost = table.costs_of(u);
      for (std::size_t k = 0; k < to.size(); ++k) {
        const Waste cand = cur[u] + cost[k];
        const int cand_size = size[u] + zeros_count(table.states()[to[k]]);
        if (cand < next[to[k]] || (cand == next[to[k]] && cand_size < next_size[to[k]])) {
          next[to[k]] = cand;
          next_size[to[k]] = cand_size;
          par[to[k]] = u;
        }
      }
    }
    std::swap(cur, next);
    std::swap(size, next_size);
  }
  if (!finite(cur[seed]))
    fail(ErrorKind::NoWitness, "no closed walk of length " + std::to_string(n) + " from seed " +
                                   table.states()[seed].to_string());

  Witness w;
  w.seed = seed;
  w.columns = n;
  w.height = table.height();
  w.waste = cur[seed];
  StateIndex t = seed;
  for (int i = n; i >= 1; --i) {
    const StateWord& word = table.states()[t];
    for (int row = 0; row < word.height(); ++row)
      if (word.entry(row) == 0) w.vertices.emplace_back(i - 1, row);
    t = parent[static_cast<std::size_t>(i - 1) * states + t];
  }
  if (t != seed) throw std::logic_error("witness walk does not close on its seed");
  std::sort(w.vertices.begin(), w.vertices.end());
  return w;
}

WasteTable compute_waste_table(const TransitionTable& table, const DpParams& params) {
  return aggregate(run_all_seeds(table, params));
}

}  // namespace cyldom
