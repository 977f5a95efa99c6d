#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyldom/state_space.hpp"
#include "cyldom/transitions.hpp"

namespace cyldom {

using Waste = std::int64_t;
inline constexpr Waste kInfiniteWaste = std::numeric_limits<Waste>::max();

inline bool finite(Waste w) noexcept { return w != kInfiniteWaste; }
// Infinity absorbs any finite addend.
inline Waste add_waste(Waste w, Waste c) noexcept { return finite(w) ? w + c : w; }

// One row w_i(s, .) of the recurrence, indexed by dense state index.
using WasteVector = std::vector<Waste>;

WasteVector initial_vector(std::size_t state_count, StateIndex seed);

// Reference column step: out[t] = min over edges u->t of in[u] + cost(u, t).
void relax_column(const TransitionTable& table, std::span<const Waste> in, std::span<Waste> out);

struct PeriodSearch {
  int p_max = 16;
  int window = 10;
};

// w_n(s, .) = w_{n-period}(s, .) + increment elementwise for every n >= first.
// One match already implies all later ones (the column step commutes with adding
// a constant); verified_window counts the extra columns actually checked.
struct SeedCertificate {
  StateIndex seed = 0;
  int first = 0;
  int period = 0;
  Waste increment = 0;
  int verified_window = 0;

  friend bool operator==(const SeedCertificate&, const SeedCertificate&) = default;
};

struct SeedRun {
  StateIndex seed = 0;
  int height = 0;
  Variant variant = Variant::Boundary;
  std::size_t state_count = 0;
  std::vector<Waste> diagonal;  // w_n(s, s) for n = 0..n_max
  std::optional<SeedCertificate> certificate;

  int n_max() const noexcept { return static_cast<int>(diagonal.size()) - 1; }
  // w_n(s, s) for any n >= 0; past n_max this needs the certificate.
  Waste value_at(std::int64_t n) const;

  friend bool operator==(const SeedRun&, const SeedRun&) = default;
};

struct DpParams {
  int n_max = 80;
  PeriodSearch search;
  int threads = 1;
  bool use_reflection = true;  // honoured for the interior variant only
  std::function<void(std::size_t done, std::size_t total)> progress;
};

DpParams default_params(Variant v);

// Capacity error when values for n_max columns would not fit the 16-bit lanes.
void check_capacity(const TransitionTable& table, int n_max);

SeedRun run_seed(StateIndex seed, const TransitionTable& table, int n_max,
                 PeriodSearch search = {});

// Seeds are independent; results come back in the order of `seeds` whatever the
// worker count.
std::vector<SeedRun> run_seeds(const TransitionTable& table, std::span<const StateIndex> seeds,
                               const DpParams& params);

// Every valid seed, using the row-reversal symmetry for interior strips.
std::vector<SeedRun> run_all_seeds(const TransitionTable& table, const DpParams& params);

// Periodicity of d(n) = min_s w_n(s, s) itself: d(n) = d(n - period) + increment
// for all n >= first.
struct GlobalCertificate {
  int first = 0;
  int period = 0;
  Waste increment = 0;

  friend bool operator==(const GlobalCertificate&, const GlobalCertificate&) = default;
};

class WasteTable {
 public:
  WasteTable() = default;

  // Table without per-seed data, as read back from a cache file or built by hand.
  static WasteTable from_series(Variant variant, int height, std::vector<Waste> d,
                                std::optional<GlobalCertificate> global,
                                std::size_t seeds_total, std::size_t seeds_certified);

  Variant variant() const noexcept { return variant_; }
  int height() const noexcept { return height_; }
  int n_max() const noexcept { return static_cast<int>(d_.size()) - 1; }
  std::span<const Waste> recorded() const noexcept { return d_; }
  std::size_t seeds_total() const noexcept { return seeds_total_; }
  std::size_t seeds_certified() const noexcept { return seeds_certified_; }
  bool fully_certified() const noexcept { return seeds_total_ > 0 && seeds_certified_ == seeds_total_; }
  const std::optional<GlobalCertificate>& global() const noexcept { return global_; }
  // d(n) - (increment / period) n by n mod period, when that rate is integral.
  const std::optional<std::vector<Waste>>& residue_constants() const noexcept { return residues_; }
  bool has_seed_runs() const noexcept { return runs_ != nullptr; }
  std::span<const SeedRun> seed_runs() const noexcept;

  // Exact d(n). Past n_max: per-seed extrapolation when seed data is present,
  // otherwise the global certificate; IncompleteTable when neither applies.
  Waste query(std::int64_t n) const;

  std::string to_json() const;
  static WasteTable from_json(const std::string& text);
  void save(const std::string& path) const;
  static WasteTable load(const std::string& path);

 private:
  friend WasteTable aggregate(std::vector<SeedRun> runs);

  Variant variant_ = Variant::Boundary;
  int height_ = 0;
  std::vector<Waste> d_;
  std::size_t seeds_total_ = 0;
  std::size_t seeds_certified_ = 0;
  std::optional<GlobalCertificate> global_;
  std::optional<std::vector<Waste>> residues_;
  std::vector<Waste> tail_;  // d(n) past n_max, up to first + period - 1
  std::shared_ptr<const std::vector<SeedRun>> runs_;
};

// InvalidArgument on mixed heights / variants / n_max or a missing seed.
WasteTable aggregate(std::vector<SeedRun> runs);

WasteTable compute_waste_table(const TransitionTable& table, const DpParams& params);

inline constexpr std::size_t kDefaultWitnessCells = std::size_t{1} << 24;

struct Witness {
  StateIndex seed = 0;
  int columns = 0;
  int height = 0;
  Waste waste = 0;
  std::vector<std::pair<int, int>> vertices;  // (column, row), both 0-based
};

// Among minimum-waste walks the one with fewest vertices is kept; remaining
// ties go to the lowest-index predecessor. NoWitness when w_n(s, s) is infinite,
// Capacity when n * state_count exceeds max_cells.
Witness reconstruct_witness(StateIndex seed, int n, const TransitionTable& table,
                            std::size_t max_cells = kDefaultWitnessCells);

}  // namespace cyldom
