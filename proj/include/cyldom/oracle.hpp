#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cyldom/transitions.hpp"

// Ground truth computed straight from the graph definitions. Nothing here uses
// the column-state accounting of the DP engine.
namespace cyldom::oracle {

// Vertices of an n-column (cyclic), h-row strip. Phantom rows are implied by the
// variant when measuring waste and never hold members.
class VertexSet {
 public:
  VertexSet(int columns, int rows);

  int columns() const noexcept { return columns_; }
  int rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return count_; }

  bool contains(int column, int row) const;
  void insert(int column, int row);
  std::vector<std::pair<int, int>> members() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t cell(int column, int row) const;

  int columns_;
  int rows_;
  std::size_t count_ = 0;
  std::vector<char> member_;
};

// 5|S| - |N[S]|, with N[S] taken in the strip extended by its phantom rows.
std::int64_t waste_of(const VertexSet& s, Variant v);

// S dominates every strip vertex outside the exempt rows (neighbours taken in
// the strip itself).
bool almost_dominates(const VertexSet& s, Variant v);

// S dominates the whole cylinder C_n x P_m (columns = n, rows = m).
bool dominates(const VertexSet& s);

inline constexpr int kDefaultBruteCells = 20;

// Minimum waste over all almost-dominating subsets of the h-row, n-column strip.
// Capacity error when n * h exceeds max_cells.
std::int64_t brute_min_waste(int h, int n, Variant v, int max_cells = kDefaultBruteCells);

struct ExactResult {
  int n = 0;
  int m = 0;
  int gamma = 0;
  std::optional<VertexSet> witness;
};

enum class ExactMode { Auto, Exhaustive, Profile };

struct ExactLimits {
  int max_n = 14;
  int max_m = 24;
  int exhaustive_cells = 20;
};

// gamma(C_n x P_m). Auto picks exhaustive search up to exhaustive_cells
// vertices and the row-sweep profile DP otherwise.
ExactResult exact_domination_number(int n, int m, ExactMode mode = ExactMode::Auto,
                                    bool want_witness = false, const ExactLimits& limits = {});

// Cyclic ternary words of length n with no 0 next to a 2 (wrap included).
std::uint64_t count_cyclic_states(int n);

}  // namespace cyldom::oracle
