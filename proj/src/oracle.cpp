#include "cyldom/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "cyldom/error.hpp"

namespace cyldom::oracle {

VertexSet::VertexSet(int columns, int rows) : columns_(columns), rows_(rows) {
  if (columns < 1 || rows < 1) fail(ErrorKind::InvalidArgument, "vertex set needs a nonempty grid");
  member_.assign(static_cast<std::size_t>(columns) * static_cast<std::size_t>(rows), 0);
}

std::size_t VertexSet::cell(int column, int row) const {
  if (column < 0 || column >= columns_ || row < 0 || row >= rows_)
    fail(ErrorKind::InvalidArgument, "vertex outside the strip");
  return static_cast<std::size_t>(column) * static_cast<std::size_t>(rows_) +
         static_cast<std::size_t>(row);
}

bool VertexSet::contains(int column, int row) const { return member_[cell(column, row)] != 0; }

void VertexSet::insert(int column, int row) {
  char& slot = member_[cell(column, row)];
  if (!slot) {
    slot = 1;
    ++count_;
  }
}

std::vector<std::pair<int, int>> VertexSet::members() const {
  std::vector<std::pair<int, int>> out;
  for (int c = 0; c < columns_; ++c)
    for (int r = 0; r < rows_; ++r)
      if (contains(c, r)) out.emplace_back(c, r);
  return out;
}

namespace {

using Cell = std::pair<int, int>;

// Closed neighbourhood of (c, r) in the cylinder with rows [lo, hi).
std::vector<Cell> closed_neighbourhood(int c, int r, int n, int lo, int hi) {
  std::vector<Cell> out{{c, r}, {(c + 1) % n, r}, {(c + n - 1) % n, r}};
  if (r - 1 >= lo) out.emplace_back(c, r - 1);
  if (r + 1 < hi) out.emplace_back(c, r + 1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Rows of the phantom-extended strip: [-1, h) for boundary, [-1, h] for interior.
std::pair<int, int> extended_rows(Variant v, int h) {
  return {-1, v == Variant::Interior ? h + 1 : h};
}

bool exempt(Variant v, int row, int h) {
  return row == 0 || (v == Variant::Interior && row == h - 1);
}

}  // namespace

std::int64_t waste_of(const VertexSet& s, Variant v) {
  const auto [lo, hi] = extended_rows(v, s.rows());
  std::set<Cell> dominated;
  for (const auto& [c, r] : s.members())
    for (const auto& x : closed_neighbourhood(c, r, s.columns(), lo, hi)) dominated.insert(x);
  return 5 * static_cast<std::int64_t>(s.size()) - static_cast<std::int64_t>(dominated.size());
}

bool almost_dominates(const VertexSet& s, Variant v) {
  std::set<Cell> dominated;
  for (const auto& [c, r] : s.members())
    for (const auto& x : closed_neighbourhood(c, r, s.columns(), 0, s.rows())) dominated.insert(x);
  for (int c = 0; c < s.columns(); ++c)
    for (int r = 0; r < s.rows(); ++r)
      if (!exempt(v, r, s.rows()) && !dominated.count({c, r})) return false;
  return true;
}

bool dominates(const VertexSet& s) {
  std::set<Cell> dominated;
  for (const auto& [c, r] : s.members())
    for (const auto& x : closed_neighbourhood(c, r, s.columns(), 0, s.rows())) dominated.insert(x);
  return dominated.size() ==
         static_cast<std::size_t>(s.columns()) * static_cast<std::size_t>(s.rows());
}

std::int64_t brute_min_waste(int h, int n, Variant v, int max_cells) {
  if (h < 1 || n < 1) fail(ErrorKind::InvalidArgument, "strip dimensions must be positive");
  if (h * n > max_cells || h * n > 30)
    fail(ErrorKind::Capacity, "brute force over " + std::to_string(h * n) + " vertices exceeds cap");
  const auto [lo, hi] = extended_rows(v, h);
  const int ext_rows = hi - lo;
  const int cells = h * n;
  if (ext_rows * n > 64) fail(ErrorKind::Capacity, "extended strip does not fit a 64-bit mask");

  // Bit c*h + r for strip cells; bit c*ext_rows + (r - lo) for extended cells.
  std::vector<std::uint32_t> strip_nbhd(static_cast<std::size_t>(cells));
  std::vector<std::uint64_t> ext_nbhd(static_cast<std::size_t>(cells));
  std::uint32_t required = 0;
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < h; ++r) {
      const int bit = c * h + r;
      for (const auto& [x, y] : closed_neighbourhood(c, r, n, 0, h))
        strip_nbhd[static_cast<std::size_t>(bit)] |= 1u << (x * h + y);
      for (const auto& [x, y] : closed_neighbourhood(c, r, n, lo, hi))
        ext_nbhd[static_cast<std::size_t>(bit)] |= std::uint64_t{1} << (x * ext_rows + (y - lo));
      if (!exempt(v, r, h)) required |= 1u << bit;
    }
  }

  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  const std::uint64_t subsets = std::uint64_t{1} << cells;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::uint32_t dom = 0;
    std::uint64_t ext = 0;
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(rest));
      dom |= strip_nbhd[bit];
      ext |= ext_nbhd[bit];
    }
    if ((dom & required) != required) continue;
    best = std::min<std::int64_t>(best, 5 * std::popcount(mask) - std::popcount(ext));
  }
  return best;
}

namespace {

void check_exact_args(int n, int m, const ExactLimits& limits) {
  if (n < 3 || m < 1) fail(ErrorKind::InvalidArgument, "cylinder needs n >= 3 and m >= 1");
  if (n > 30) fail(ErrorKind::Capacity, "exact solver packs a cycle row into 32 bits");
  if (n > limits.max_n || m > limits.max_m)
    fail(ErrorKind::Capacity, "exact solver capped at n <= " + std::to_string(limits.max_n) +
                                  ", m <= " + std::to_string(limits.max_m));
}

ExactResult exhaustive(int n, int m, bool want_witness, const ExactLimits& limits) {
  const int cells = n * m;
  if (cells > limits.exhaustive_cells || cells > 26)
    fail(ErrorKind::Capacity, "exhaustive search over " + std::to_string(cells) + " vertices exceeds cap");
  std::vector<std::uint32_t> nbhd(static_cast<std::size_t>(cells));
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < m; ++r)
      for (const auto& [x, y] : closed_neighbourhood(c, r, n, 0, m))
        nbhd[static_cast<std::size_t>(c * m + r)] |= 1u << (x * m + y);
  const std::uint32_t all = cells == 32 ? ~0u : (1u << cells) - 1u;

  // dom[mask] built from dom[mask without its lowest bit].
  const std::size_t subsets = std::size_t{1} << cells;
  std::vector<std::uint32_t> dom(subsets, 0);
  int best = cells + 1;
  std::uint32_t best_mask = 0;
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    dom[mask] = dom[mask & (mask - 1)] | nbhd[low];
    if (dom[mask] == all && std::popcount(mask) < best) {
      best = std::popcount(mask);
      best_mask = static_cast<std::uint32_t>(mask);
    }
  }
  ExactResult res{n, m, best, std::nullopt};
  if (want_witness) {
    VertexSet w(n, m);
    for (int bit = 0; bit < cells; ++bit)
      if ((best_mask >> bit) & 1u) w.insert(bit / m, bit % m);
    res.witness = std::move(w);
  }
  return res;
}

std::uint32_t rotate_left(std::uint32_t x, int n) {
  const std::uint32_t all = (1u << n) - 1u;
  return ((x << 1) | (x >> (n - 1))) & all;
}

std::uint32_t rotate_right(std::uint32_t x, int n) {
  const std::uint32_t all = (1u << n) - 1u;
  return ((x >> 1) | (x << (n - 1))) & all;
}

// Sweeps the path dimension one cycle (row of the cylinder) at a time. A row
// state records, per cycle vertex, 0 = chosen, 1 = dominated by this row or the
// one below, 2 = still waiting for the next row.
ExactResult profile(int n, int m, bool want_witness) {
  const std::uint32_t all = (1u << n) - 1u;
  const auto key_of = [](std::uint32_t zeros, std::uint32_t twos) {
    return (std::uint64_t{zeros} << 32) | twos;
  };

  // Only reachable states get an index: densely addressed by base-3 code while
  // 3^n stays small, hashed beyond that.
  constexpr int kDenseMaxN = 14;
  std::vector<std::uint32_t> pow3sum;
  std::vector<std::int32_t> dense;
  std::unordered_map<std::uint64_t, std::int32_t> sparse;
  if (n <= kDenseMaxN) {
    pow3sum.assign(std::size_t{1} << n, 0);
    std::uint32_t p = 1;
    std::vector<std::uint32_t> pow3(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j, p *= 3) pow3[static_cast<std::size_t>(j)] = p;
    for (std::uint32_t mask = 1; mask <= all; ++mask)
      pow3sum[mask] = pow3sum[mask & (mask - 1)] + pow3[static_cast<std::size_t>(std::countr_zero(mask))];
    dense.assign(static_cast<std::size_t>(p), -1);
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> states;  // (zeros, twos)
  auto index_of = [&](std::uint32_t zeros, std::uint32_t twos) -> std::size_t {
    std::int32_t* slot;
    if (n <= kDenseMaxN) {
      slot = &dense[pow3sum[all & ~zeros & ~twos] + 2 * pow3sum[twos]];
    } else {
      slot = &sparse.try_emplace(key_of(zeros, twos), -1).first->second;
    }
    if (*slot < 0) {
      *slot = static_cast<std::int32_t>(states.size());
      states.emplace_back(zeros, twos);
    }
    return static_cast<std::size_t>(*slot);
  };

  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> cur, next;
  std::vector<std::vector<std::int32_t>> parent;  // per row, by target index
  // The row below the first one: nothing chosen, nothing pending.
  cur.assign(index_of(0, 0) + 1, kInf);
  cur[0] = 0;

  for (int row = 0; row < m; ++row) {
    next.assign(states.size(), kInf);
    std::vector<std::int32_t> from;
    if (want_witness) from.assign(states.size(), -1);
    for (std::size_t k = 0; k < cur.size(); ++k) {
      if (cur[k] == kInf) continue;
      const auto [u_zeros, u_twos] = states[k];
      const std::uint32_t free = all & ~u_twos;
      std::uint32_t sub = 0;
      do {
        const std::uint32_t chosen = u_twos | sub;
        const std::uint32_t covered =
            (u_zeros | rotate_left(chosen, n) | rotate_right(chosen, n)) & ~chosen;
        const std::uint32_t pending = all & ~chosen & ~covered;
        const std::size_t t = index_of(chosen, pending);
        if (t >= next.size()) {
          next.resize(t + 1, kInf);
          if (want_witness) from.resize(t + 1, -1);
        }
        const int cand = cur[k] + std::popcount(chosen);
        if (cand < next[t]) {
          next[t] = cand;
          if (want_witness) from[t] = static_cast<std::int32_t>(k);
        }
        sub = (sub - free) & free;
      } while (sub != 0);
    }
    std::swap(cur, next);
    if (want_witness) parent.push_back(std::move(from));
  }

  int best = kInf;
  std::size_t best_state = 0;
  for (std::size_t k = 0; k < cur.size(); ++k) {
    if (states[k].second == 0 && cur[k] < best) {
      best = cur[k];
      best_state = k;
    }
  }
  ExactResult res{n, m, best, std::nullopt};
  if (want_witness) {
    VertexSet w(n, m);
    std::size_t t = best_state;
    for (int row = m - 1; row >= 0; --row) {
      for (int c = 0; c < n; ++c)
        if ((states[t].first >> c) & 1u) w.insert(c, row);
      t = static_cast<std::size_t>(parent[static_cast<std::size_t>(row)][t]);
    }
    res.witness = std::move(w);
  }
  return res;
}

}  // namespace

ExactResult exact_domination_number(int n, int m, ExactMode mode, bool want_witness,
                                    const ExactLimits& limits) {
  check_exact_args(n, m, limits);
  if (mode == ExactMode::Auto)
    mode = n * m <= limits.exhaustive_cells ? ExactMode::Exhaustive : ExactMode::Profile;
  return mode == ExactMode::Exhaustive ? exhaustive(n, m, want_witness, limits)
                                       : profile(n, m, want_witness);
}

std::uint64_t count_cyclic_states(int n) {
  if (n < 3) fail(ErrorKind::InvalidArgument, "cyclic state count needs n >= 3");
  if (n > 40) fail(ErrorKind::Capacity, "cyclic state count overflows past n = 40");
  // Trace of the n-th power of the trit adjacency matrix without (0,2), (2,0).
  using Matrix = std::array<std::array<std::uint64_t, 3>, 3>;
  const Matrix step{{{1, 1, 0}, {1, 1, 1}, {0, 1, 1}}};
  Matrix acc{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (int k = 0; k < n; ++k) {
    Matrix out{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) out[i][j] += acc[i][l] * step[l][j];
    acc = out;
  }
  return acc[0][0] + acc[1][1] + acc[2][2];
}

}  // namespace cyldom::oracle
