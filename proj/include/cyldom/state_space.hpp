#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cyldom {

inline constexpr int kDefaultMaxHeight = 16;
// Row masks are 32-bit and base-3 codes 64-bit; 20 rows keeps both comfortable.
inline constexpr int kHardMaxHeight = 20;

using StateIndex = std::uint32_t;

// Ternary description of one column of a strip. Row 0 is the bottom row.
//   0  the vertex is in the dominating set
//   1  dominated from this column or the previous one
//   2  not yet dominated
// Stored as two disjoint row masks; rows in neither mask hold a 1.
class StateWord {
 public:
  StateWord() = default;

  static StateWord from_entries(std::span<const int> entries);
  static StateWord from_masks(int height, std::uint32_t zeros, std::uint32_t twos);

  int height() const noexcept { return height_; }
  int entry(int row) const noexcept {
    if ((zeros_ >> row) & 1u) return 0;
    if ((twos_ >> row) & 1u) return 2;
    return 1;
  }
  std::uint32_t row_mask() const noexcept {
    return height_ >= 32 ? ~0u : ((1u << height_) - 1u);
  }
  std::uint32_t zeros() const noexcept { return zeros_; }
  std::uint32_t twos() const noexcept { return twos_; }
  std::uint32_t ones() const noexcept { return row_mask() & ~zeros_ & ~twos_; }

  // Base-3 value with row 0 as the least significant digit.
  std::uint64_t code() const noexcept;

  // No undominated row may sit next to an occupied row of the same column.
  bool valid() const noexcept;

  std::vector<int> entries() const;
  std::string to_string() const;

  friend bool operator==(const StateWord&, const StateWord&) = default;

 private:
  int height_ = 0;
  std::uint32_t zeros_ = 0;
  std::uint32_t twos_ = 0;
};

int zeros_count(const StateWord& s) noexcept;

// Row-reversed state.
StateWord reflect(const StateWord& s) noexcept;

// Dense, immutable index of every valid state of one height, in ascending
// base-3 order.
class StateTable {
 public:
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return states_.size(); }
  const StateWord& operator[](StateIndex k) const { return states_[k]; }
  std::span<const StateWord> states() const noexcept { return states_; }

  std::optional<StateIndex> index_of(const StateWord& s) const;
  StateIndex reflected(StateIndex k) const { return reflect_map_[k]; }

 private:
  friend StateTable enumerate_valid_states(int, int);

  int height_ = 0;
  std::vector<StateWord> states_;
  std::vector<std::uint64_t> codes_;
  std::vector<StateIndex> reflect_map_;
};

// Throws InvalidArgument when h is outside [1, max_height].
StateTable enumerate_valid_states(int h, int max_height = kDefaultMaxHeight);

}  // namespace cyldom
