#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyldom/state_space.hpp"

namespace cyldom {

// Boundary strips sit at the top or bottom of the cylinder; only the row facing
// the rest of the cylinder (row 0) may stay undominated, and one phantom row is
// credited below it. Interior strips exempt both outer rows and get a phantom
// row on each side.
enum class Variant { Boundary, Interior };

std::string_view variant_name(Variant v) noexcept;
std::optional<Variant> parse_variant(std::string_view name) noexcept;

// Exempt rows as a mask. At height 1 both notions of exempt row coincide.
std::uint32_t exempt_rows(Variant v, int height) noexcept;
inline bool phantom_below(Variant) noexcept { return true; }
inline bool phantom_above(Variant v) noexcept { return v == Variant::Interior; }

struct Successor {
  std::uint32_t occupancy;
  StateWord next;
};

// Every legal next column after `u`, in ascending occupancy order.
std::vector<Successor> successors(const StateWord& u, Variant v);

// Vertices first counted as dominated when a column with state t follows one
// with state u, phantom credits included.
int newly_dominated(const StateWord& u, const StateWord& t, Variant v) noexcept;

inline int transition_cost(const StateWord& u, const StateWord& t, Variant v) noexcept {
  return 5 * zeros_count(t) - newly_dominated(u, t, v);
}

// Number of successors of u without generating them.
std::uint64_t successor_count(const StateWord& u, Variant v) noexcept;

struct Transition {
  StateIndex from;
  StateIndex to;
  int cost;
};

inline constexpr std::size_t kDefaultMaxTransitions = std::size_t{1} << 27;

// Forward adjacency (compressed rows by source state) with the per-edge cost
// 5|t| - nd(u, t) precomputed. Immutable once built.
class TransitionTable {
 public:
  int height() const noexcept { return states_->height(); }
  Variant variant() const noexcept { return variant_; }
  const StateTable& states() const noexcept { return *states_; }
  std::shared_ptr<const StateTable> shared_states() const noexcept { return states_; }

  std::size_t state_count() const noexcept { return states_->size(); }
  std::size_t transition_count() const noexcept { return targets_.size(); }

  std::span<const StateIndex> targets_of(StateIndex u) const noexcept {
    return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
  }
  std::span<const std::int8_t> costs_of(StateIndex u) const noexcept {
    return {costs_.data() + offsets_[u], costs_.data() + offsets_[u + 1]};
  }
  std::vector<Transition> edges_from(StateIndex u) const;

  // The predecessor set P(t), ascending.
  std::vector<StateIndex> predecessors(StateIndex t) const;

  int min_cost() const noexcept { return min_cost_; }
  int max_cost() const noexcept { return max_cost_; }

  // Binary dump. Layout, all little-endian:
  //   8 bytes  magic "CYLDTT01"
  //   u32      height
  //   u32      variant (0 boundary, 1 interior)
  //   u32      state count
  //   u64      transition count
  //   then one {u32 from, u32 to, i32 cost} record per transition in table order.
  void save(const std::string& path) const;
  static TransitionTable load(const std::string& path,
                              std::size_t max_transitions = kDefaultMaxTransitions);

  friend bool operator==(const TransitionTable& a, const TransitionTable& b) {
    return a.height() == b.height() && a.variant_ == b.variant_ && a.offsets_ == b.offsets_ &&
           a.targets_ == b.targets_ && a.costs_ == b.costs_;
  }

 private:
  friend TransitionTable build_transition_table(std::shared_ptr<const StateTable>, Variant,
                                                std::size_t);

  std::shared_ptr<const StateTable> states_;
  Variant variant_ = Variant::Boundary;
  std::vector<std::uint64_t> offsets_;
  std::vector<StateIndex> targets_;
  std::vector<std::int8_t> costs_;
  int min_cost_ = 0;
  int max_cost_ = 0;
};

// Capacity error when the table would exceed max_transitions edges.
TransitionTable build_transition_table(std::shared_ptr<const StateTable> states, Variant v,
                                       std::size_t max_transitions = kDefaultMaxTransitions);
TransitionTable build_transition_table(int height, Variant v,
                                       std::size_t max_transitions = kDefaultMaxTransitions);

}  // namespace cyldom
