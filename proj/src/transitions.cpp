#include "cyldom/transitions.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>

#include "cyldom/error.hpp"

namespace cyldom {

std::string_view variant_name(Variant v) noexcept {
  return v == Variant::Boundary ? "boundary" : "interior";
}

std::optional<Variant> parse_variant(std::string_view name) noexcept {
  if (name == "boundary") return Variant::Boundary;
  if (name == "interior") return Variant::Interior;
  return std::nullopt;
}

std::uint32_t exempt_rows(Variant v, int height) noexcept {
  std::uint32_t mask = 1u;
  if (v == Variant::Interior) mask |= 1u << (height - 1);
  return mask;
}

namespace {

std::uint32_t forced_rows(const StateWord& u, Variant v) noexcept {
  return u.twos() & ~exempt_rows(v, u.height());
}

StateWord next_state(const StateWord& u, std::uint32_t occupancy) noexcept {
  const std::uint32_t rows = u.row_mask();
  const std::uint32_t dominated =
      (u.zeros() | (occupancy << 1) | (occupancy >> 1)) & rows & ~occupancy;
  return StateWord::from_masks(u.height(), occupancy, rows & ~occupancy & ~dominated);
}

}  // namespace

std::vector<Successor> successors(const StateWord& u, Variant v) {
  if (u.height() < 1 || !u.valid())
    fail(ErrorKind::InvalidArgument, "successors of invalid state " + u.to_string());
  const std::uint32_t forced = forced_rows(u, v);
  const std::uint32_t free = u.row_mask() & ~forced;
  std::vector<Successor> out;
  out.reserve(std::size_t{1} << std::popcount(free));
  // Submasks of `free` in ascending order.
  std::uint32_t sub = 0;
  do {
    const std::uint32_t occupancy = forced | sub;
    out.push_back({occupancy, next_state(u, occupancy)});
    sub = (sub - free) & free;
  } while (sub != 0);
  return out;
}

std::uint64_t successor_count(const StateWord& u, Variant v) noexcept {
  const std::uint32_t free = u.row_mask() & ~forced_rows(u, v);
  return std::uint64_t{1} << std::popcount(free);
}

int newly_dominated(const StateWord& u, const StateWord& t, Variant v) noexcept {
  const int h = t.height();
  int nd = std::popcount(t.zeros() & u.twos());                           // previous column
  nd += std::popcount((t.zeros() | t.ones()) & (u.ones() | u.twos()));    // this column
  nd += std::popcount(t.zeros());                                         // next column
  nd += static_cast<int>(t.zeros() & 1u);                                 // phantom below
  if (phantom_above(v)) nd += static_cast<int>((t.zeros() >> (h - 1)) & 1u);
  return nd;
}

std::vector<Transition> TransitionTable::edges_from(StateIndex u) const {
  std::vector<Transition> out;
  const auto to = targets_of(u);
  const auto cost = costs_of(u);
  out.reserve(to.size());
  for (std::size_t k = 0; k < to.size(); ++k) out.push_back({u, to[k], cost[k]});
  return out;
}

std::vector<StateIndex> TransitionTable::predecessors(StateIndex t) const {
  std::vector<StateIndex> out;
  for (StateIndex u = 0; u < state_count(); ++u) {
    const auto to = targets_of(u);
    if (std::find(to.begin(), to.end(), t) != to.end()) out.push_back(u);
  }
  return out;
}

TransitionTable build_transition_table(std::shared_ptr<const StateTable> states, Variant v,
                                       std::size_t max_transitions) {
  if (!states) fail(ErrorKind::InvalidArgument, "null state table");
  std::uint64_t total = 0;
  for (const auto& u : states->states()) total += successor_count(u, v);
  if (total > max_transitions)
    fail(ErrorKind::Capacity, "transition table for height " + std::to_string(states->height()) +
                                  " needs " + std::to_string(total) + " edges, cap is " +
                                  std::to_string(max_transitions));

  TransitionTable table;
  table.states_ = states;
  table.variant_ = v;
  table.offsets_.reserve(states->size() + 1);
  table.targets_.reserve(total);
  table.costs_.reserve(total);
  table.offsets_.push_back(0);
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& u : states->states()) {
    for (const auto& succ : successors(u, v)) {
      const auto idx = states->index_of(succ.next);
      if (!idx) fail(ErrorKind::InvalidArgument, "successor left the valid state space");
      const int cost = transition_cost(u, succ.next, v);
      table.targets_.push_back(*idx);
      table.costs_.push_back(static_cast<std::int8_t>(cost));
      lo = first ? cost : std::min(lo, cost);
      hi = first ? cost : std::max(hi, cost);
      first = false;
    }
    table.offsets_.push_back(table.targets_.size());
  }
  table.min_cost_ = lo;
  table.max_cost_ = hi;
  return table;
}

TransitionTable build_transition_table(int height, Variant v, std::size_t max_transitions) {
  return build_transition_table(std::make_shared<const StateTable>(enumerate_valid_states(height)),
                                v, max_transitions);
}

namespace {

constexpr std::array<char, 8> kMagic{'C', 'Y', 'L', 'D', 'T', 'T', '0', '1'};

template <typename T>
void put(std::ostream& out, T value) {
  static_assert(std::endian::native == std::endian::little);
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) fail(ErrorKind::Format, "truncated transition table file");
  return value;
}

}  // namespace

void TransitionTable::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Io, "cannot open " + path + " for writing");
  out.write(kMagic.data(), kMagic.size());
  put<std::uint32_t>(out, static_cast<std::uint32_t>(height()));
  put<std::uint32_t>(out, variant_ == Variant::Boundary ? 0u : 1u);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(state_count()));
  put<std::uint64_t>(out, transition_count());
  for (StateIndex u = 0; u < state_count(); ++u) {
    const auto to = targets_of(u);
    const auto cost = costs_of(u);
    for (std::size_t k = 0; k < to.size(); ++k) {
      put<std::uint32_t>(out, u);
      put<std::uint32_t>(out, to[k]);
      put<std::int32_t>(out, cost[k]);
    }
  }
  if (!out) fail(ErrorKind::Io, "write failed for " + path);
}

TransitionTable TransitionTable::load(const std::string& path, std::size_t max_transitions) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot open " + path);
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) fail(ErrorKind::Format, path + " is not a transition table dump");
  const auto height = static_cast<int>(get<std::uint32_t>(in));
  const auto variant_code = get<std::uint32_t>(in);
  const auto state_count = get<std::uint32_t>(in);
  const auto transition_count = get<std::uint64_t>(in);
  if (variant_code > 1) fail(ErrorKind::Format, "unknown variant code in " + path);
  if (transition_count > max_transitions)
    fail(ErrorKind::Capacity, "transition table in " + path + " exceeds the edge cap");

  auto states = std::make_shared<const StateTable>(enumerate_valid_states(height, kHardMaxHeight));
  if (states->size() != state_count)
    fail(ErrorKind::Format, "state count in " + path + " does not match height");

  TransitionTable table;
  table.states_ = states;
  table.variant_ = variant_code == 0 ? Variant::Boundary : Variant::Interior;
  table.offsets_.assign(state_count + 1, 0);
  table.targets_.reserve(transition_count);
  table.costs_.reserve(transition_count);
  StateIndex current = 0;
  for (std::uint64_t e = 0; e < transition_count; ++e) {
    const auto from = get<std::uint32_t>(in);
    const auto to = get<std::uint32_t>(in);
    const auto cost = get<std::int32_t>(in);
    if (from < current || from >= state_count || to >= state_count || cost < -128 || cost > 127)
      fail(ErrorKind::Format, "corrupt edge record in " + path);
    while (current < from) table.offsets_[++current] = table.targets_.size();
    table.targets_.push_back(to);
    table.costs_.push_back(static_cast<std::int8_t>(cost));
    table.min_cost_ = e == 0 ? cost : std::min(table.min_cost_, cost);
    table.max_cost_ = e == 0 ? cost : std::max(table.max_cost_, cost);
  }
  while (current < state_count) table.offsets_[++current] = table.targets_.size();
  return table;
}

}  // namespace cyldom
