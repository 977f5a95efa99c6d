#include "cyldom/state_space.hpp"

#include <algorithm>
#include <bit>

#include "cyldom/error.hpp"

namespace cyldom {

StateWord StateWord::from_entries(std::span<const int> entries) {
  if (entries.empty() || entries.size() > static_cast<std::size_t>(kHardMaxHeight))
    fail(ErrorKind::InvalidArgument,
         "state height must be in [1, " + std::to_string(kHardMaxHeight) + "]");
  StateWord s;
  s.height_ = static_cast<int>(entries.size());
  for (std::size_t j = 0; j < entries.size(); ++j) {
    switch (entries[j]) {
      case 0: s.zeros_ |= 1u << j; break;
      case 1: break;
      case 2: s.twos_ |= 1u << j; break;
      default:
        fail(ErrorKind::InvalidArgument,
             "state entry " + std::to_string(entries[j]) + " is not a trit");
    }
  }
  return s;
}

StateWord StateWord::from_masks(int height, std::uint32_t zeros, std::uint32_t twos) {
  if (height < 1 || height > kHardMaxHeight)
    fail(ErrorKind::InvalidArgument,
         "state height must be in [1, " + std::to_string(kHardMaxHeight) + "]");
  StateWord s;
  s.height_ = height;
  const std::uint32_t mask = s.row_mask();
  if ((zeros & ~mask) || (twos & ~mask) || (zeros & twos))
    fail(ErrorKind::InvalidArgument, "state masks overlap or exceed the height");
  s.zeros_ = zeros;
  s.twos_ = twos;
  return s;
}

std::uint64_t StateWord::code() const noexcept {
  std::uint64_t c = 0;
  for (int j = height_ - 1; j >= 0; --j) c = 3 * c + static_cast<std::uint64_t>(entry(j));
  return c;
}

bool StateWord::valid() const noexcept {
  const std::uint32_t near_zero = (zeros_ << 1) | (zeros_ >> 1);
  return (near_zero & twos_) == 0;
}

std::vector<int> StateWord::entries() const {
  std::vector<int> out(static_cast<std::size_t>(height_));
  for (int j = 0; j < height_; ++j) out[static_cast<std::size_t>(j)] = entry(j);
  return out;
}

std::string StateWord::to_string() const {
  std::string out = "(";
  for (int j = 0; j < height_; ++j) {
    if (j) out += ',';
    out += static_cast<char>('0' + entry(j));
  }
  out += ')';
  return out;
}

int zeros_count(const StateWord& s) noexcept { return std::popcount(s.zeros()); }

StateWord reflect(const StateWord& s) noexcept {
  const int h = s.height();
  std::uint32_t zeros = 0, twos = 0;
  for (int j = 0; j < h; ++j) {
    const int k = h - 1 - j;
    zeros |= ((s.zeros() >> j) & 1u) << k;
    twos |= ((s.twos() >> j) & 1u) << k;
  }
  return StateWord::from_masks(h, zeros, twos);
}

std::optional<StateIndex> StateTable::index_of(const StateWord& s) const {
  if (s.height() != height_) return std::nullopt;
  const auto it = std::lower_bound(codes_.begin(), codes_.end(), s.code());
  if (it == codes_.end() || *it != s.code()) return std::nullopt;
  return static_cast<StateIndex>(it - codes_.begin());
}

namespace {

// Fills rows top-down so that states come out in ascending base-3 order.
void extend(int row, int above, std::uint32_t zeros, std::uint32_t twos, int h,
            std::vector<StateWord>& out) {
  if (row < 0) {
    out.push_back(StateWord::from_masks(h, zeros, twos));
    return;
  }
  for (int trit = 0; trit < 3; ++trit) {
    if ((trit == 0 && above == 2) || (trit == 2 && above == 0)) continue;
    extend(row - 1, trit, trit == 0 ? zeros | (1u << row) : zeros,
           trit == 2 ? twos | (1u << row) : twos, h, out);
  }
}

}  // namespace

StateTable enumerate_valid_states(int h, int max_height) {
  max_height = std::min(max_height, kHardMaxHeight);
  if (h < 1 || h > max_height)
    fail(ErrorKind::InvalidArgument,
         "strip height " + std::to_string(h) + " outside [1, " + std::to_string(max_height) + "]");
  StateTable table;
  table.height_ = h;
  extend(h - 1, 1, 0, 0, h, table.states_);
  table.codes_.reserve(table.states_.size());
  for (const auto& s : table.states_) table.codes_.push_back(s.code());
  table.reflect_map_.reserve(table.states_.size());
  for (const auto& s : table.states_) table.reflect_map_.push_back(*table.index_of(reflect(s)));
  return table;
}

}  // namespace cyldom
