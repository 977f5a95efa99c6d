#include "cyldom/bounds.hpp"

#include <algorithm>
#include <limits>

#include <json.hpp>

#include "cyldom/error.hpp"

namespace cyldom {

int StripPartition::total_height() const noexcept {
  int total = 0;
  for (const auto& s : strips) total += s.height;
  return total;
}

std::string StripPartition::to_string() const {
  std::string out;
  for (const auto& s : strips) {
    if (!out.empty()) out += '/';
    out += s.role == StripRole::Boundary ? 'B' : s.role == StripRole::Interior ? 'I' : 'P';
    out += std::to_string(s.height);
  }
  return out;
}

void TableSet::add(std::shared_ptr<const WasteTable> table) {
  if (!table) fail(ErrorKind::InvalidArgument, "null waste table");
  tables_[{table->variant(), table->height()}] = std::move(table);
}

const WasteTable* TableSet::find(Variant v, int height) const {
  const auto it = tables_.find({v, height});
  return it == tables_.end() ? nullptr : it->second.get();
}

std::vector<int> TableSet::heights(Variant v) const {
  std::vector<int> out;
  for (const auto& [key, table] : tables_)
    if (key.first == v) out.push_back(key.second);
  return out;
}

namespace {

Waste strip_waste(std::int64_t n, const Strip& s, const TableSet& tables) {
  if (s.role == StripRole::Padding) return 0;
  const Variant v = s.role == StripRole::Boundary ? Variant::Boundary : Variant::Interior;
  const WasteTable* t = tables.find(v, s.height);
  if (!t)
    fail(ErrorKind::IncompleteTable, "no " + std::string(variant_name(v)) + " table for height " +
                                         std::to_string(s.height));
  const Waste w = t->query(n);
  if (!finite(w))
    fail(ErrorKind::IncompleteTable, "waste table has no almost-domination at n = " + std::to_string(n));
  return w;
}

constexpr Waste kNone = std::numeric_limits<Waste>::min();

}  // namespace

Waste total_waste(std::int64_t n, const StripPartition& partition, const TableSet& tables) {
  Waste total = 0;
  for (const auto& s : partition.strips) total += strip_waste(n, s, tables);
  return total;
}

PartitionChoice optimize_partition(std::int64_t n, int m, const TableSet& tables,
                                   bool allow_padding) {
  if (m < 2) fail(ErrorKind::Infeasible, "a strip partition needs m >= 2");
  const std::vector<int> boundary_heights = tables.heights(Variant::Boundary);
  if (boundary_heights.empty()) fail(ErrorKind::Infeasible, "no boundary waste table available");

  const auto um = static_cast<std::size_t>(m);
  std::vector<Waste> boundary(um + 1, kNone), interior(um + 1, kNone);
  for (int h : boundary_heights)
    if (h <= m) boundary[static_cast<std::size_t>(h)] = strip_waste(n, {h, StripRole::Boundary}, tables);
  std::vector<int> interior_heights;
  for (int h : tables.heights(Variant::Interior)) {
    if (h > m) continue;
    interior[static_cast<std::size_t>(h)] = strip_waste(n, {h, StripRole::Interior}, tables);
    interior_heights.push_back(h);
  }

  // best[used][r]: most waste from a run of interior/padding strips followed by
  // the closing boundary strip, covering r rows; used = padding already spent.
  std::vector<Waste> best[2] = {std::vector<Waste>(um + 1, kNone), std::vector<Waste>(um + 1, kNone)};
  std::vector<Waste> best_used_below(um + 2, kNone);  // max of best[1][r'] over r' < r
  for (std::size_t r = 1; r <= um; ++r) {
    for (int used = 1; used >= 0; --used) {
      Waste v = boundary[r];
      for (int x : interior_heights) {
        const auto ux = static_cast<std::size_t>(x);
        if (ux < r && best[used][r - ux] != kNone) v = std::max(v, interior[ux] + best[used][r - ux]);
      }
      if (!used && allow_padding) v = std::max(v, best_used_below[r]);
      best[used][r] = v;
    }
    best_used_below[r + 1] = std::max(best_used_below[r], best[1][r]);
  }

  Waste total = kNone;
  for (int a : boundary_heights)
    if (a < m && best[0][um - static_cast<std::size_t>(a)] != kNone)
      total = std::max(total, boundary[static_cast<std::size_t>(a)] + best[0][um - static_cast<std::size_t>(a)]);
  if (total == kNone)
    fail(ErrorKind::Infeasible, "no strip partition of m = " + std::to_string(m) +
                                    " fits the available tables");

  // Greedy reconstruction: smallest next height that keeps the optimum.
  PartitionChoice choice;
  choice.total_waste = total;
  std::size_t rest = 0;
  for (int a : boundary_heights) {  // heights() is ascending
    if (a < m && best[0][um - static_cast<std::size_t>(a)] != kNone &&
        boundary[static_cast<std::size_t>(a)] + best[0][um - static_cast<std::size_t>(a)] == total) {
      choice.partition.strips.push_back({a, StripRole::Boundary});
      rest = um - static_cast<std::size_t>(a);
      break;
    }
  }
  int used = 0;
  Waste target = best[0][rest];
  while (rest > 0) {
    bool advanced = false;
    for (std::size_t y = 1; y <= rest && !advanced; ++y) {
      if (y == rest) {
        if (boundary[y] == target) {
          choice.partition.strips.push_back({static_cast<int>(y), StripRole::Boundary});
          rest = 0;
          advanced = true;
        }
        break;
      }
      if (interior[y] != kNone && best[used][rest - y] != kNone &&
          interior[y] + best[used][rest - y] == target) {
        choice.partition.strips.push_back({static_cast<int>(y), StripRole::Interior});
        target -= interior[y];
        rest -= y;
        advanced = true;
      } else if (!used && allow_padding && best[1][rest - y] == target) {
        choice.partition.strips.push_back({static_cast<int>(y), StripRole::Padding});
        used = 1;
        rest -= y;
        advanced = true;
      }
    }
    if (!advanced) throw std::logic_error("partition reconstruction lost the optimum");
  }
  return choice;
}

Rational paper_lower_bound(std::int64_t n, std::int64_t m) {
  if (!paper_lower_bound_applies(n, m))
    fail(ErrorKind::Domain, "closed-form lower bound needs m >= 20 and n >= 64");
  static constexpr std::int64_t a[5] = {0, 6, 5, 9, 6};
  return Rational((m + 2) * n + a[n % 5] * ((m - 20) / 10), 5);
}

Rational upper_bound_reference(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1) fail(ErrorKind::Domain, "cylinder dimensions must be positive");
  static const Rational c[5] = {Rational(0), Rational(7, 40), Rational(1, 10), Rational(2, 5),
                                Rational(1, 5)};
  return Rational((m + 2) * n, 5) + c[n % 5] * Rational(m + 2);
}

std::string BoundReport::status() const {
  if (exact && *exact == lower) return "exact";
  if (!exact && lower == upper_ref.ceil()) return "exact";
  return "gap";
}

BoundReport make_report(std::int64_t n, std::int64_t m, const TableSet& tables,
                        const ReportOptions& options) {
  if (n < 1 || m < 1) fail(ErrorKind::InvalidArgument, "n and m must be positive");
  BoundReport r;
  r.n = n;
  r.m = m;
  r.upper_ref = upper_bound_reference(n, m);
  if (paper_lower_bound_applies(n, m)) r.paper_lower = paper_lower_bound(n, m);
  try {
    PartitionChoice choice = optimize_partition(n, static_cast<int>(m), tables, options.allow_padding);
    r.total_waste = choice.total_waste;
    r.partition = std::move(choice.partition);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Infeasible) throw;
  }
  r.lower = Rational(n * m + r.total_waste, 5).ceil();
  if (options.with_exact && n >= 3 && n <= options.exact_limits.max_n &&
      m <= options.exact_limits.max_m)
    r.exact = oracle::exact_domination_number(static_cast<int>(n), static_cast<int>(m),
                                              oracle::ExactMode::Auto, false, options.exact_limits)
                  .gamma;
  return r;
}

std::string report_csv_header() { return "n,m,lower,paper_lower,upper_ref,exact,partition"; }

namespace {

std::string paper_cell(const BoundReport& r) {
  return r.paper_lower ? r.paper_lower->to_string() : "out of range";
}

std::string partition_cell(const BoundReport& r) {
  return r.partition ? r.partition->to_string() : "none";
}

}  // namespace

std::string report_csv_row(const BoundReport& r) {
  return std::to_string(r.n) + "," + std::to_string(r.m) + "," + std::to_string(r.lower) + "," +
         paper_cell(r) + "," + r.upper_ref.to_string() + "," +
         (r.exact ? std::to_string(*r.exact) : std::string()) + "," + partition_cell(r);
}

std::string report_markdown_header() {
  return "| n | m | lower | paper_lower | upper_ref | gap | exact | partition |\n"
         "|---|---|---|---|---|---|---|---|";
}

std::string report_markdown_row(const BoundReport& r) {
  return "| " + std::to_string(r.n) + " | " + std::to_string(r.m) + " | " + std::to_string(r.lower) +
         " | " + paper_cell(r) + " | " + r.upper_ref.to_string() + " | " +
         (r.upper_ref - Rational(r.lower)).to_string() + " | " +
         (r.exact ? std::to_string(*r.exact) : std::string("-")) + " | " + partition_cell(r) + " |";
}

std::string report_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["total_waste"] = r.total_waste;
  j["lower"] = r.lower;
  j["paper_lower"] = r.paper_lower ? nlohmann::ordered_json(r.paper_lower->to_string())
                                   : nlohmann::ordered_json();
  j["upper_ref"] = r.upper_ref.to_string();
  j["upper"] = r.upper_ref.ceil();
  j["exact"] = r.exact ? nlohmann::ordered_json(*r.exact) : nlohmann::ordered_json();
  j["partition"] = r.partition ? nlohmann::ordered_json(r.partition->to_string())
                               : nlohmann::ordered_json();
  j["status"] = r.status();
  return j.dump();
}

}  // namespace cyldom
