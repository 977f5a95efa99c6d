#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyldom/dp_engine.hpp"
#include "cyldom/oracle.hpp"
#include "cyldom/rational.hpp"

namespace cyldom {

// Padding stands for a strip whose waste is bounded below by zero alone.
enum class StripRole { Boundary, Interior, Padding };

struct Strip {
  int height = 0;
  StripRole role = StripRole::Interior;

  friend bool operator==(const Strip&, const Strip&) = default;
};

// Stack of strips covering the path dimension; first and last are boundary
// strips.
struct StripPartition {
  std::vector<Strip> strips;

  int total_height() const noexcept;
  // "B10/I10/B10"; padding strips print as "P<h>".
  std::string to_string() const;

  friend bool operator==(const StripPartition&, const StripPartition&) = default;
};

class TableSet {
 public:
  void add(std::shared_ptr<const WasteTable> table);
  void add(WasteTable table) { add(std::make_shared<const WasteTable>(std::move(table))); }

  const WasteTable* find(Variant v, int height) const;
  std::vector<int> heights(Variant v) const;
  bool empty() const noexcept { return tables_.empty(); }

 private:
  std::map<std::pair<Variant, int>, std::shared_ptr<const WasteTable>> tables_;
};

// Sum of per-strip waste minima at n columns; IncompleteTable when a strip has
// no table or its table cannot answer for n.
Waste total_waste(std::int64_t n, const StripPartition& partition, const TableSet& tables);

struct PartitionChoice {
  StripPartition partition;
  Waste total_waste = 0;
};

// Maximises total waste over partitions of m rows built from the available
// tables, with at most one padding strip when allow_padding is set. Ties go to
// the lexicographically smallest height sequence (interior before padding at
// equal height). Infeasible when no partition exists.
PartitionChoice optimize_partition(std::int64_t n, int m, const TableSet& tables,
                                   bool allow_padding = true);

inline bool paper_lower_bound_applies(std::int64_t n, std::int64_t m) noexcept {
  return m >= 20 && n >= 64;
}

// ((m+2)n + a floor((m-20)/10)) / 5 with a = 0, 6, 5, 9, 6 by n mod 5.
// Domain error outside m >= 20, n >= 64.
Rational paper_lower_bound(std::int64_t n, std::int64_t m);

// (m+2)n/5 + c (m+2) with c = 0, 7/40, 1/10, 2/5, 1/5 by n mod 5.
Rational upper_bound_reference(std::int64_t n, std::int64_t m);

struct BoundReport {
  std::int64_t n = 0;
  std::int64_t m = 0;
  Waste total_waste = 0;
  std::int64_t lower = 0;
  std::optional<Rational> paper_lower;
  Rational upper_ref;
  std::optional<std::int64_t> exact;
  std::optional<StripPartition> partition;  // empty when no strip partition fits

  // "exact" when the assembled lower bound meets the reference upper bound or
  // the oracle value, "gap" otherwise.
  std::string status() const;
};

struct ReportOptions {
  bool with_exact = false;
  oracle::ExactLimits exact_limits;
  bool allow_padding = true;
};

// lower = ceil((n m + L) / 5) with L from the optimised partition, or L = 0
// when no partition of m fits the available tables.
BoundReport make_report(std::int64_t n, std::int64_t m, const TableSet& tables,
                        const ReportOptions& options = {});

std::string report_csv_header();
std::string report_csv_row(const BoundReport& r);
std::string report_markdown_header();
std::string report_markdown_row(const BoundReport& r);
std::string report_json(const BoundReport& r);

}  // namespace cyldom
