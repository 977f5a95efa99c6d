#include <doctest.h>

#include <memory>
#include <vector>

#include "cyldom/bounds.hpp"
#include "cyldom/error.hpp"

using namespace cyldom;

namespace {

// Height-10 tables in series form, using the published values.
WasteTable boundary10() {
  std::vector<Waste> d(141);
  for (int n = 0; n <= 140; ++n) d[static_cast<std::size_t>(n)] = n;
  return WasteTable::from_series(Variant::Boundary, 10, d, GlobalCertificate{65, 1, 1}, 8119, 8119);
}

WasteTable interior10() {
  const Waste residues[5] = {0, 6, 5, 9, 6};
  std::vector<Waste> d = {0, 6, 5, 6, 6, 0, 5, 5, 9, 6};
  for (int n = 10; n <= 40; ++n) d.push_back(residues[n % 5]);
  return WasteTable::from_series(Variant::Interior, 10, d, GlobalCertificate{12, 5, 0}, 8119, 8119);
}

WasteTable flat(Variant v, int height, Waste value, int n_max = 40) {
  std::vector<Waste> d(static_cast<std::size_t>(n_max) + 1, value);
  d[0] = 0;
  return WasteTable::from_series(v, height, d, GlobalCertificate{1, 1, 0}, 1, 1);
}

TableSet height10() {
  TableSet t;
  t.add(boundary10());
  t.add(interior10());
  return t;
}

}  // namespace

TEST_CASE("total waste of height-10 partitions") {
  const TableSet t = height10();
  const StripPartition two{{{10, StripRole::Boundary}, {10, StripRole::Boundary}}};
  const StripPartition three{{{10, StripRole::Boundary}, {10, StripRole::Interior}, {10, StripRole::Boundary}}};
  for (int n = 65; n <= 200; ++n) {
    CHECK(total_waste(n, two, t) == 2 * n);
    if (n % 5 == 3) CHECK(total_waste(n, three, t) == 2 * n + 9);
  }
  CHECK(two.total_height() == 20);
  CHECK(three.to_string() == "B10/I10/B10");
  const StripPartition missing{{{10, StripRole::Boundary}, {8, StripRole::Interior}, {10, StripRole::Boundary}}};
  CHECK_THROWS_AS(total_waste(70, missing, t), Error);
}

TEST_CASE("height 1 interior strips add nothing") {
  TableSet t = height10();
  t.add(flat(Variant::Interior, 1, 0));
  const StripPartition p{{{10, StripRole::Boundary}, {1, StripRole::Interior}, {1, StripRole::Interior},
                          {10, StripRole::Boundary}}};
  CHECK(total_waste(70, p, t) == 140);
}

TEST_CASE("partition optimiser") {
  const TableSet t = height10();
  CHECK(optimize_partition(70, 20, t).partition.to_string() == "B10/B10");
  CHECK(optimize_partition(70, 30, t).partition.to_string() == "B10/I10/B10");
  CHECK(optimize_partition(73, 30, t).total_waste == 2 * 73 + 9);
  CHECK(optimize_partition(65, 30, t).partition.to_string() == "B10/I10/B10");
  // Leftover rows go to one padding strip.
  const PartitionChoice p25 = optimize_partition(71, 25, t);
  CHECK(p25.total_waste == 142);
  CHECK(p25.partition.total_height() == 25);
  const PartitionChoice p37 = optimize_partition(71, 37, t);
  CHECK(p37.total_waste == 142 + 6);
  CHECK(p37.partition.total_height() == 37);
  CHECK_THROWS_AS(optimize_partition(71, 25, t, false), Error);
  CHECK_THROWS_AS(optimize_partition(71, 1, t), Error);
  TableSet interior_only;
  interior_only.add(interior10());
  CHECK_THROWS_AS(optimize_partition(71, 30, interior_only), Error);
}

TEST_CASE("height 8 remainder strip") {
  TableSet t = height10();
  t.add(flat(Variant::Interior, 8, 3, 140));
  for (int n : {66, 67, 68}) {
    const Waste with8 = total_waste(n, {{{10, StripRole::Boundary}, {8, StripRole::Interior}, {10, StripRole::Boundary}}}, t);
    const Waste padded = total_waste(n, {{{10, StripRole::Boundary}, {8, StripRole::Padding}, {10, StripRole::Boundary}}}, t);
    const PartitionChoice best = optimize_partition(n, 28, t);
    CHECK(best.total_waste >= with8);
    CHECK(best.total_waste >= padded);
    CHECK(best.partition.to_string() == "B10/I8/B10");
    CHECK(total_waste(n, best.partition, t) == best.total_waste);
  }
}

TEST_CASE("ties go to the lexicographically smallest heights") {
  TableSet t;
  t.add(flat(Variant::Boundary, 2, 1));
  t.add(flat(Variant::Boundary, 3, 1));
  t.add(flat(Variant::Interior, 1, 0));
  CHECK(optimize_partition(10, 5, t).partition.to_string() == "B2/I1/B2");
  CHECK(optimize_partition(10, 6, t).partition.to_string() == "B2/I1/I1/B2");
}

TEST_CASE("closed-form lower bound") {
  CHECK(paper_lower_bound(65, 20) == Rational(286));
  CHECK(paper_lower_bound(66, 30) == Rational(2118, 5));
  CHECK(paper_lower_bound(66, 30).to_string() == "423.6");
  CHECK(paper_lower_bound(68, 30) == Rational(437));
  CHECK(paper_lower_bound(67, 30) == Rational(2149, 5));
  CHECK_THROWS_AS(paper_lower_bound(63, 20), Error);
  CHECK_THROWS_AS(paper_lower_bound(70, 19), Error);
  try {
    paper_lower_bound(10, 12);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }
}

TEST_CASE("reference upper bound") {
  CHECK(upper_bound_reference(65, 20) == Rational(286));
  CHECK(upper_bound_reference(66, 30) == Rational(428));
  CHECK(upper_bound_reference(67, 30) == Rational(432));
  CHECK(upper_bound_reference(68, 30).to_string() == "448");
  CHECK(upper_bound_reference(6, 1).to_string() == "4.125");
}

TEST_CASE("gap for n = 2 mod 5 and m a multiple of 10") {
  for (int n = 67; n <= 1002; n += 5)
    for (int m = 20; m <= 200; m += 10) CHECK(upper_bound_reference(n, m) - paper_lower_bound(n, m) == Rational(11, 5));
}

TEST_CASE("closed forms are ordered") {
  for (int n = 64; n <= 300; ++n)
    for (int m = 20; m <= 120; ++m) CHECK(paper_lower_bound(n, m) <= upper_bound_reference(n, m));
}

TEST_CASE("height-10 assembly reproduces the closed form") {
  const TableSet t = height10();
  for (int n = 65; n <= 260; ++n) {
    for (int m = 20; m <= 100; ++m) {
      const BoundReport r = make_report(n, m, t);
      REQUIRE(r.paper_lower.has_value());
      CHECK(r.lower == r.paper_lower->ceil());
      CHECK(r.lower >= Rational(n * m, 5).ceil());
      CHECK(r.lower <= r.upper_ref.ceil());
    }
  }
}

TEST_CASE("reports") {
  const TableSet t = height10();
  const BoundReport a = make_report(65, 20, t);
  CHECK(a.total_waste == 130);
  CHECK(a.lower == 286);
  CHECK(a.upper_ref == Rational(286));
  CHECK(a.status() == "exact");
  const BoundReport b = make_report(67, 30, t);
  CHECK(b.lower == 430);
  CHECK(b.status() == "gap");
  CHECK(report_csv_header() == "n,m,lower,paper_lower,upper_ref,exact,partition");
  CHECK(report_csv_row(b) == "67,30,430,429.8,432,,B10/I10/B10");
  CHECK(report_json(a) ==
        R"({"n":65,"m":20,"total_waste":130,"lower":286,"paper_lower":"286","upper_ref":"286","upper":286,"exact":null,"partition":"B10/B10","status":"exact"})");
  // No table fits: the trivial bound.
  const BoundReport c = make_report(12, 5, t);
  CHECK_FALSE(c.partition.has_value());
  CHECK(c.lower == 12);
  CHECK(report_csv_row(c) == "12,5,12,out of range,17.5,,none");
  CHECK(report_markdown_row(b) == "| 67 | 30 | 430 | 429.8 | 432 | 2 | - | B10/I10/B10 |");
}

TEST_CASE("oracle value in reports") {
  TableSet t;
  for (int h = 1; h <= 6; ++h) {
    t.add(compute_waste_table(build_transition_table(h, Variant::Boundary), default_params(Variant::Boundary)));
    t.add(compute_waste_table(build_transition_table(h, Variant::Interior), default_params(Variant::Interior)));
  }
  ReportOptions opts;
  opts.with_exact = true;
  const BoundReport r = make_report(10, 12, t, opts);
  REQUIRE(r.exact.has_value());
  CHECK(*r.exact == 28);
  CHECK(r.lower <= 28);
  CHECK(28 <= r.upper_ref.ceil());

  // Sandwich on every small instance the oracle reaches quickly.
  for (int n = 3; n <= 10; ++n) {
    for (int m = 1; m <= 7; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      const BoundReport s = make_report(n, m, t, opts);
      REQUIRE(s.exact.has_value());
      CHECK(s.lower <= *s.exact);
      CHECK(*s.exact <= s.upper_ref.ceil());
      CHECK(s.lower >= Rational(n * m, 5).ceil());
    }
  }
}
