#include <catch2/catch_amalgamated.hpp>

#include "entmat/formulas.hpp"
#include "entmat/geometry.hpp"

using namespace entmat;

TEST_CASE("closed-form maximum entanglement") {
  CHECK(emax_formula(5) == std::pair<long long, EmaxCase>{20, EmaxCase::odd});
  CHECK(emax_formula(12) == std::pair<long long, EmaxCase>{180, EmaxCase::multiple_of_12});
  CHECK(emax_formula(6) == std::pair<long long, EmaxCase>{36, EmaxCase::even_c_half_integer});
  CHECK(emax_formula(4) == std::pair<long long, EmaxCase>{12, EmaxCase::even_c_half_nonint});
  CHECK(emax_formula(8).first == 64);
  CHECK(emax_formula(10).first == 110);
  CHECK(emax_formula(24) == std::pair<long long, EmaxCase>{720, EmaxCase::multiple_of_12});
  CHECK(emax_formula(2).first == 2);
  CHECK_THROWS_AS(emax_formula(1), input_error);
  for (int n = 2; n <= 48; ++n) CHECK(emax_formula(n).first > 0);
}

TEST_CASE("degree counting model for even n") {
  DegreeCounts d8 = degree_count_model(8);
  CHECK(d8.count_deg2 == 16);
  CHECK(d8.count_deg4 == 8);
  CHECK(d8.center_degree == 8);
  DegreeCounts d6 = degree_count_model(6);
  CHECK(d6.count_deg2 == 6);
  CHECK(d6.count_deg4 == 6);
  CHECK(d6.center_degree == 6);
  DegreeCounts d4 = degree_count_model(4);
  CHECK(d4.count_deg2 == 4);
  CHECK(d4.count_deg4 == 0);
  CHECK(d4.center_degree == 4);
  CHECK_THROWS_AS(degree_count_model(12), input_error);
  CHECK_THROWS_AS(degree_count_model(7), input_error);
}

TEST_CASE("degree counts match the geometric census away from multiples of 12") {
  for (int n = 4; n <= 30; n += 2) {
    if (n % 12 == 0) continue;
    DegreeCounts model = degree_count_model(n);
    MidpointCensus census = build_midpoint_census(n);
    long long deg2 = 0, deg4 = 0;
    for (const MidpointRecord& rec : census.records) {
      if (rec.kind == MidpointKind::center) {
        CHECK(rec.degree == model.center_degree);
        continue;
      }
      if (rec.degree == 2) ++deg2;
      if (rec.degree == 4) ++deg4;
    }
    CHECK(deg2 == model.count_deg2);
    CHECK(deg4 == model.count_deg4);
  }
}

TEST_CASE("ring degrees alternate with chord separation parity") {
  for (int n = 4; n <= 30; n += 2) {
    if (n % 12 == 0) continue;
    RingProfile profile = ring_degree_profile(build_midpoint_census(n));
    for (const RingDegree& rd : profile.rings) {
      CHECK_FALSE(rd.mixed);
      int separation = rd.ring_index + 1;  // rings come outermost-in
      CHECK(rd.degree == (separation % 2 == 0 ? 4 : 2));
    }
    CHECK(profile.center_degree == n);
  }
}

TEST_CASE("ring replacement at multiples of 12") {
  RingReplacement r12 = replacement_model(12);
  CHECK(r12.from_degree == 2);
  CHECK(r12.to_degree == 6);
  CHECK(r12.ring_size == 12);
  CHECK(r12.added_ebits == 24);  // exactly cancels the -2n of the base case
  RingReplacement r24 = replacement_model(24);
  CHECK(r24.from_degree == 4);
  CHECK(r24.to_degree == 8);
  CHECK(replacement_model(36).to_degree == 6);
  CHECK(replacement_model(48).to_degree == 8);
  CHECK_THROWS_AS(replacement_model(10), input_error);
  CHECK_THROWS_AS(replacement_model(0), input_error);
}

TEST_CASE("the census realizes the predicted replacement ring") {
  for (int n : {12, 24, 36, 48}) {
    RingReplacement model = replacement_model(n);
    MidpointCensus census = build_midpoint_census(n);
    std::map<int, int> hist;
    for (const MidpointRecord& rec : census.records) hist[rec.degree]++;
    REQUIRE(hist.count(model.to_degree) == 1);
    CHECK(hist[model.to_degree] == n);  // one full ring changes degree
  }
}

TEST_CASE("constructive breakdowns of the worked sizes") {
  MaxEntBreakdown b5 = emax_constructive(5);
  CHECK(b5.primary_block == 15);
  CHECK(b5.center == 0);
  CHECK(b5.constructive_total == 20);
  CHECK(b5.match);

  MaxEntBreakdown b6 = emax_constructive(6);
  CHECK(b6.primary_block == 21);
  REQUIRE(b6.per_ring.size() == 1);
  CHECK(b6.per_ring[0].count == 6);
  CHECK(b6.per_ring[0].multiplicity == 2);
  CHECK(b6.per_ring[0].subtotal == 12);
  CHECK(b6.center == 3);
  CHECK(b6.constructive_total == 36);
  CHECK(b6.match);

  MaxEntBreakdown b4 = emax_constructive(4);
  CHECK(b4.primary_block == 10);
  CHECK(b4.per_ring.empty());
  CHECK(b4.center == 2);
  CHECK(b4.constructive_total == 12);
  CHECK(b4.match);

  CHECK_THROWS_AS(emax_constructive(1), input_error);
  CHECK_THROWS_AS(emax_constructive(49), input_error);
}

TEST_CASE("breakdown internal consistency") {
  for (int n = 2; n <= 20; ++n) {
    MaxEntBreakdown b = emax_constructive(n);
    long long sum = b.primary_block + b.center;
    for (const RingSubtotal& rs : b.per_ring) {
      sum += rs.subtotal;
      if (rs.multiplicity > 0)
        CHECK(rs.subtotal == static_cast<long long>(rs.count) * rs.multiplicity);
    }
    CHECK(sum == b.constructive_total);
  }
}

TEST_CASE("odd constructive totals follow n^2 - n") {
  for (int n = 3; n <= 29; n += 2)
    CHECK(emax_constructive(n).constructive_total == static_cast<long long>(n) * n - n);
}

TEST_CASE("even constructive totals match the formula") {
  for (int n : {4, 6, 8, 10}) {
    MaxEntBreakdown b = emax_constructive(n);
    CHECK(b.match);
    CHECK(b.constructive_total == emax_formula(n).first);
  }
  // recorded (not forced) at multiples of 12; geometrically they do agree
  for (int n : {12, 24, 36, 48}) CHECK(emax_constructive(n).match);
}

TEST_CASE("the wrap-degenerate n=2 case is reported, not hidden") {
  MaxEntBreakdown b2 = emax_constructive(2);
  CHECK(b2.primary_block == 3);
  CHECK(b2.center == 1);
  CHECK(b2.constructive_total == 4);
  CHECK(b2.formula_total == 2);
  CHECK_FALSE(b2.match);
}

TEST_CASE("degree-count identity reproduces the formula symbolically") {
  for (int n = 4; n <= 46; n += 2) {
    if (n % 12 == 0) continue;
    DegreeCounts d = degree_count_model(n);
    long long total = static_cast<long long>(n) * (n + 1) / 2 + (d.count_deg2 - n) +
                      2 * d.count_deg4 + n / 2;
    CHECK(total == emax_formula(n).first);
  }
}

TEST_CASE("census table rows") {
  auto rows = census_table(12);
  REQUIRE(rows.size() == 10);  // n = 3..12
  CHECK(rows[0].n == 3);
  CHECK(rows[1].n == 4);
  CHECK(rows[1].total_midpoints == 5);
  CHECK(rows[1].degree_histogram == std::map<int, int>{{2, 4}, {4, 1}});
  CHECK(rows[1].ring_count == 1);
  CHECK(rows[4].n == 7);
  CHECK(rows[4].total_midpoints == 21);
  CHECK(rows[4].degree_histogram == std::map<int, int>{{2, 21}});
  CHECK(rows[9].n == 12);
  CHECK(rows[9].degree_histogram.count(6) == 1);
  CHECK_THROWS_AS(census_table(49), input_error);
}

TEST_CASE("compare report") {
  auto rows = compare_report(3, 10);
  REQUIRE(rows.size() == 8);
  for (const CompareRow& r : rows) CHECK(r.match);
  auto r11 = compare_report(11, 11).at(0);
  CHECK(r11.formula == 110);
  CHECK(r11.constructive == 110);
  auto r12 = compare_report(12, 12).at(0);
  CHECK(r12.formula == 180);
  CHECK(r12.constructive == 180);  // recorded outcome: the census does agree
  CHECK_THROWS_AS(compare_report(1, 5), input_error);
  CHECK_THROWS_AS(compare_report(5, 3), input_error);
  CHECK_THROWS_AS(compare_report(3, 50), input_error);
}
