#include "doctest.h"
#include "qmckay/errors.hpp"
#include "qmckay/gwtheory.hpp"
#include "series_oracle.hpp"

#include <set>

using namespace qmckay;

namespace {

std::vector<GroupSpec> small_groups() {
  std::vector<GroupSpec> out;
  for (int k = 2; k <= 8; ++k) out.push_back(GroupSpec::cyclic(k));
  for (int m = 2; m <= 6; ++m) out.push_back(GroupSpec::dihedral(m));
  out.push_back(GroupSpec::tetrahedral());
  out.push_back(GroupSpec::octahedral());
  out.push_back(GroupSpec::icosahedral());
  return out;
}

}  // namespace

TEST_CASE("curve classes on D5") {
  McKayData d = McKayData::build(GroupSpec::dihedral(3));
  for (int node : binary_simple_roots(d.spec)) {
    RootVector e(5, 0);
    e[node] = 1;
    CHECK(curve_class(d, e) == CurveClass{0, 0});
  }
  CHECK(curve_class(d, {1, 0, 0, 0, 0}) == CurveClass{1, 0});
  CHECK(curve_class(d, {1, 2, 2, 1, 1}) == CurveClass{1, 2});
  CHECK_THROWS_AS(curve_class(d, {2, 0, 0, 0, 0}), PreconditionError);
}

TEST_CASE("D5 BPS table") {
  BPSTable t = bps_table(McKayData::build(GroupSpec::dihedral(3)));
  REQUIRE(t.entries.size() == 5);
  CHECK(t.n0({1, 0}) == 1);
  CHECK(t.n0({1, 1}) == 2);
  CHECK(t.n0({0, 1}) == 4);
  CHECK(t.n0({0, 2}) == Rational(1, 2));
  CHECK(t.n0({1, 2}) == 1);
  CHECK(t.n0({2, 0}) == 0);
}

TEST_CASE("A3 BPS table") {
  BPSTable t = bps_table(McKayData::build(GroupSpec::cyclic(2)));
  REQUIRE(t.entries.size() == 1);
  CHECK(t.entries[0].beta == CurveClass{1});
  CHECK(t.entries[0].n0 == 2);
  CHECK(t.n0({2}) == 0);
}

TEST_CASE("fiber cardinalities") {
  const std::set<int> allowed{1, 2, 4, 8};
  for (const auto& spec : small_groups()) {
    CAPTURE(spec.name());
    McKayData d = McKayData::build(spec);
    BPSTable t = bps_table(d);
    int total = 0;
    for (const auto& e : t.entries) {
      CHECK(allowed.count(e.fiber_size));
      CHECK(e.n0 * 2 == e.fiber_size);
      total += e.fiber_size;
    }
    int binary_roots = 0;
    for (const auto& a : d.roots.positive_roots) {
      bool zero = true;
      for (int node : d.curve_nodes) zero = zero && a[node] == 0;
      binary_roots += zero;
    }
    CHECK(total == static_cast<int>(d.roots.positive_roots.size()) - binary_roots);
  }
}

TEST_CASE("D5 partition function") {
  McKayData d = McKayData::build(GroupSpec::dihedral(3));
  Truncation tr{6, 6, 0};
  auto per_root = partition_function(d, tr);
  auto per_class = partition_function_by_class(d, tr);
  CHECK(per_root.series == per_class.series);
  CHECK(per_root.series == oracle::d5_closed_product(tr));
  CHECK(per_root.series.constant_term() == 1);
  auto dt = dt_partition(d, tr);
  CHECK(dt.series == per_root.series);
  CHECK(dt.tag == "reduced DT prediction");
  for (const auto& [beta, w] : dt.factors) CHECK(w == bps_table(d).n0(beta));
  CHECK(partition_function(d, {0, 6, 0}).series.to_string() == "1");
}

TEST_CASE("partition factorizations agree") {
  for (const auto& spec : small_groups()) {
    CAPTURE(spec.name());
    McKayData d = McKayData::build(spec);
    Truncation tr{3, 3, 0};
    CHECK(partition_function(d, tr).series == partition_function_by_class(d, tr).series);
  }
}

TEST_CASE("multiple cover formula") {
  BPSTable t = bps_table(McKayData::build(GroupSpec::dihedral(3)));
  CHECK(gw_genus0(t, {0, 2}) == 1);
  CHECK(gw_genus0(t, {0, 3}) == Rational(4, 27));
  CHECK(gw_genus0(t, {1, 0}) == 1);
  for (int d = 1; d <= 12; ++d) CHECK(gw_genus0(t, {0, d}) == Rational(d % 2 ? 4 : 8, d * d * d));
  CHECK_THROWS_AS(gw_genus0(t, {0, 0}), PreconditionError);
}

TEST_CASE("all genus invariants") {
  BPSTable t = bps_table(McKayData::build(GroupSpec::dihedral(3)));
  CHECK(gw_all_genus(t, {1, 0}, 1) == Rational(1, 12));
  CHECK(gw_all_genus(t, {1, 0}, 2) == Rational(1, 240));
  for (const CurveClass& b : {CurveClass{1, 0}, CurveClass{0, 2}, CurveClass{2, 4}, CurveClass{0, 6}})
    CHECK(gw_all_genus(t, b, 0) == gw_genus0(t, b));
  CHECK(class_divisors({2, 4}) == std::vector<int>{1, 2});
  CHECK(class_divisors({0, 6}) == std::vector<int>{1, 2, 3, 6});
}

TEST_CASE("free energy bridge") {
  std::vector<GroupSpec> specs{GroupSpec::dihedral(3), GroupSpec::cyclic(2), GroupSpec::cyclic(3), GroupSpec::tetrahedral(),
                               GroupSpec::dihedral(2)};
  for (const auto& spec : specs) {
    CAPTURE(spec.name());
    auto r = free_energy_bridge(McKayData::build(spec), {4, 4, 6});
    CHECK(r.classes_checked > 0);
    for (const auto& m : r.mismatches) FAIL_CHECK(m);
  }
}

TEST_CASE("normal bundles") {
  McKayData d5 = McKayData::build(GroupSpec::dihedral(3));
  CHECK(normal_bundle_type(d5, 0) == std::pair<int, int>{-1, -1});
  CHECK(normal_bundle_type(d5, 1) == std::pair<int, int>{-3, 1});
  McKayData a3 = McKayData::build(GroupSpec::cyclic(2));
  CHECK(normal_bundle_type(a3, 0) == std::pair<int, int>{-2, 0});
  for (const auto& spec : small_groups()) {
    McKayData d = McKayData::build(spec);
    for (int c = 0; c < d.curve_count(); ++c) {
      auto [a, b] = normal_bundle_type(d, c);
      CHECK(a + b == -2);
    }
  }
}
