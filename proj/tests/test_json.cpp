#include <doctest.h>

#include <random>

#include "bmres/ideal_io.hpp"
#include "bmres/io_json.hpp"
#include "bmres/morse.hpp"
#include "bmres/search.hpp"
#include "bmres/taylor.hpp"
#include "common.hpp"

using namespace bmres;

TEST_CASE("matching json round-trips byte-identically") {
  auto ideal = parse_ideal_inline("xy; yz; xz");
  LcmLattice lat(ideal);
  OrderingFamily fam;
  fam.per_point.assign(static_cast<std::size_t>(lat.num_points()),
                       TotalOrdering::from_descending({0, 1, 2}));
  auto a = generalized_bm(ideal, lat, fam);
  auto doc = matching_to_json(ideal, a);
  auto back = matching_from_json(doc);
  CHECK(back.edges == a.edges);
  CHECK(matching_to_json(ideal, back).dump() == doc.dump());
}

TEST_CASE("complex json round-trips byte-identically") {
  std::mt19937 rng(71);
  for (int t = 0; t < 25; ++t) {
    auto inst = bmres_test::random_instance(rng);
    auto taylor = build_taylor(inst.ideal);
    auto doc = complex_to_json(taylor);
    auto back = complex_from_json(doc);
    CHECK(back.basis == taylor.basis);
    CHECK(back.diff == taylor.diff);
    CHECK(complex_to_json(back).dump() == doc.dump());
  }
}

TEST_CASE("pipeline report serializes its pieces") {
  auto ideal = parse_ideal_inline("xy; yz; xz");
  auto report = main_theorem_pipeline(ideal, std::nullopt, {});
  auto doc = pipeline_report_to_json(report);
  CHECK(doc.at("certified").get<bool>());
  CHECK(doc.at("resolution_ok").get<bool>());
  CHECK(doc.at("report").at("minimal").get<bool>());
  CHECK(doc.at("ideal").at("num_vars").get<int>() == 3);
  auto complex = complex_from_json(doc.at("complex"));
  CHECK(complex.ranks() == std::vector<int>{1, 3, 2});
  auto betti = doc.at("report").at("betti");
  REQUIRE(betti.is_array());
  CHECK(betti.size() == 5);  // 1 + 3 + 1 multidegree rows
}

TEST_CASE("artinian pipeline reports the restriction check") {
  auto j = parse_ideal_inline("xy");
  auto report = main_theorem_pipeline(j, std::vector<int>{2, 2}, {});
  auto doc = pipeline_report_to_json(report);
  REQUIRE(doc.contains("j_restriction_minimal"));
  CHECK(doc.at("j_restriction_minimal").get<bool>());
}
