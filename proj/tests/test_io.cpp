#include "twinpoly/io.hpp"

#include <doctest.h>

using namespace twinpoly;
using nlohmann::json;

namespace {

Poset lambda_poset() { return Poset::from_relations(3, {{2, 1}, {3, 1}}); }

}  // namespace

TEST_CASE("rational strings") {
  CHECK(rational_from_string("3/4") == Rational(3, 4));
  CHECK(rational_from_string("-7") == -7);
  CHECK(rational_from_string("2/4") == Rational(1, 2));
  CHECK(rational_from_string("-6/-4") == Rational(3, 2));
  CHECK(rational_to_string(Rational(2)) == "2/1");
  CHECK(rational_to_string(Rational(-1, 2)) == "-1/2");
  CHECK_THROWS_AS(rational_from_string(""), ParseError);
  CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
  CHECK_THROWS_AS(rational_from_string("x"), ParseError);
  CHECK_THROWS_AS(rational_from_string("1/"), ParseError);
}

TEST_CASE("vrep json round trip") {
  const Poset p = lambda_poset();
  const VRep gamma = gamma_vertices(GammaKind::CC, p, p);
  const json j = vrep_to_json(gamma);
  CHECK(j["dim"] == 3);
  CHECK(j["vertices"].size() == 8);
  CHECK(vrep_from_json(j) == gamma);
  // serialized form is stable
  CHECK(vrep_to_json(vrep_from_json(j)).dump() == j.dump());
}

TEST_CASE("hrep json round trip") {
  const Poset p = lambda_poset();
  const HRep h = hull_facets(gamma_vertices(GammaKind::CC, p, p));
  const json j = hrep_to_json(h);
  CHECK(j["dim"] == 3);
  CHECK(j["facets"].size() == 12);
  CHECK(hrep_from_json(j) == h);
  CHECK(hrep_to_json(hrep_from_json(j)).dump() == j.dump());
}

TEST_CASE("json parse errors") {
  CHECK_THROWS_AS(vrep_from_json(json{{"vertices", json::array()}}),
                  ParseError);
  CHECK_THROWS_AS(vrep_from_json(json{{"dim", 2}}), ParseError);
  CHECK_THROWS_AS(
      vrep_from_json(json{{"dim", 2}, {"vertices", {{"1/2"}}}}),
      ParseError);  // wrong row length
  CHECK_THROWS_AS(
      vrep_from_json(json{{"dim", 1}, {"vertices", {{"nope"}}}}),
      ParseError);
  CHECK_THROWS_AS(hrep_from_json(json{{"dim", 1}}), ParseError);
  CHECK_THROWS_AS(
      hrep_from_json(json{{"dim", 1}, {"facets", {{{"normal", {1}}}}}}),
      ParseError);  // missing rhs
}

TEST_CASE("report json") {
  const Poset p = lambda_poset();
  const json j = report_to_json(analyze(GammaKind::CC, p, p));
  CHECK(j["volume"] == "2/1");
  CHECK(j["facet_count"] == 12);
  CHECK(j["reflexive"] == true);
  CHECK(j["centrally_symmetric"] == true);
  CHECK(j["kind"] == "cc");
  CHECK(!j.contains("common_linear_extension"));

  const json oo = report_to_json(analyze(GammaKind::OO, p, p));
  CHECK(oo["common_linear_extension"] == true);
}
