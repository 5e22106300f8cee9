#include "twinpoly/twinned.hpp"

#include <doctest.h>

#include "oracles.hpp"

using namespace twinpoly;
namespace tt = twinpoly::testing;

namespace {

Poset lambda_poset() { return Poset::from_relations(3, {{2, 1}, {3, 1}}); }

RationalVector point(std::initializer_list<int> coords) {
  RationalVector p(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (int c : coords) p[i++] = c;
  return p;
}

VRep make_vrep(int dim, std::initializer_list<std::initializer_list<int>> pts) {
  std::vector<RationalVector> vs;
  for (const auto& p : pts) vs.push_back(point(p));
  return VRep(dim, std::move(vs));
}

IntVector ivec(std::initializer_list<int> coords) {
  IntVector p(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (int c : coords) p[i++] = c;
  return p;
}

// the 12 dual vertices of the worked example
std::vector<IntVector> ex2_dual_vectors() {
  std::vector<IntVector> out;
  for (std::initializer_list<int> base :
       {std::initializer_list<int>{1, 1, 0}, {1, 0, 1}, {1, -1, 0},
        {1, 1, -1}, {1, -1, 1}, {1, 0, -1}}) {
    IntVector v = ivec(base);
    out.push_back(v);
    out.push_back(IntVector(-v));
  }
  return out;
}

}  // namespace

TEST_CASE("order polytope vertices") {
  CHECK(order_polytope_vertices(Poset::chain(2)) ==
        make_vrep(2, {{0, 0}, {1, 0}, {1, 1}}));
  CHECK(order_polytope_vertices(Poset::antichain(3)).vertices.size() == 8);
  CHECK(order_polytope_vertices(lambda_poset()).vertices.size() == 5);
}

TEST_CASE("chain polytope vertices") {
  CHECK(chain_polytope_vertices(Poset::chain(3)) ==
        make_vrep(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(chain_polytope_vertices(lambda_poset()) ==
        make_vrep(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}}));
  // vol C(Lambda) = e(Lambda)/3! = 2/6
  CHECK(hull_volume(chain_polytope_vertices(lambda_poset())) ==
        Rational(2, 6));
}

TEST_CASE("order and chain polytopes share the extension-count volume") {
  for (int d = 1; d <= 3; ++d)
    for (const Poset& p : enumerate_posets(d)) {
      Int fact = 1;
      for (int k = 2; k <= d; ++k) fact *= k;
      const Rational expected =
          Rational(count_linear_extensions(p)) / Rational(fact);
      CHECK(hull_volume(order_polytope_vertices(p)) == expected);
      CHECK(hull_volume(chain_polytope_vertices(p)) == expected);
    }
  // and at d = 5, where the enumeration no longer reaches
  std::mt19937 rng(31);
  for (int rep = 0; rep < 4; ++rep) {
    const Poset p = tt::random_poset(rng, 5, 40);
    const Rational expected =
        Rational(count_linear_extensions(p)) / Rational(120);
    CHECK(hull_volume(order_polytope_vertices(p)) == expected);
    CHECK(hull_volume(chain_polytope_vertices(p)) == expected);
  }
}

TEST_CASE("signed chain vertices") {
  const Poset p = lambda_poset(), q = lambda_poset();
  const std::uint32_t full = 7u;
  CHECK(signed_chain_vertices(delta(p, q, full)) == chain_polytope_vertices(p));

  const VRep minus = signed_chain_vertices(delta(p, q, 0));
  std::vector<RationalVector> negated;
  for (const auto& v : chain_polytope_vertices(q).vertices)
    negated.push_back(RationalVector(-v));
  CHECK(minus == VRep(3, std::move(negated)));

  // antichain (+) chain with W = {1,...,k}: 0/1 vectors on W plus -e_j
  const Poset a = Poset::antichain(4), c = Poset::chain(4);
  const VRep v = signed_chain_vertices(delta(a, c, 3u));
  CHECK(v.vertices.size() == 4 + 2);
  CHECK(v.contains(point({1, 1, 0, 0})));
  CHECK(v.contains(point({0, 0, -1, 0})));
  CHECK(v.contains(point({0, 0, 0, -1})));
  CHECK(!v.contains(point({0, 0, -1, -1})));
  CHECK(hull_volume(extreme_points(v)) == Rational(2, 24));  // k!/d!
}

TEST_CASE("gamma vertex sets") {
  const Poset p = lambda_poset();
  const VRep cc = gamma_vertices(GammaKind::CC, p, p);
  CHECK(cc.vertices.size() == 8);
  CHECK(!cc.contains(point({0, 0, 0})));
  // the CC generators are already extreme
  CHECK(extreme_points(cc) == cc);

  const Poset s1 = Poset::antichain(1);
  CHECK(gamma_vertices(GammaKind::CC, s1, s1) == make_vrep(1, {{-1}, {1}}));

  const Poset c2 = Poset::chain(2);
  CHECK(gamma_vertices(GammaKind::OO, c2, c2) ==
        make_vrep(2, {{-1, -1}, {-1, 0}, {1, 0}, {1, 1}}));

  CHECK_THROWS_AS(gamma_vertices(GammaKind::CC, p, Poset::chain(2)),
                  DomainError);
}

TEST_CASE("orthant extension counts of the worked example") {
  const Poset p = lambda_poset();
  const std::vector<Int> counts = orthant_extension_counts(p, p);
  REQUIRE(counts.size() == 8);
  int ones = 0, twos = 0;
  for (const Int& e : counts) {
    if (e == 1) ++ones;
    if (e == 2) ++twos;
  }
  CHECK(ones == 4);
  CHECK(twos == 4);
  // boundary orthants reduce to e(P) and e(Q)
  CHECK(counts[7] == count_linear_extensions(p));
  CHECK(counts[0] == count_linear_extensions(p));
}

TEST_CASE("volume formula") {
  const Poset p = lambda_poset();
  CHECK(volume_formula(p, p) == 2);

  const Poset s1 = Poset::antichain(1);
  CHECK(volume_formula(s1, s1) == 2);  // the segment [-1, 1]

  for (int d = 1; d <= 6; ++d) {
    Rational expect = 0;
    Int kfact = 1;
    for (int k = 0; k <= d; ++k) {
      if (k > 0) kfact *= k;
      expect += Rational(1) / Rational(kfact);
    }
    CHECK(volume_formula(Poset::antichain(d), Poset::chain(d)) == expect);
  }
}

TEST_CASE("facet normals of the worked example") {
  const Poset p = lambda_poset();
  const FacetNormalSet normals = facet_normals(p, p);
  REQUIRE(normals.size() == 12);
  for (const auto& v : ex2_dual_vectors()) CHECK(normals.contains(v));
}

TEST_CASE("facet count of the antichain/chain family") {
  for (int d = 1; d <= 5; ++d)
    CHECK(facet_normals(Poset::antichain(d), Poset::chain(d)).size() ==
          std::size_t(d) * (std::size_t(1) << (d - 1)) + 1);
}

TEST_CASE("chains repeating across orthants collapse to one facet") {
  const Poset a = Poset::antichain(3);
  const FacetNormalSet normals = facet_normals(a, a);
  const std::size_t multiset = maximal_chain_total(a, a);
  CHECK(normals.size() < multiset);
  CHECK(normals.size() == 12);
  CHECK(multiset == 18);
  // the chain {p1, q3} shows up for W={1} and W={1,2} with one normal
  CHECK(normals.contains(ivec({1, 0, -1})));
}

TEST_CASE("dual vertices") {
  const Poset p = lambda_poset();
  const VRep dual = dual_vertices(p, p);
  REQUIRE(dual.vertices.size() == 12);
  for (const auto& v : ex2_dual_vectors()) CHECK(dual.contains(to_rational(v)));

  const Poset s1 = Poset::antichain(1);
  CHECK(dual_vertices(s1, s1) == make_vrep(1, {{-1}, {1}}));

  // oracle agreement on random small pairs
  std::mt19937 rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    const int d = 2 + int(rng() % 2);
    const Poset x = tt::random_poset(rng, d, 40);
    const Poset y = tt::random_poset(rng, d, 40);
    CHECK(dual_vertices(x, y) ==
          polar_dual(hull_facets(gamma_vertices(GammaKind::CC, x, y))));
  }
}

TEST_CASE("region decomposition certificate on the worked example") {
  const Poset p = lambda_poset();
  const std::vector<bool> table = region_decomposition_table(p, p);
  REQUIRE(table.size() == 8);
  for (bool ok : table) CHECK(ok);
  CHECK(check_region_decomposition(p, p, 5u));
  CHECK_THROWS_AS(check_region_decomposition(p, p, 1u << 3), DomainError);
}

TEST_CASE("the region identity is specific to the chain-chain polytope") {
  const Poset c2 = Poset::chain(2);
  const VRep oo = gamma_vertices(GammaKind::OO, c2, c2);
  const VRep cut = restrict_to_orthant(oo, 1u);
  const VRep cprime = extreme_points(signed_chain_vertices(delta(c2, c2, 1u)));
  CHECK(!(cut == cprime));
}

TEST_CASE("no 3-element poset has exactly 7 antichains") {
  CHECK(no_poset_with_k_antichains(3, 7));
  CHECK(!no_poset_with_k_antichains(3, 5));
  CHECK(!no_poset_with_k_antichains(1, 2));
}

TEST_CASE("exhaustive oracle sweep at d <= 2") {
  for (int d = 1; d <= 2; ++d) {
    const std::vector<Poset> all = enumerate_posets(d);
    for (const Poset& p : all)
      for (const Poset& q : all) {
        const VRep gamma = gamma_vertices(GammaKind::CC, p, q);
        const HRep hull = hull_facets(gamma);
        CHECK(volume_formula(p, q) == hull_volume(gamma));
        const FacetNormalSet normals = facet_normals(p, q);
        CHECK(normals.size() == hull.rows.size());
        for (const auto& row : hull.rows) {
          CHECK(row.rhs == 1);
          CHECK(normals.contains(row.normal));
        }
        CHECK(dual_vertices(p, q) == polar_dual(hull));
        CHECK(is_reflexive(gamma, hull));
        for (bool ok : region_decomposition_table(p, q)) CHECK(ok);
      }
  }
}

TEST_CASE("order-polytope variants match the formula volume") {
  auto check_variants = [](const Poset& p, const Poset& q) {
    const Rational expect = volume_formula(p, q);
    const VRep oc = gamma_vertices(GammaKind::OC, p, q);
    CHECK(hull_volume(oc) == expect);
    CHECK(is_reflexive(oc));
    if (has_common_linear_extension(p, q)) {
      const VRep oo = gamma_vertices(GammaKind::OO, p, q);
      CHECK(hull_volume(oo) == expect);
      CHECK(is_reflexive(oo));
    }
  };
  // exhaustively at d = 2, sampled at d = 3 and 4
  for (const Poset& p : enumerate_posets(2))
    for (const Poset& q : enumerate_posets(2)) check_variants(p, q);
  std::mt19937 rng(17);
  for (int rep = 0; rep < 12; ++rep) {
    const int d = 3 + int(rng() % 2);
    check_variants(tt::random_poset(rng, d, 40), tt::random_poset(rng, d, 40));
  }
}

TEST_CASE("twins of one poset are centrally symmetric") {
  for (const Poset& p :
       {lambda_poset(), Poset::chain(3), Poset::antichain(3)})
    CHECK(is_centrally_symmetric(gamma_vertices(GammaKind::CC, p, p)));
}

TEST_CASE("analyze builds the report") {
  const Poset p = lambda_poset();
  const PolytopeReport report = analyze(GammaKind::CC, p, p);
  CHECK(report.volume == 2);
  CHECK(report.facet_count == 12);
  CHECK(report.reflexive);
  CHECK(report.centrally_symmetric);
  CHECK(!report.common_linear_extension.has_value());

  const PolytopeReport oo = analyze(GammaKind::OO, p, p);
  CHECK(oo.common_linear_extension.has_value());
  CHECK(*oo.common_linear_extension);
  CHECK(oo.volume == 2);
  CHECK(oo.reflexive);
}

TEST_CASE("gamma kind strings") {
  CHECK(gamma_kind_from_string("cc") == GammaKind::CC);
  CHECK(gamma_kind_from_string("oo") == GammaKind::OO);
  CHECK(to_string(GammaKind::OC) == "oc");
  CHECK_THROWS_AS(gamma_kind_from_string("xx"), ParseError);
}
