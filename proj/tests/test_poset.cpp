#include "twinpoly/poset.hpp"

#include <doctest.h>

#include "oracles.hpp"

using namespace twinpoly;
namespace tt = twinpoly::testing;

namespace {

std::uint32_t mask_of(std::initializer_list<int> labels) {
  std::uint32_t m = 0;
  for (int l : labels) m |= 1u << (l - 1);
  return m;
}

// the 3-element poset with p2 < p1 and p3 < p1
Poset lambda_poset() { return Poset::from_relations(3, {{2, 1}, {3, 1}}); }

}  // namespace

TEST_CASE("poset file parsing") {
  const Poset p = parse_poset("d 3\nrel 2 1\nrel 3 1\n");
  CHECK(p.size() == 3);
  CHECK(p.less(2, 1));
  CHECK(p.less(3, 1));
  CHECK(!p.less(1, 2));
  CHECK(!p.less(2, 3));
  CHECK(p.relation_size() == 2);

  const Poset single = parse_poset("d 1\n");
  CHECK(single.size() == 1);
  CHECK(single.relation_size() == 0);

  // closure adds the (1,3) pair of the declared path
  const Poset chain = parse_poset("d 3\nrel 1 2\nrel 2 3\n");
  CHECK(chain.less(1, 3));
  CHECK(chain.relation_size() == 3);
  CHECK(chain == Poset::chain(3));

  // comments, blank lines, redundant relations
  const Poset again =
      parse_poset("# a poset\n\nd 3\nrel 1 2\nrel 2 3\nrel 1 3\n");
  CHECK(again == chain);
}

TEST_CASE("poset parse errors name the offending line") {
  CHECK_THROWS_WITH_AS(parse_poset("d 2\nrel 1 2\nrel 2 1\n"),
                       doctest::Contains("not a partial order"), ParseError);
  CHECK_THROWS_WITH_AS(parse_poset("d 2\nrel 1 2\nrel 2 1\n"),
                       doctest::Contains("line 3"), ParseError);
  CHECK_THROWS_WITH_AS(parse_poset("d 2\nrel 1 3\n"),
                       doctest::Contains("out of range"), ParseError);
  CHECK_THROWS_WITH_AS(parse_poset("d 2\nd 2\n"),
                       doctest::Contains("duplicate d"), ParseError);
  CHECK_THROWS_AS(parse_poset("rel 1 2\nd 2\n"), ParseError);
  CHECK_THROWS_AS(parse_poset(""), ParseError);
  CHECK_THROWS_AS(parse_poset("d 0\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("d 2\nfoo 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("d 2\nrel 1\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("d 21\n"), CapacityError);
  // a self-relation is a 1-cycle
  CHECK_THROWS_WITH_AS(parse_poset("d 2\nrel 1 1\n"),
                       doctest::Contains("not a partial order"), ParseError);
}

TEST_CASE("poset round trip through the file format") {
  const Poset p = lambda_poset();
  CHECK(parse_poset(poset_to_string(p)) == p);
  const Poset c = Poset::chain(4);
  CHECK(parse_poset(poset_to_string(c)) == c);
}

TEST_CASE("ideals") {
  const SubsetList chain2 = ideals(Poset::chain(2));
  CHECK(chain2.members == std::vector<std::uint32_t>{0, mask_of({1}),
                                                     mask_of({1, 2})});
  CHECK(ideals(Poset::antichain(3)).size() == 8);

  const SubsetList lam = ideals(lambda_poset());
  const std::vector<std::uint32_t> expected{
      0, mask_of({1, 2, 3}), mask_of({2}), mask_of({2, 3}), mask_of({3})};
  CHECK(lam.members == expected);
  CHECK(lam.members ==
        tt::filter_subsets(lambda_poset(), tt::downward_closed).members);
}

TEST_CASE("antichains") {
  const SubsetList lam = antichains(lambda_poset());
  const std::vector<std::uint32_t> expected{
      0, mask_of({1}), mask_of({2}), mask_of({2, 3}), mask_of({3})};
  CHECK(lam.members == expected);
  CHECK(lam.members ==
        tt::filter_subsets(lambda_poset(), tt::pairwise_incomparable).members);
  CHECK(lam.contains(mask_of({2, 3})));
  CHECK(!lam.contains(mask_of({1, 2})));

  CHECK(antichains(Poset::chain(5)).size() == 6);  // empty set + singletons
}

TEST_CASE("ideal count equals antichain count (maximal-element bijection)") {
  for (int d = 1; d <= 4; ++d)
    for (const Poset& p : enumerate_posets(d))
      CHECK(ideals(p).size() == antichains(p).size());
}

TEST_CASE("maximal chains") {
  const SubsetList lam = maximal_chains(lambda_poset());
  CHECK(lam.members ==
        std::vector<std::uint32_t>{mask_of({1, 2}), mask_of({1, 3})});
  CHECK(maximal_chains(Poset::chain(4)).members ==
        std::vector<std::uint32_t>{mask_of({1, 2, 3, 4})});
  CHECK(maximal_chains(Poset::antichain(3)).size() == 3);
  // every maximal chain is a chain and cannot be extended
  for (const Poset& p : enumerate_posets(3)) {
    const SubsetList chains = maximal_chains(p);
    CHECK(chains.size() >= 1);
    for (std::uint32_t c : chains.members) {
      for (int extra = 1; extra <= 3; ++extra) {
        if (c >> (extra - 1) & 1u) continue;
        bool comparable_to_all = true;
        for (int l : subset_labels(c))
          if (!p.less(extra, l) && !p.less(l, extra))
            comparable_to_all = false;
        CHECK(!comparable_to_all);
      }
    }
  }
}

TEST_CASE("linear extension counts") {
  CHECK(count_linear_extensions(Poset::chain(6)) == 1);
  CHECK(count_linear_extensions(Poset::antichain(6)) == 720);
  CHECK(count_linear_extensions(lambda_poset()) == 2);

  // against the permutation oracle: exhaustively for d <= 3
  for (int d = 1; d <= 3; ++d)
    for (const Poset& p : enumerate_posets(d))
      CHECK(count_linear_extensions(p) == tt::permutation_extension_count(p));

  // and on random posets up to d = 8
  std::mt19937 rng(7);
  for (int d : {6, 7, 8}) {
    for (int rep = 0; rep < 3; ++rep) {
      const Poset p = tt::random_poset(rng, d, 35);
      CHECK(count_linear_extensions(p) == tt::permutation_extension_count(p));
    }
  }
}

TEST_CASE("induced subposets keep their labels") {
  const Poset lam = lambda_poset();
  const Poset sub = induced_subposet(lam, mask_of({2, 3}));
  CHECK(sub.size() == 2);
  CHECK(sub.labels() == std::vector<int>{2, 3});
  CHECK(!sub.less(2, 3));
  CHECK(!sub.less(3, 2));

  CHECK(induced_subposet(lam, mask_of({1, 2, 3})) == lam);
  CHECK(induced_subposet(lam, 0).size() == 0);
  CHECK_THROWS_AS(induced_subposet(lam, mask_of({4})), DomainError);

  const Poset keep = induced_subposet(lam, mask_of({2, 1}));
  CHECK(keep.less(2, 1));
}

TEST_CASE("delta builds the signed ordinal sum") {
  const Poset p = lambda_poset(), q = lambda_poset();

  const SignedPoset full = delta(p, q, mask_of({1, 2, 3}));
  CHECK(full.poset == p);
  CHECK(full.plus_mask == mask_of({1, 2, 3}));
  full.validate();

  const SignedPoset empty = delta(p, q, 0);
  CHECK(empty.poset == q);
  CHECK(empty.sign(1) == -1);

  // W = {1,2}: the chain p2 < p1 < q3
  const SignedPoset mid = delta(p, q, mask_of({1, 2}));
  mid.validate();
  CHECK(mid.poset.less(2, 1));
  CHECK(mid.poset.less(1, 3));
  CHECK(mid.poset.less(2, 3));
  CHECK(mid.poset.relation_size() == 3);
  CHECK(mid.sign(1) == 1);
  CHECK(mid.sign(3) == -1);

  CHECK_THROWS_AS(delta(p, Poset::chain(2), 0), DomainError);
  CHECK_THROWS_AS(delta(p, q, 1u << 3), DomainError);
}

TEST_CASE("antichains of delta split along the orthant") {
  std::mt19937 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    const int d = 1 + int(rng() % 4);
    const Poset p = tt::random_poset(rng, d, 40);
    const Poset q = tt::random_poset(rng, d, 40);
    const std::uint32_t w = rng() & ((1u << d) - 1);
    const SignedPoset sp = delta(p, q, w);
    sp.validate();

    SubsetList expected;
    for (std::uint32_t a : antichains(induced_subposet(p, w)).members)
      expected.members.push_back(a);
    const std::uint32_t cw = ~w & ((1u << d) - 1);
    for (std::uint32_t a : antichains(induced_subposet(q, cw)).members)
      expected.members.push_back(a);
    expected.sort_and_dedup();
    CHECK(antichains(sp.poset).members == expected.members);
  }
}

TEST_CASE("signed extension counts") {
  const Poset p = lambda_poset(), q = lambda_poset();
  CHECK(count_linear_extensions_signed(delta(p, q, mask_of({1, 2, 3}))) == 2);
  CHECK(count_linear_extensions_signed(delta(p, q, mask_of({1, 2}))) == 1);

  // antichain (+) chain: e(Delta_W) = |W|! for W a prefix set
  const Poset a = Poset::antichain(4), c = Poset::chain(4);
  CHECK(count_linear_extensions_signed(delta(a, c, mask_of({1, 2, 3}))) == 6);
  CHECK(count_linear_extensions_signed(delta(a, c, mask_of({1, 2}))) == 2);
}

TEST_CASE("common linear extensions") {
  const Poset p = lambda_poset();
  CHECK(has_common_linear_extension(p, p));
  CHECK(has_common_linear_extension(lambda_poset(), lambda_poset()));

  const Poset up = Poset::from_relations(2, {{1, 2}});
  const Poset down = Poset::from_relations(2, {{2, 1}});
  CHECK(!has_common_linear_extension(up, down));
  CHECK_THROWS_AS(has_common_linear_extension(p, up), DomainError);
}

TEST_CASE("labeled poset enumeration") {
  CHECK(enumerate_posets(1).size() == 1);
  CHECK(enumerate_posets(2).size() == 3);
  CHECK(enumerate_posets(3).size() == 19);
  CHECK(enumerate_posets(4).size() == 219);
  CHECK_THROWS_AS(enumerate_posets(5), CapacityError);

  // all distinct and deterministic
  const auto a = enumerate_posets(3);
  const auto b = enumerate_posets(3);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
    for (std::size_t j = i + 1; j < a.size(); ++j) CHECK(!(a[i] == a[j]));
  }
}

TEST_CASE("orthant extension sum is invariant under relabeling") {
  std::mt19937 rng(23);
  for (int rep = 0; rep < 6; ++rep) {
    const int d = 2 + int(rng() % 3);
    const Poset p = tt::random_poset(rng, d, 35);
    const Poset q = tt::random_poset(rng, d, 35);
    std::vector<int> perm(d);
    for (int i = 0; i < d; ++i) perm[i] = i + 1;
    std::shuffle(perm.begin(), perm.end(), rng);

    auto total = [](const Poset& x, const Poset& y) {
      Int sum = 0;
      for (std::uint32_t w = 0; w < (1u << x.size()); ++w)
        sum += count_linear_extensions_signed(delta(x, y, w));
      return sum;
    };
    CHECK(total(p, q) == total(relabeled(p, perm), relabeled(q, perm)));
  }
}

TEST_CASE("capacity bounds") {
  CHECK_THROWS_AS(Poset(21), CapacityError);
  CHECK_THROWS_AS(Poset::chain(25), CapacityError);
}

TEST_CASE("subset ordering is lexicographic on label sequences") {
  CHECK(subset_lex_less(0, mask_of({1})));
  CHECK(subset_lex_less(mask_of({1}), mask_of({1, 2})));
  CHECK(subset_lex_less(mask_of({1, 2}), mask_of({1, 3})));
  CHECK(subset_lex_less(mask_of({1, 3}), mask_of({2})));
  CHECK(!subset_lex_less(mask_of({2}), mask_of({1, 3})));
  CHECK(subset_to_string(mask_of({1, 3})) == "{1,3}");
  CHECK(subset_to_string(0) == "{}");
}
