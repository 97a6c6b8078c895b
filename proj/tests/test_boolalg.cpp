#include <doctest.h>

#include <random>

#include "relkit/boolalg.hpp"
#include "relkit/oracle.hpp"
#include "support.hpp"

using namespace relkit;

TEST_CASE("negation is the antidiagonal") {
  const auto a = lifted(Universe::atomic("X", {"a", "b", "c", "d"}));
  for (std::size_t s = 0; s < 16; ++s) CHECK(a.N.successors(s) == std::vector<std::size_t>{15 - s});
  CHECK(compose(a.omega(), a.N) == negate(compose(converse(a.epsilon()), a.epsilon())));
}

TEST_CASE("the empty base") {
  const auto a = lifted(Universe::atomic("E", {}));
  CHECK(a.power().size() == 1);
  CHECK(a.N == identity(a.power()));
  CHECK(a.meet == a.join);
  CHECK(is_mapping(a.meet));
}

TEST_CASE("meet and join tables") {
  const auto doc = testing::sample("lifted2.rel");
  const auto a = lifted(*doc.universe("X"));
  const auto& pp = a.pp.carrier;
  const auto row = *pp.index_of("({a},{b})");
  CHECK(a.power().label(a.join.successors(row).at(0)) == "{a,b}");
  CHECK(a.power().label(a.meet.successors(row).at(0)) == "{}");
  CHECK(a.join == oracle::subset_join(a.base));
  CHECK(a.meet == oracle::subset_meet(a.base));
  CHECK(three_way_agreement(a));
  CHECK(distributes_over(join_op(a), meet_op(a)));

  const auto b3 = lifted(numbered("X", 3));
  CHECK(b3.meet.rows() == 64);
  CHECK(b3.meet.cols() == 8);
  CHECK(is_surjective(b3.meet));
}

TEST_CASE("subsets and points") {
  const auto x = Universe::atomic("X", {"a", "b", "c", "d"});
  const auto a = lifted(x);
  const auto u = testing::members(x, {"a", "d"});
  const auto e = subset_of_point(a.bundle, u);
  CHECK(point_index(e) == 9);
  CHECK(point_to_subset(a.bundle, e) == u);
  CHECK(subset_of_point(a.bundle, bottom(x, Universe::unit())) == a.bot_pt);

  std::mt19937_64 rng(43);
  for (int i = 0; i < 100; ++i) {
    const auto v = testing::random_relation(x, Universe::unit(), rng);
    CHECK(point_to_subset(a.bundle, subset_of_point(a.bundle, v)) == v);
  }
}
