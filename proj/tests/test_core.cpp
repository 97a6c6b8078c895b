#include <doctest.h>

#include <random>

#include "relkit/finset.hpp"
#include "relkit/oracle.hpp"
#include "relkit/relation.hpp"
#include "support.hpp"

using namespace relkit;

TEST_CASE("universes") {
  CHECK(Universe::atomic("X", {"a", "b", "c"}).size() == 3);
  CHECK(Universe::atomic("E", {}).size() == 0);
  CHECK_THROWS_AS(Universe::atomic("X", {"a", "a"}), Error);

  const auto ab = Universe::atomic("X", {"a", "b"});
  CHECK(Universe::power(ab).label(3) == "{a,b}");
  CHECK(Universe::power(ab).label(0) == "{}");
  const auto x = numbered("X", 2, "x"), y = numbered("Y", 3, "y");
  CHECK(Universe::pair(x, y).label(0) == "(x0,y0)");
  CHECK(Universe::pair(x, y).label(1) == "(x0,y1)");
  const auto a = Universe::atomic("A", {"a"});
  CHECK(Universe::sum(a, a).label(0) == "a<");
  CHECK(Universe::sum(a, a).label(1) == ">a");
  CHECK(Universe::unit().label(0) == "*");

  CHECK(power_index(std::vector<std::size_t>{}) == 0);
  CHECK(power_index({0}) == 1);
  CHECK(power_index({1, 3}) == 10);
  CHECK(power_members(10) == std::vector<std::size_t>{1, 3});
}

TEST_CASE("atomic universes compare by identity, compound ones by structure") {
  const auto x = Universe::atomic("X", {"a"});
  const auto x2 = Universe::atomic("X", {"a"});
  CHECK(x == x);
  CHECK(x != x2);
  CHECK(Universe::pair(x, x) == Universe::pair(x, x));
  CHECK(Universe::pair(x, x) != Universe::pair(x, x2));
  CHECK(Universe::power(x) == Universe::power(x));
}

TEST_CASE("constants") {
  const auto ab = Universe::atomic("X", {"a", "b"});
  const auto id = identity(ab);
  CHECK(id(0, 0));
  CHECK_FALSE(id(0, 1));
  CHECK_FALSE(id(1, 0));
  CHECK(id(1, 1));
  const auto t = top(Universe::atomic("A", {"a"}), Universe::atomic("B", {"x", "y"}));
  CHECK(t.count() == 2);
  const auto e = Universe::atomic("E", {});
  const auto b = bottom(e, ab);
  CHECK(b.rows() == 0);
  CHECK(b.cols() == 2);
}

TEST_CASE("boolean operations and composition") {
  std::mt19937_64 rng(7);
  const auto x = numbered("X", 5), y = numbered("Y", 4, "y"), z = numbered("Z", 3, "z");
  const auto r = testing::random_relation(x, y, rng);
  const auto s = testing::random_relation(y, z, rng);
  CHECK(negate(negate(r)) == r);
  CHECK(unite(r, negate(r)) == top(x, y));
  CHECK(intersect(r, negate(r)) == bottom(x, y));
  CHECK(compose(identity(x), r) == r);
  CHECK(converse(compose(r, s)) == compose(converse(s), converse(r)));
  CHECK(compose(r, s) == oracle::compose(r, s));
  CHECK_THROWS_AS(compose(r, r), Error);
}

TEST_CASE("residuals") {
  std::mt19937_64 rng(11);
  const auto x = numbered("X", 4), y = numbered("Y", 3, "y"), z = numbered("Z", 5, "z");
  const auto a = testing::random_relation(x, y, rng);
  const auto c = testing::random_relation(x, z, rng);
  const auto b = testing::random_relation(y, z, rng);
  CHECK(right_residual(a, c) == oracle::right_residual(a, c));
  CHECK(left_residual(c, b) == oracle::left_residual(c, b));
  CHECK(left_residual(top(x, z), b) == top(x, y));

  const auto rr = right_residual(a, a);
  CHECK(is_reflexive(rr));
  CHECK(is_transitive(rr));

  for (int i = 0; i < 500; ++i) {
    const auto xx = testing::random_relation(y, z, rng);
    const auto aa = testing::random_relation(x, y, rng);
    const auto cc = testing::random_relation(x, z, rng);
    CHECK(includes(compose(aa, xx), cc) == includes(xx, right_residual(aa, cc)));
  }
}

TEST_CASE("symmetric quotient") {
  std::mt19937_64 rng(13);
  const auto x = numbered("X", 5), y = numbered("Y", 13, "y"), z = numbered("Z", 12, "z");
  const auto r = testing::random_relation(x, y, rng);
  const auto s = testing::random_relation(x, z, rng);
  CHECK(syq(r, s) == oracle::syq(r, s));
  CHECK(includes(identity(y), syq(r, r)));

  const auto u = numbered("U", 2, "u");
  const auto cols = Universe::atomic("C", {"p", "q"});
  const auto left = from_rows(u, cols, {{0, 1}, {1}});
  const auto right = from_rows(u, cols, {{}, {0}});
  CHECK(syq(left, right) == bottom(cols, cols));
  CHECK_THROWS_AS(syq(r, testing::random_relation(y, z, rng)), Error);
}

TEST_CASE("properties") {
  const auto x = numbered("X", 3);
  const auto id = identity(x);
  CHECK(is_univalent(id));
  CHECK(is_total(id));
  CHECK(is_injective(id));
  CHECK(is_surjective(id));
  CHECK(is_point(point(x, 1)));
  CHECK_FALSE(is_point(top(x, Universe::unit())));
  CHECK(point_index(point(x, 2)) == 2);
}
