#include <doctest.h>

#include <random>

#include "relkit/oracle.hpp"
#include "relkit/prodsum.hpp"
#include "support.hpp"

using namespace relkit;

TEST_CASE("kronecker, fork and join") {
  const auto x = numbered("X", 2), y = numbered("Y", 2, "y");
  CHECK(kron(identity(x), identity(y)) == identity(Universe::pair(x, y)));

  const auto z = numbered("Z", 3, "z");
  const auto f = from_rows(z, x, {{0}, {1}, {1}});
  const auto g = from_rows(z, y, {{1}, {1}, {0}});
  const auto fg = fork(f, g);
  CHECK(is_mapping(fg));
  CHECK(compose(fg, product(x, y).pi) == f);
  CHECK(compose(fg, product(x, y).rho) == g);

  std::mt19937_64 rng(17);
  const auto a = testing::random_relation(x, y, rng);
  const auto b = testing::random_relation(y, x, rng);
  CHECK(kron(a, b) == oracle::kron(a, b));
}

TEST_CASE("swap") {
  const auto x = numbered("X", 3), y = numbered("Y", 2, "y");
  const auto p = swap(x, x);
  CHECK(compose(p, p) == identity(Universe::pair(x, x)));
  CHECK(converse(swap(x, y)) == swap(y, x));

  std::mt19937_64 rng(19);
  const auto u = numbered("U", 2, "u");
  const auto r = testing::random_relation(x, u, rng);
  const auto s = testing::random_relation(y, u, rng);
  CHECK(compose(swap(y, x), join(r, s)) == join(s, r));
  const auto v = numbered("V", 3, "v");
  const auto k = testing::random_relation(y, v, rng);
  CHECK(compose(swap(x, y), kron(k, r)) == compose(kron(r, k), swap(u, v)));
}

TEST_CASE("associator") {
  const auto x = numbered("X", 2), y = numbered("Y", 3, "y"), z = numbered("Z", 2, "z");
  const auto t = assoc(x, y, z);
  CHECK(compose(t, converse(t)) == identity(t.src()));
  CHECK(compose(converse(t), t) == identity(t.tgt()));
  const auto outer = product(Universe::pair(x, y), z);
  const auto inner = product(x, y);
  const auto right = product(x, Universe::pair(y, z));
  CHECK(compose(t, right.pi) == compose(outer.pi, inner.pi));

  std::mt19937_64 rng(23);
  const auto a = numbered("A", 3, "a");
  std::uniform_int_distribution<std::size_t> pick(0, 1), pick3(0, 2);
  const auto q = from_rows(a, x, {{pick(rng)}, {pick(rng)}, {pick(rng)}});
  const auto r = from_rows(a, y, {{pick3(rng)}, {pick3(rng)}, {pick3(rng)}});
  const auto s = from_rows(a, z, {{pick(rng)}, {pick(rng)}, {pick(rng)}});
  CHECK(fork(q, fork(r, s)) == compose(fork(fork(q, r), s), t));
}

TEST_CASE("vectorisation") {
  const auto x = numbered("X", 3), y = numbered("Y", 2, "y");
  const auto xy = Universe::pair(x, y);
  CHECK(vec(bottom(x, y)) == bottom(xy, Universe::unit()));
  CHECK(vec(top(x, y)) == top(xy, Universe::unit()));
  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    const auto r = testing::random_relation(x, y, rng);
    CHECK(unvec(vec(r)) == r);
    CHECK(vec(converse(r)) == compose(swap(y, x), vec(r)));
  }
}

TEST_CASE("relations as points") {
  const auto x = Universe::atomic("X", {"a", "b"});
  const auto ip = identity_point(x);
  CHECK(is_point(ip));
  CHECK(decode(ip) == identity(x));
  CHECK(decode(bot_point(x, x)) == bottom(x, x));
  CHECK(decode(top_point(x, x)) == top(x, x));

  std::mt19937_64 rng(31);
  const auto tt = transposition_point_map(x, x);
  for (int i = 0; i < 20; ++i) {
    const auto r = testing::random_relation(x, x, rng);
    CHECK(decode(relation_point(r)) == r);
    CHECK(compose(converse(tt), relation_point(r)) == relation_point(converse(r)));
  }
}

TEST_CASE("addition theorem") {
  const auto x = numbered("X", 1), y = numbered("Y", 1, "y"), u = numbered("U", 1, "u"), v = numbered("V", 1, "v");
  const auto xy = Universe::sum(x, y);
  CHECK(addition_theorem_check(bottom(x, u), bottom(y, v), bottom(xy, Universe::unit())));

  std::mt19937_64 rng(37);
  std::uniform_int_distribution<std::size_t> size(0, 3);
  for (int i = 0; i < 1000; ++i) {
    const auto a = numbered("A", size(rng), "a"), b = numbered("B", size(rng), "b");
    const auto p = numbered("P", size(rng), "p"), q = numbered("Q", size(rng), "q"), z = numbered("Z", size(rng), "z");
    const auto qq = testing::random_relation(a, p, rng);
    const auto rr = testing::random_relation(b, q, rng);
    const auto ss = testing::random_relation(Universe::sum(a, b), z, rng);
    REQUIRE(addition_theorem_check(qq, rr, ss));
  }
  const auto a = numbered("A", 2, "a"), b = numbered("B", 2, "b");
  const auto p = numbered("P", 2, "p"), q = numbered("Q", 2, "q"), z = numbered("Z", 3, "z");
  for (int i = 0; i < 50; ++i)
    CHECK(addition_theorem_check(testing::random_relation(a, p, rng), testing::random_relation(b, q, rng),
                                 testing::random_relation(Universe::sum(a, b), z, rng)));
}

TEST_CASE("sums of powersets") {
  const auto a = Universe::atomic("A", {"a"}), b = Universe::atomic("B", {"b"});
  const auto s = sum_power_iso(a, b);
  CHECK(s.phi.rows() == 4);
  CHECK(is_bijective_mapping(s.phi));

  const auto x = Universe::atomic("X", {"a", "b"});
  const auto t = sum_power_iso(x, x);
  REQUIRE(is_bijective_mapping(t.phi));
  const auto src = t.phi.src();
  const auto from = src.index_of("{a<,>a}");
  REQUIRE(from.has_value());
  CHECK(t.phi.tgt().label(t.phi.successors(*from).at(0)) == "({a},{a})");
  CHECK(compose(t.msum.omega, t.phi) == compose(t.phi, t.omega_plus));
}
