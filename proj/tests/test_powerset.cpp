#include <doctest.h>

#include <random>

#include "relkit/images.hpp"
#include "relkit/oracle.hpp"
#include "relkit/powerset.hpp"
#include "support.hpp"

using namespace relkit;

TEST_CASE("membership on four elements") {
  const auto doc = testing::sample("power4.rel");
  const auto& x = *doc.universe("X");
  const auto b = membership(x);
  REQUIRE(b.epsilon.rows() == 4);
  REQUIRE(b.epsilon.cols() == 16);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t s = 0; s < 16; ++s) CHECK(b.epsilon(i, s) == bool(s >> i & 1));
  CHECK(b.epsilon == oracle::membership(x));

  CHECK(is_mapping(b.sigma));
  CHECK_FALSE(is_surjective(b.sigma));
  for (std::size_t i = 0; i < 4; ++i) CHECK(b.sigma.successors(i) == std::vector<std::size_t>{std::size_t{1} << i});

  const auto av = atoms_vector(b);
  CHECK(av == vector_of(b.power, {1, 2, 4, 8}));
}

TEST_CASE("membership on the empty base") {
  const auto b = membership(Universe::atomic("E", {}));
  CHECK(b.epsilon.rows() == 0);
  CHECK(b.epsilon.cols() == 1);
  CHECK(b.omega == identity(b.power));
  CHECK(atoms(b) == bottom(b.power, b.power));
}

TEST_CASE("atoms on three elements") {
  const auto b = membership(numbered("X", 3));
  const auto at = atoms(b);
  for (std::size_t s = 0; s < 8; ++s) CHECK(at(s, s) == (s == 1 || s == 2 || s == 4));
  CHECK(at.count() == 3);
}

TEST_CASE("least upper bound") {
  const auto x = Universe::atomic("X", {"a", "b"});
  const auto b = membership(x);
  const auto col = vector_of(b.power, {1, 2});
  CHECK(lub(b, col) == point(b.power, 3));
  CHECK(lub(b, bottom(b.power, Universe::unit())) == point(b.power, 0));

  std::mt19937_64 rng(3);
  const auto b3 = membership(numbered("X", 3));
  const auto y = numbered("Y", 4, "y");
  const auto s = testing::random_relation(b3.power, y, rng);
  CHECK(lub(b3, s) == oracle::lub(s));
  CHECK(glb(b3, s) == oracle::glb(s));
}

TEST_CASE("quotient of the membership") {
  const auto x = Universe::atomic("X", {"a", "b", "c"});
  const auto id = quotient_membership(identity(x));
  CHECK(is_bijective_mapping(id.xi));
  CHECK(id.xi.raw() == identity(x).raw());
  CHECK(id.epsilon_xi.raw() == id.membership.epsilon.raw());
  CHECK(verify(id).empty());

  const auto ab = Universe::atomic("Y", {"a", "b"});
  const auto all = quotient_membership(top(ab, ab));
  CHECK(all.quotient_universe.size() == 1);
  CHECK(all.epsilon_xi.rows() == 1);
  CHECK(all.epsilon_xi.cols() == 2);
  CHECK(is_membership(all.epsilon_xi));

  const auto classes = from_rows(x, x, {{0, 1}, {0, 1}, {2}});
  const auto q = quotient_membership(classes);
  CHECK(verify(q).empty());
  const auto& e = q.membership.epsilon;
  CHECK(compose(e, q.Q) == compose(classes, e));
  CHECK_THROWS_AS(quotient_membership(from_rows(x, x, {{0, 1}, {1}, {2}})), Error);
}

TEST_CASE("existential and inverse image") {
  const auto doc = testing::sample("image5x4.rel");
  const auto& r = *doc.relation("R");
  const auto th = existential_image(r);
  CHECK(is_mapping(th));
  CHECK(th == oracle::exim(r));
  CHECK(th.successors(0) == std::vector<std::size_t>{0});
  const auto& py = th.tgt();
  CHECK(py.label(th.successors(1).at(0)) == "{b,d}");
  CHECK(py.label(th.successors(power_index({0, 4})).at(0)) == "{a,b,c,d}");

  const auto back = inverse_image(r);
  CHECK(back == existential_image(converse(r)));
  CHECK(back == oracle::imim(r));
  CHECK(th.src().label(back.successors(1).at(0)) == "{2,5}");

  const auto x = r.src();
  CHECK(existential_image(identity(x)) == identity(Universe::power(x)));
  CHECK(inverse_image(identity(x)) == identity(Universe::power(x)));
}

TEST_CASE("power relator") {
  const auto x = numbered("X", 3), y = numbered("Y", 3, "y");
  const auto f = from_rows(x, y, {{1}, {2}, {0}});
  CHECK(power_relator(f) == existential_image(f));

  const auto z = power_relator(bottom(x, y));
  CHECK(z.count() == 1);
  CHECK(z(0, 0));

  std::mt19937_64 rng(5);
  const auto r = testing::random_relation(x, y, rng);
  CHECK(power_relator(r) == oracle::power_relator(r));
}
