#include <doctest.h>

#include <random>

#include "relkit/binop.hpp"
#include "relkit/oracle.hpp"
#include "relkit/prodsum.hpp"
#include "support.hpp"

using namespace relkit;
using testing::members;

namespace {

BinOp sample_op(const std::string& file) { return *testing::sample(file).binop("A"); }

BinOp constant_op(std::size_t n) {
  const auto x = numbered("X", n);
  return BinOp::from_table(x, std::vector<std::vector<std::size_t>>(n, std::vector<std::size_t>(n, 0)));
}

BinOp chain(const Universe& x, const char* which) {
  std::vector<std::vector<std::size_t>> t(3, std::vector<std::size_t>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t[i][j] = std::string(which) == "min" ? std::min(i, j) : std::max(i, j);
  return BinOp::from_table(x, t);
}

}  // namespace

TEST_CASE("commutativity and associativity") {
  const auto a3 = sample_op("cyclic3.rel");
  CHECK(is_commutative(a3));
  CHECK(is_associative(a3));
  const auto k = constant_op(4);
  CHECK(is_commutative(k));
  CHECK(is_associative(k));
  const auto f4 = sample_op("binop_invariant.rel");
  CHECK_FALSE(is_commutative(f4));
  const auto& x = f4.carrier();
  CHECK(f4.apply(*x.index_of("a"), *x.index_of("b")) == *x.index_of("b"));
  CHECK(f4.apply(*x.index_of("b"), *x.index_of("a")) == *x.index_of("a"));
}

TEST_CASE("invertible elements") {
  const auto f3 = sample_op("binop_invertible.rel");
  CHECK(left_invertible_elements(f3) == members(f3.carrier(), {"b", "f"}));
  CHECK_FALSE(allows_left_inversion(f3));

  const auto a3 = sample_op("cyclic3.rel");
  const auto all = top(a3.carrier(), Universe::unit());
  CHECK(left_invertible_elements(a3) == all);
  CHECK(right_invertible_elements(a3) == all);
  CHECK(allows_left_inversion(a3));
  CHECK(allows_right_inversion(a3));

  const auto k = constant_op(3);
  CHECK(left_invertible_elements(k) == bottom(k.carrier(), Universe::unit()));
}

TEST_CASE("invariant elements") {
  const auto f4 = sample_op("binop_invariant.rel");
  const auto inv = invariant_elements(f4);
  CHECK(inv == oracle::invariant_elements(f4.table()));
  // a*b = b but b*a = a, so only c is invariant.
  CHECK(inv == members(f4.carrier(), {"c"}));

  const auto a3 = sample_op("cyclic3.rel");
  CHECK(invariant_elements(a3) == top(a3.carrier(), Universe::unit()));

  std::mt19937_64 rng(41);
  const auto x = numbered("X", 4);
  std::uniform_int_distribution<std::size_t> cell(0, 3);
  for (int i = 0; i < 50; ++i) {
    std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
    for (auto& row : t)
      for (auto& v : row) v = cell(rng);
    const auto op = BinOp::from_table(x, t);
    CHECK(invariant_elements(op) == oracle::invariant_elements(op.table()));
  }
}

TEST_CASE("neutral elements") {
  const auto f7 = sample_op("binop_right_neutral.rel");
  CHECK(right_neutrals(f7) == members(f7.carrier(), {"c", "e"}));
  CHECK(left_neutrals(f7) == bottom(f7.carrier(), Universe::unit()));

  const auto a3 = sample_op("cyclic3.rel");
  CHECK(neutrals(a3) == members(a3.carrier(), {"[1,2,3]"}));

  const auto k = constant_op(4);
  CHECK(right_neutrals(k) == bottom(k.carrier(), Universe::unit()));
}

TEST_CASE("right inverses") {
  const auto a3 = sample_op("cyclic3.rel");
  const auto& x = a3.carrier();
  const auto ir = right_inverse_map(a3, members(x, {"[1,2,3]"}));
  CHECK(is_bijective_mapping(ir));
  const auto at = [&](const char* l) { return x.label(ir.successors(*x.index_of(l)).at(0)); };
  CHECK(at("[1,2,3]") == "[1,2,3]");
  CHECK(at("[2,3,1]") == "[3,1,2]");
  CHECK(at("[3,1,2]") == "[2,3,1]");

  const auto f7 = sample_op("binop_right_neutral.rel");
  const auto ic = right_inverse_map(f7, members(f7.carrier(), {"c"}));
  CHECK_FALSE(is_bijective_mapping(ic));
  CHECK(ic(*f7.carrier().index_of("c"), *f7.carrier().index_of("c")));
}

TEST_CASE("section maps") {
  const auto one = Universe::atomic("X", {"a"});
  const auto w1 = product(one, one);
  const auto s1 = section_maps(point(one, 0), w1);
  CHECK(s1.f == top(one, w1.carrier));

  const auto x = numbered("X", 7);
  const auto w = product(x, x);
  const auto c = point(x, 2);
  const auto f = section_map(c, w);
  CHECK(is_mapping(f));
  for (std::size_t y = 0; y < 7; ++y) CHECK(f.successors(y) == std::vector<std::size_t>{2 * 7 + y});
  for (std::size_t i = 0; i < 7; ++i) CHECK(compose(section_map(point(x, i), w), w.rho) == identity(x));
}

TEST_CASE("distributivity") {
  const auto x = Universe::atomic("X", {"0", "1", "2"});
  CHECK(distributes_over(chain(x, "min"), chain(x, "max")));
  CHECK(distributes_over(chain(x, "max"), chain(x, "min")));
  const auto a3 = sample_op("cyclic3.rel");
  CHECK_FALSE(distributes_over(a3, a3));
}
