#include <doctest.h>

#include <json.hpp>
#include <set>

#include "relkit/laws.hpp"
#include "relkit/relation.hpp"

using namespace relkit;
using namespace relkit::laws;

TEST_CASE("catalog") {
  const auto& all = catalog();
  std::set<std::string> names;
  for (const auto& l : all) {
    CHECK(names.insert(l.name).second);
    CHECK_FALSE(l.anchor.empty());
  }
  std::size_t total = 0;
  for (const auto& s : suite_names()) {
    const auto part = suite(s);
    CHECK_FALSE(part.empty());
    total += part.size();
  }
  CHECK(total == all.size());
  CHECK(suite("all").size() == all.size());
  CHECK_THROWS(suite("nosuch"));
}

TEST_CASE("a broken compose is caught with a counterexample") {
  const Law broken = compose_oracle_law([](const Relation& a, const Relation& b) {
    auto r = compose(a, b);
    if (r.rows() > 0 && r.cols() > 1) return unite(r, point(r.src(), 0) * top(Universe::unit(), r.tgt()));
    return r;
  });
  Pool pool;
  Options opt;
  opt.random_instances = 50;
  const auto rep = run_law(broken, pool, opt);
  CHECK_FALSE(rep.pass);
  CHECK(rep.failure.find("R * S") != std::string::npos);
  CHECK(rep.counterexample.find("relation R") != std::string::npos);
  CHECK(rep.counterexample.find("relation lhs") != std::string::npos);

  const Law fine = compose_oracle_law([](const Relation& a, const Relation& b) { return compose(a, b); });
  CHECK(run_law(fine, pool, opt).pass);
}

TEST_CASE("reports are deterministic and serialize as JSON") {
  Options opt;
  opt.seed = 42;
  opt.random_instances = 40;
  const auto a = to_json(run_suite("binop", opt));
  const auto b = to_json(run_suite("binop", opt));
  CHECK(a == b);
  const auto j = nlohmann::json::parse(a);
  REQUIRE(j.is_array());
  CHECK(j.size() == suite("binop").size());
  CHECK(j[0]["seed"] == 42);
  CHECK(j[0]["pass"] == true);
  CHECK(j[0].contains("anchor"));
  CHECK(j[0]["counterexample"].is_null());

  opt.seed = 43;
  CHECK(to_json(run_suite("binop", opt)) != a);
}

TEST_CASE("size limits") {
  Options opt;
  opt.max_size = 1;
  opt.random_instances = 20;
  for (const auto& r : run_suite("core", opt)) CHECK(r.pass);
}
