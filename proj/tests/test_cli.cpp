#include <doctest.h>

#include <random>

#include "relkit/eval.hpp"
#include "relkit/fileio.hpp"
#include "relkit/render.hpp"
#include "relkit/term.hpp"
#include "support.hpp"

using namespace relkit;

namespace {

Errc error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::ParseError;
}

Relation eval_in(const std::string& file, const std::string& expr) {
  const Environment env(testing::sample(file));
  return evaluate_relation(parse_term(expr), env);
}

Relation eval_in(const Document& doc, const std::string& expr) { return evaluate_relation(parse_term(expr), Environment(doc)); }

}  // namespace

TEST_CASE("parser") {
  const auto t = parse_term("~(eps(X)^ * ~eps(X))");
  CHECK(t.kind == Term::Kind::Complement);
  CHECK(print_term(t) == "~(eps(X)^ * ~eps(X))");
  CHECK(error_of([] { parse_term("A \\ C / B"); }) == Errc::ParseError);
  CHECK_NOTHROW(parse_term("(A \\ C) / B"));
  CHECK(error_of([] { parse_term("R *"); }) == Errc::ParseError);
  CHECK(parse_term("R|S&T") == parse_term("R | (S & T)"));
  CHECK(parse_term("R*S^") == parse_term("R * (S^)"));
  CHECK(parse_term("~R*S") == parse_term("(~R) * S"));
  CHECK(parse_term("R * S * T") == parse_term("(R * S) * T"));

  try {
    parse_term("R &\n  )");
    FAIL("expected a parse error");
  } catch (const LocatedError& e) {
    CHECK(e.where().line == 2);
    CHECK(e.where().col == 3);
  }
}

TEST_CASE("term round-trip") {
  for (const char* src : {"R", "R^^", "~~R", "(A \\ C) / B", "A \\ (C / B)", "syq(R, S) * eps(X)^", "R | S & T",
                          "(R | S) & T", "pt(X, \"a b\")", "~(R * S)^", "fork(R, S) * join(I(X), TOP(X, Y))"}) {
    const auto t = parse_term(src);
    const auto printed = print_term(t);
    CHECK(parse_term(printed) == t);
    CHECK(print_term(parse_term(printed)) == printed);
  }
}

TEST_CASE("type errors") {
  CHECK(error_of([] { eval_in("small.rel", "syq(R, S)"); }) == Errc::TypeError);
  CHECK(error_of([] { eval_in("small.rel", "R * R"); }) == Errc::TypeError);
  CHECK(error_of([] { eval_in("small.rel", "Q"); }) == Errc::UnboundIdentifier);
  CHECK(error_of([] { eval_in("small.rel", "nosuch(R)"); }) == Errc::UnboundIdentifier);
  try {
    eval_in("small.rel", "R | S");
  } catch (const LocatedError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("X") != std::string::npos);
    CHECK(msg.find("Y") != std::string::npos);
  }
}

TEST_CASE("evaluation") {
  const auto doc = testing::sample("image5x4.rel");
  const auto& r = *doc.relation("R");
  CHECK(eval_in(doc, "I(X) * R") == r);
  const auto th = eval_in("image5x4.rel", "exim(R)");
  CHECK(th.rows() == 32);
  CHECK(th.cols() == 16);
  CHECK(eval_in(doc, "R \\ R") == right_residual(r, r));
  CHECK(eval_in(doc, "~(eps(X)^ * ~eps(X))") == eval_in(doc, "omega(X)"));

  const auto m = eval_in("power3.rel", "meet(PX)");
  CHECK(m.rows() == 64);
  CHECK(m.cols() == 8);
  CHECK(is_mapping(m));
  CHECK(is_surjective(m));
}

TEST_CASE("file round-trip") {
  for (const char* f : {"power4.rel", "image5x4.rel", "binop_invertible.rel", "cyclic3.rel", "small.rel"}) {
    const auto doc = testing::sample(f);
    const auto text = write_document(doc);
    const auto again = parse_document(text);
    CHECK(write_document(again) == text);
    REQUIRE(again.relations.size() == doc.relations.size());
    for (std::size_t i = 0; i < doc.relations.size(); ++i) {
      CHECK(again.relations[i].second.raw() == doc.relations[i].second.raw());
      CHECK(again.relations[i].second.rows() == doc.relations[i].second.rows());
    }
  }

  std::mt19937_64 rng(47);
  const auto x = numbered("X", 5), y = Universe::atomic("Y", {"p q", "r\"s", "t"});
  for (int i = 0; i < 50; ++i) {
    Writer w;
    const auto r = testing::random_relation(x, y, rng);
    w.add_relation("R", r);
    const auto text = w.str();
    const auto doc = parse_document(text);
    CHECK(doc.relation("R")->raw() == r.raw());
    CHECK(write_document(doc) == text);
  }
}

TEST_CASE("file errors") {
  CHECK(error_of([] { parse_document("universe X = {a, a}"); }) == Errc::DuplicateLabel);
  CHECK(error_of([] { parse_document("universe X = {a}\nrelation R : X -> X { b: {} }"); }) != Errc::TypeError);
  CHECK(error_of([] { parse_document("universe X = {a"); }) == Errc::ParseError);
}

TEST_CASE("render") {
  const auto x = Universe::atomic("X", {"a", "b"});
  CHECK(render_matrix(identity(x)) == "  a b\na 1 .\nb . 1\n");
  const auto dense = render_matrix(membership_relation(x), true);
  CHECK(dense == testing::slurp(testing::source_path("tests/golden/eps_ab_dense.txt")));
  CHECK(render_matrix(membership_relation(x), true) == dense);
}

TEST_CASE("golden renders") {
  struct Case {
    const char* file;
    const char* expr;
    RenderOptions opt;
    const char* golden;
  };
  const Case cases[] = {
      {"lifted2.rel", "I(X)", {}, "identity_ab.txt"},
      {"lifted2.rel", "eps(X)", {RenderStyle::Matrix, true}, "eps_ab_dense.txt"},
      {"lifted2.rel", "joinop(PX)", {RenderStyle::Sets, false}, "join_ab_sets.txt"},
      {"image5x4.rel", "R", {}, "image5x4_R.txt"},
      {"image5x4.rel", "R", {RenderStyle::Sets, false}, "image5x4_R_sets.txt"},
      {"cyclic3.rel", "A", {RenderStyle::Sets, false}, "a3_sets.txt"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.golden);
    CHECK(render(eval_in(c.file, c.expr), c.opt) == testing::slurp(testing::source_path(std::string("tests/golden/") + c.golden)));
  }
}
