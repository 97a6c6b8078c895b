// Acceptance criteria, one line each. With an argument, runs only the
// criteria whose id starts with it ("3" runs 3a..3g).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <json.hpp>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "relkit/binop.hpp"
#include "relkit/boolalg.hpp"
#include "relkit/eval.hpp"
#include "relkit/fileio.hpp"
#include "relkit/images.hpp"
#include "relkit/laws.hpp"
#include "relkit/powerset.hpp"
#include "relkit/prodsum.hpp"
#include "relkit/term.hpp"
#include "support.hpp"

using namespace relkit;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  std::function<Outcome()> run;
};

std::string set_of(const Relation& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.rows(); ++i)
    if (v(i, 0)) s += (s.size() > 1 ? "," : "") + v.src().label(i);
  return s + "}";
}

std::string image_label(const Relation& f, const std::string& from) {
  const auto i = f.src().index_of(from);
  if (!i) throw std::runtime_error("no element " + from);
  const auto succ = f.successors(*i);
  return succ.size() == 1 ? f.tgt().label(succ[0]) : "?";
}

// Runs the CLI and returns its exit status; the reports land in `json`.
int run_cli(const std::string& args, const std::string& json) {
  const std::string cmd = std::string(RELKIT_CLI) + " " + args + " --json " + json + " -q > /dev/null";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

Outcome catalog_passes() {
  const std::string out = "acceptance_all_seed1.json";
  const auto t0 = std::chrono::steady_clock::now();
  const int rc = run_cli("check all", out);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto reports = nlohmann::json::parse(testing::slurp(out));
  std::size_t failed = 0, truncated = 0, short_random = 0, instances = 0;
  std::set<std::string> suites;
  for (const auto& r : reports) {
    suites.insert(r["suite"].get<std::string>());
    if (!r["pass"].get<bool>()) ++failed;
    if (!r["exhaustive"]["complete"].get<bool>()) ++truncated;
    if (r["random"]["instances"].get<std::size_t>() < 500) ++short_random;
    instances += r["exhaustive"]["instances"].get<std::size_t>() + r["random"]["instances"].get<std::size_t>();
  }
  char buf[256];
  std::snprintf(buf, sizeof buf, "%zu laws in %zu suites, %zu instances, %zu failed, %zu truncated, %zu under 500 random, %.1f s",
                reports.size(), suites.size(), instances, failed, truncated, short_random, secs);
  const bool ok = rc == 0 && failed == 0 && truncated == 0 && short_random == 0 && suites.size() == laws::suite_names().size() &&
                  secs < 60.0;
  return {ok, buf};
}

Outcome oracle_equivalence() {
  const std::vector<std::string> names = {"compose-matches-oracle",      "residuals-match-oracle", "syq-matches-oracle",
                                          "membership-matches-oracle",   "lub-glb-match-oracle",   "exim-matches-oracle",
                                          "imim-matches-oracle",         "power-relator-matches-oracle",
                                          "invariant-elements"};
  std::vector<laws::Law> picked;
  for (const auto& l : laws::catalog())
    for (const auto& n : names)
      if (l.name == n) picked.push_back(l);
  if (picked.size() != names.size()) return {false, "missing oracle laws"};
  laws::Options opt;
  opt.seed = laws::default_seed();
  std::size_t bad = 0, instances = 0;
  for (const auto& r : laws::run_laws(picked, opt)) {
    if (!r.pass || !r.exhaustive_complete || r.random < 500) ++bad;
    instances += r.exhaustive + r.random;
  }
  return {bad == 0, std::to_string(picked.size()) + " oracle laws, " + std::to_string(instances) + " instances, " +
                        std::to_string(bad) + " failing or incomplete"};
}

Outcome fixture_membership() {
  const auto doc = testing::sample("power4.rel");
  const auto b = membership(*doc.universe("X"));
  bool ok = b.epsilon.rows() == 4 && b.epsilon.cols() == 16;
  for (std::size_t i = 0; ok && i < 4; ++i)
    for (std::size_t s = 0; s < 16; ++s) ok = ok && b.epsilon(i, s) == bool(s >> i & 1);
  std::string sig;
  for (const char* x : {"a", "b", "c", "d"}) {
    const auto l = image_label(b.sigma, x);
    ok = ok && l == "{" + std::string(x) + "}";
    sig += std::string(sig.empty() ? "" : ", ") + x + "->" + l;
  }
  const auto av = atoms_vector(b);
  ok = ok && set_of(av) == "{{a},{b},{c},{d}}";
  return {ok, "sigma: " + sig + "; atoms " + set_of(av)};
}

Outcome fixture_image() {
  const auto doc = testing::sample("image5x4.rel");
  const auto th = existential_image(*doc.relation("R"));
  const auto e = image_label(th, "{}"), one = image_label(th, "{1}");
  const bool ok = is_mapping(th) && e == "{}" && one == "{b,d}";
  return {ok, "theta({}) = " + e + ", theta({1}) = " + one + (is_mapping(th) ? ", mapping" : ", not a mapping")};
}

Outcome fixture_group() {
  const auto op = *testing::sample("cyclic3.rel").binop("A");
  const auto n = neutrals(op);
  if (!is_point(n)) return {false, "neutral set " + set_of(n) + " is not a point"};
  const auto ir = right_inverse_map(op, n);
  const bool swaps = image_label(ir, "[2,3,1]") == "[3,1,2]" && image_label(ir, "[3,1,2]") == "[2,3,1]" &&
                     image_label(ir, "[1,2,3]") == "[1,2,3]";
  const bool ok = set_of(n) == "{[1,2,3]}" && is_bijective_mapping(ir) && swaps;
  return {ok, "neutral " + set_of(n) + ", i_r " + (is_bijective_mapping(ir) ? "bijective" : "not bijective") +
                  (swaps ? ", swaps the rotations" : ", does not swap the rotations")};
}

Outcome fixture_right_neutrals() {
  const auto op = *testing::sample("binop_right_neutral.rel").binop("A");
  const auto r = set_of(right_neutrals(op)), l = set_of(left_neutrals(op));
  return {r == "{c,e}" && l == "{}", "right " + r + ", left " + l};
}

Outcome fixture_left_invertible() {
  const auto op = *testing::sample("binop_invertible.rel").binop("A");
  const auto s = set_of(left_invertible_elements(op));
  return {s == "{b,f}", "left-invertible " + s};
}

Outcome fixture_invariants() {
  const auto op = *testing::sample("binop_invariant.rel").binop("A");
  const auto s = set_of(invariant_elements(op));
  return {s == "{a,c}", "expected {a,c}, table gives " + s + " (a*b = b but b*a = a)"};
}

Outcome fixture_join_table() {
  const auto a = lifted(*testing::sample("lifted2.rel").universe("X"));
  const auto cell = image_label(a.join, "({a},{b})");
  return {cell == "{a,b}", "join({a},{b}) = " + cell};
}

Outcome model_equalities() {
  std::mt19937_64 rng(laws::default_seed());
  std::uniform_int_distribution<std::size_t> size(0, 3);
  auto uni = [&](const char* n) { return numbered(n, size(rng), std::string(1, char(n[0] + 32))); };
  std::size_t fj = 0, kr = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto x = uni("X"), u = uni("U"), v = uni("V"), z = uni("Z");
    const auto r = testing::random_relation(x, u, rng), s = testing::random_relation(x, v, rng);
    const auto p = testing::random_relation(u, z, rng), q = testing::random_relation(v, z, rng);
    if (compose(fork(r, s), join(p, q)) == intersect(compose(r, p), compose(s, q))) ++fj;

    const auto y = uni("Y"), a = uni("A"), b = uni("B");
    const auto k1 = testing::random_relation(x, y, rng), k2 = testing::random_relation(u, v, rng);
    const auto k3 = testing::random_relation(y, a, rng), k4 = testing::random_relation(v, b, rng);
    if (compose(kron(k1, k2), kron(k3, k4)) == kron(compose(k1, k3), compose(k2, k4))) ++kr;
  }
  return {fj == 1000 && kr == 1000, "fork*join " + std::to_string(fj) + "/1000, kron multiplicative " + std::to_string(kr) + "/1000"};
}

Outcome round_trips() {
  std::mt19937_64 rng(laws::default_seed());
  std::uniform_int_distribution<std::size_t> size(0, 5);
  std::size_t vec_ok = 0;
  for (int i = 0; i < 200; ++i) {
    const auto x = numbered("X", size(rng)), y = numbered("Y", size(rng), "y");
    const auto r = testing::random_relation(x, y, rng);
    const auto v = testing::random_relation(Universe::pair(x, y), Universe::unit(), rng);
    if (unvec(vec(r)) == r && vec(unvec(v)) == v) ++vec_ok;
  }

  std::size_t pt_ok = 0, pt_total = 0;
  const auto x2 = Universe::atomic("X", {"a", "b"});
  for (const auto& r : {identity(x2), bottom(x2, x2), top(x2, x2)}) {
    ++pt_total;
    if (decode(relation_point(r)) == r) ++pt_ok;
  }
  pt_total += 3;
  pt_ok += decode(identity_point(x2)) == identity(x2);
  pt_ok += decode(bot_point(x2, x2)) == bottom(x2, x2);
  pt_ok += decode(top_point(x2, x2)) == top(x2, x2);
  std::uniform_int_distribution<std::size_t> small(0, 3);
  for (int i = 0; i < 50; ++i) {
    const auto x = numbered("X", small(rng)), y = numbered("Y", small(rng), "y");
    const auto r = testing::random_relation(x, y, rng);
    ++pt_total;
    if (is_point(relation_point(r)) && decode(relation_point(r)) == r) ++pt_ok;
  }

  std::size_t files = 0, files_ok = 0;
  for (const char* f : {"power4.rel", "image5x4.rel", "binop_invertible.rel", "binop_invariant.rel", "cyclic3.rel", "binop_right_neutral.rel", "lifted2.rel", "small.rel"}) {
    ++files;
    const auto text = write_document(testing::sample(f));
    const auto again = parse_document(text);
    bool same = write_document(again) == text;
    const auto orig = testing::sample(f);
    for (std::size_t i = 0; same && i < orig.relations.size(); ++i) same = again.relations[i].second.raw() == orig.relations[i].second.raw();
    for (std::size_t i = 0; same && i < orig.binops.size(); ++i) same = again.binops[i].second.table().raw() == orig.binops[i].second.table().raw();
    files_ok += same;
  }
  for (int i = 0; i < 50; ++i) {
    const auto x = numbered("X", size(rng)), y = numbered("Y", size(rng), "y");
    const auto r = testing::random_relation(x, y, rng);
    Writer w;
    w.add_relation("R", r);
    const auto text = w.str();
    const auto doc = parse_document(text);
    ++files;
    files_ok += doc.relation("R")->raw() == r.raw() && write_document(doc) == text;
  }

  std::size_t terms = 0, terms_ok = 0;
  for (const char* src : {"R", "~(eps(X)^ * ~eps(X))", "(A \\ C) / B", "A \\ (C / B)", "syq(R, S) | ~R^ & TOP(X, Y)",
                          "fork(pi(X, Y), rho(X, Y)) * join(R, S)", "pt(X, \"a\") * toppt(X, X)^", "R * S * T", "R * (S * T)"}) {
    ++terms;
    const auto printed = print_term(parse_term(src));
    terms_ok += parse_term(printed) == parse_term(src) && print_term(parse_term(printed)) == printed;
  }

  const bool ok = vec_ok == 200 && pt_ok == pt_total && files_ok == files && terms_ok == terms;
  return {ok, "vec " + std::to_string(vec_ok) + "/200, points " + std::to_string(pt_ok) + "/" + std::to_string(pt_total) +
                  ", files " + std::to_string(files_ok) + "/" + std::to_string(files) + ", terms " + std::to_string(terms_ok) +
                  "/" + std::to_string(terms)};
}

Outcome phi_isomorphism() {
  std::string detail;
  bool ok = true;
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {2, 2}}) {
    const auto s = sum_power_iso(numbered("X", m), numbered("Y", n, "y"));
    const bool bij = is_bijective_mapping(s.phi);
    const bool order = compose(s.msum.omega, s.phi) == compose(s.phi, s.omega_plus);
    ok = ok && bij && order;
    detail += (detail.empty() ? "" : ", ") + std::string("(") + std::to_string(m) + "," + std::to_string(n) + ") " +
              (bij ? "bijective" : "not bijective") + (order ? "+order" : "-order");
  }
  return {ok, detail};
}

Outcome determinism() {
  const int a = run_cli("check all --seed 42", "acceptance_seed42_a.json");
  const int b = run_cli("check all --seed 42", "acceptance_seed42_b.json");
  const auto ja = testing::slurp("acceptance_seed42_a.json"), jb = testing::slurp("acceptance_seed42_b.json");
  const bool same = ja == jb && !ja.empty();
  return {same && a == 0 && b == 0, std::string(same ? "identical" : "different") + " serializations (" + std::to_string(ja.size()) +
                                        " bytes), exit codes " + std::to_string(a) + "," + std::to_string(b)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string only = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria = {
      {"1", "law catalog passes exhaustively and on random instances", catalog_passes},
      {"2", "fast paths agree with pointwise oracles", oracle_equivalence},
      {"3a", "membership, singletons and atoms on four elements", fixture_membership},
      {"3b", "existential image fixture", fixture_image},
      {"3c", "cyclic group neutral element and right inverses", fixture_group},
      {"3d", "two right-neutrals, no left-neutral", fixture_right_neutrals},
      {"3e", "left-invertible elements", fixture_left_invertible},
      {"3f", "invariant elements", fixture_invariants},
      {"3g", "join table cell", fixture_join_table},
      {"4", "fork*join and Kronecker products as equalities", model_equalities},
      {"5", "vec, point, file and term round-trips", round_trips},
      {"6", "sum-to-product powerset isomorphism", phi_isomorphism},
      {"7", "check all --seed 42 is reproducible", determinism},
  };
  int failed = 0, ran = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && c.id.rfind(only, 0) != 0) continue;
    ++ran;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %-3s %s: %s\n", o.pass ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(), o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion matches '%s'\n", only.c_str());
    return 2;
  }
  return failed ? 1 : 0;
}
