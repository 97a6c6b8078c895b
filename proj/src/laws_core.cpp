#include "law_util.hpp"

namespace relkit::laws {

using namespace util;

Law compose_oracle_law(ComposeFn compose_impl) {
  return Law{"compose-matches-oracle", "R * S = pointwise composition", "core", [f = std::move(compose_impl)](Ctx& c) {
               auto x = c.set("X"), y = c.set("Y"), z = c.set("Z");
               auto r = c.rel("R", x, y);
               auto s = c.rel("S", y, z);
               c.eq("R * S", f(r, s), oracle::compose(r, s));
             }};
}

void add_core_laws(std::vector<Law>& out) {
  Adder add(out, "core");

  add("power-index-roundtrip", "power_members(power_index(m)) = m", [](Ctx& c) {
    auto x = c.set("X", SizeClass::Power);
    std::vector<std::size_t> m;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (c.coin()) m.push_back(i);
    auto idx = power_index(std::span<const std::size_t>(m));
    c.holds("members of the index are m", power_members(idx) == m);
    c.holds("index below 2^|X|", idx < (std::size_t{1} << x.size()));
  });

  add("labels-injective", "label(i) = label(j) => i = j", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y");
    auto u = c.set("U", SizeClass::PowerPair), v = c.set("V", SizeClass::PowerPair);
    const Universe us[] = {x, Universe::pair(x, y), Universe::sum(x, y), Universe::power(u), Universe::power(Universe::pair(u, v))};
    for (const auto& u : us) {
      std::vector<std::string> ls;
      for (std::size_t i = 0; i < u.size(); ++i) ls.push_back(u.label(i));
      std::sort(ls.begin(), ls.end());
      c.holds("labels of " + u.name() + " are distinct", std::adjacent_find(ls.begin(), ls.end()) == ls.end());
      for (std::size_t i = 0; i < u.size(); ++i) c.holds("index_of(label(i)) = i", u.index_of(u.label(i)) == i);
    }
  });

  add("power-binary-order", "column S of pow(X) lists x_i iff bit i of S is set", [](Ctx& c) {
    auto x = c.set("X", SizeClass::Power);
    auto p = Universe::power(x);
    for (std::size_t s = 0; s < p.size(); ++s) {
      std::string want = "{";
      bool first = true;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (s >> i & 1) {
          want += (first ? "" : ",") + x.label(i);
          first = false;
        }
      c.holds("label of subset " + std::to_string(s), p.label(s) == want + "}");
    }
  });

  add("sizes-compose", "|X*Y| = |X||Y|, |X+Y| = |X|+|Y|, |pow X| = 2^|X|", [](Ctx& c) {
    auto x = c.set("X", SizeClass::PowerPair), y = c.set("Y", SizeClass::PowerPair);
    auto xy = Universe::pair(x, y);
    c.holds("pair", xy.size() == x.size() * y.size());
    c.holds("sum", Universe::sum(xy, x).size() == xy.size() + x.size());
    c.holds("power", Universe::power(xy).size() == std::size_t{1} << xy.size());
    c.holds("nested power", Universe::power(Universe::sum(x, y)).size() == std::size_t{1} << (x.size() + y.size()));
  });

  out.push_back(compose_oracle_law([](const Relation& a, const Relation& b) { return compose(a, b); }));

  add("converse-matches-oracle", "R^ = pointwise converse", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y");
    auto r = c.rel("R", x, y);
    c.eq("R^", cv(r), oracle::converse(r));
    c.eq("R^^ = R", cv(cv(r)), r);
  });

  add("residuals-match-oracle", "A \\ C and C / B = pointwise residuals", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y"), z = c.set("Z");
    auto a = c.rel("A", x, y);
    auto cc = c.rel("C", x, z);
    auto b = c.rel("B", y, z);
    c.eq("A \\ C", under(a, cc), oracle::right_residual(a, cc));
    c.eq("C / B", over(cc, b), oracle::left_residual(cc, b));
  });

  add("residuals-greatest", "A * X <= C iff X <= A \\ C;  Y * B <= C iff Y <= C / B", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y"), z = c.set("Z");
    auto a = c.rel("A", x, y);
    auto cc = c.rel("C", x, z);
    auto w = c.rel("W", y, z);
    c.holds("right residual", (a * w <= cc) == (w <= under(a, cc)));
    auto b = c.rel("B", y, z);
    auto v = c.rel("V", x, y);
    c.holds("left residual", (v * b <= cc) == (v <= over(cc, b)));
  });

  add("dedekind", "R * S & Q <= (R & Q * S^) * (S & R^ * Q)", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y"), z = c.set("Z");
    auto r = c.rel("R", x, y);
    auto s = c.rel("S", y, z);
    auto q = c.rel("Q", x, z);
    c.le("Dedekind", (r * s) & q, (r & (q * cv(s))) * (s & (cv(r) * q)));
  });

  add("schroeder", "A * B <= C iff A^ * ~C <= ~B iff ~C * B^ <= ~A", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y"), z = c.set("Z");
    auto a = c.rel("A", x, y);
    auto b = c.rel("B", y, z);
    auto cc = c.rel("C", x, z);
    const bool p = a * b <= cc;
    const bool q = cv(a) * ~cc <= ~b;
    const bool r = ~cc * cv(b) <= ~a;
    c.holds("all three agree", p == q && q == r);
  });

  add("shunting", "f mapping: A * f <= B iff A <= B * f^", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y"), z = c.set("Z");
    auto a = c.rel("A", x, y);
    auto f = c.mapping("f", y, z);
    auto b = c.rel("B", x, z);
    c.holds("shunting", (a * f <= b) == (a <= b * cv(f)));
  });

  add("destroy-and-append", "g univalent: (A & B * g^) * g = A * g & B", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y"), z = c.set("Z");
    auto a = c.rel("A", x, y);
    auto g = c.univalent("g", y, z);
    auto b = c.rel("B", x, z);
    c.eq("destroy and append", (a & (b * cv(g))) * g, (a * g) & b);
  });

  add("diagonal-complement", "~((I & D) * TOP) = (I & ~D) * TOP", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y");
    auto d = c.rel("D", x, x);
    c.eq("complemented diagonal part", ~((I(x) & d) * T(x, y)), (I(x) & ~d) * T(x, y));
  });

  add("two-mappings", "f, g mappings: (~f & g) * TOP = (f & ~g) * TOP", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y"), z = c.set("Z");
    auto f = c.mapping("f", x, y);
    auto g = c.mapping("g", x, y);
    c.eq("difference domains", (~f & g) * T(y, z), (f & ~g) * T(y, z));
  });

  add("residual-mixed-assoc", "(Q \\ R) / T = Q \\ (R / T)", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y"), z = c.set("Z"), w = c.set("W");
    auto q = c.rel("Q", x, y);
    auto r = c.rel("R", x, z);
    auto t = c.rel("T", w, z);
    c.eq("mixed residuals associate", over(under(q, r), t), under(q, over(r, t)));
  });

  add("residual-idempotent", "Q \\ Q = (Q \\ Q) / (Q \\ Q)", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y");
    auto q = c.rel("Q", x, y);
    auto qq = under(q, q);
    c.eq("Q \\ Q", qq, over(qq, qq));
  });

  add("residual-total-shift", "U total: Q / (R * U) <= (Q * U^) / R", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y"), w = c.set("W"), z = c.set("Z");
    auto q = c.rel("Q", x, z);
    auto r = c.rel("R", y, w);
    auto u = c.total("U", w, z);
    c.le("shift across a total relation", over(q, r * u), over(q * cv(u), r));
  });
}

}  // namespace relkit::laws
