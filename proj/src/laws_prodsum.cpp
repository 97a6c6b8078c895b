#include "law_util.hpp"

namespace relkit::laws {

using namespace util;

void add_prodsum_laws(std::vector<Law>& out) {
  Adder add(out, "prodsum");
  constexpr auto PP = SizeClass::PowerPair;

  add("product-sum-axioms", "pi^*pi = I, rho^*rho = I, pi*pi^ & rho*rho^ = I, pi^*rho = TOP;  dually for iota, kappa", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y");
    const auto s = sum(x, y);
    c.holds("sum axioms", sum_axioms_hold(s));
    if (x.size() == 0 || y.size() == 0) c.discard();
    c.holds("product axioms", product_axioms_hold(product(x, y)));
  });

  add("kron-matches-oracle", "kron(A,B) = pi*A*pi'^ & rho*B*rho'^ = pointwise product", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y"), u = c.set("U"), v = c.set("V");
    auto a = c.rel("A", x, u);
    auto b = c.rel("B", y, v);
    const auto& p = prod(c, x, y);
    const auto& q = prod(c, u, v);
    const auto k = kron(a, b);
    c.eq("kron vs oracle", k, oracle::kron(a, b));
    c.eq("kron formula", k, (p.pi * a * cv(q.pi)) & (p.rho * b * cv(q.rho)));
  });

  add("fork-join-formulas", "fork(C,D) = C*pi^ & D*rho^;  join(E,F) = pi*E & rho*F", [](Ctx& c) {
    auto x = c.set("X"), u = c.set("U"), v = c.set("V");
    auto cc = c.rel("C", x, u);
    auto d = c.rel("D", x, v);
    const auto& q = prod(c, u, v);
    c.eq("fork formula", fork(cc, d), (cc * cv(q.pi)) & (d * cv(q.rho)));
    auto e = c.rel("E", u, x);
    auto f = c.rel("F", v, x);
    c.eq("join formula", join(e, f), (q.pi * e) & (q.rho * f));
  });

  add("kron-projections", "kron(A,B)*pi' = pi*A & rho*B*TOP;  kron(A,B)*rho' = pi*A*TOP & rho*B", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y"), u = c.set("U"), v = c.set("V");
    auto a = c.rel("A", x, u);
    auto b = c.rel("B", y, v);
    const auto& p = prod(c, x, y);
    const auto& q = prod(c, u, v);
    const auto k = kron(a, b);
    c.eq("left", k * q.pi, (p.pi * a) & (p.rho * b * T(v, u)));
    c.eq("right", k * q.rho, (p.pi * a * T(u, v)) & (p.rho * b));
  });

  add("kron-projections-total", "B total => kron(A,B)*pi' = pi*A;  A total => kron(A,B)*rho' = rho*B", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y"), u = c.set("U"), v = c.set("V");
    const auto& p = prod(c, x, y);
    const auto& q = prod(c, u, v);
    if (c.coin()) {
      auto a = c.rel("A", x, u);
      auto b = c.total("B", y, v);
      c.eq("left", kron(a, b) * q.pi, p.pi * a);
    } else {
      auto a = c.total("A", x, u);
      auto b = c.rel("B", y, v);
      c.eq("right", kron(a, b) * q.rho, p.rho * b);
    }
  });

  add("kron-identity-projections", "kron(A,I)*pi' = join(A,TOP) = pi*A;  fork(A,I)*pi' = A;  and the rho duals", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y"), u = c.set("U");
    auto a = c.rel("A", x, u);
    const auto& p = prod(c, x, y);
    const auto& q = prod(c, u, y);
    c.eq("kron(A,I)*pi'", kron(a, I(y)) * q.pi, join(a, T(y, u)));
    c.eq("join(A,TOP) = pi*A", join(a, T(y, u)), p.pi * a);
    const auto& p2 = prod(c, y, x);
    const auto& q2 = prod(c, y, u);
    c.eq("kron(I,A)*rho'", kron(I(y), a) * q2.rho, join(T(y, u), a));
    c.eq("join(TOP,A) = rho*A", join(T(y, u), a), p2.rho * a);
    c.eq("fork(A,I)*pi' = A", fork(a, I(x)) * prod(c, u, x).pi, a);
    c.eq("fork(I,A)*rho' = A", fork(I(x), a) * prod(c, x, u).rho, a);
  });

  add("kron-preserves-maps", "A, B univalent => kron(A,B) univalent;  A, B mappings => kron(A,B) mapping", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y"), u = c.set("U"), v = c.set("V");
    if (c.coin()) {
      auto a = c.univalent("A", x, u);
      auto b = c.univalent("B", y, v);
      c.holds("univalent", is_univalent(kron(a, b)));
    } else {
      auto a = c.mapping("A", x, u);
      auto b = c.mapping("B", y, v);
      c.holds("mapping", is_mapping(kron(a, b)));
    }
  });

  add("kron-kron", "kron(R,S) * kron(P,Q) <= kron(R*P, S*Q), equal in this model", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y"), u = c.set("U"), v = c.set("V"), a = c.set("A"), b = c.set("B");
    auto r = c.rel("R", x, u);
    auto s = c.rel("S", y, v);
    auto p = c.rel("P", u, a);
    auto q = c.rel("Q", v, b);
    const auto lhs = kron(r, s) * kron(p, q), rhs = kron(r * p, s * q);
    c.le("inclusion", lhs, rhs);
    c.eq("model equality", lhs, rhs);
  });

  add("kron-join", "kron(R,S) * join(P,Q) <= join(R*P, S*Q), equal in this model", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y"), u = c.set("U"), v = c.set("V"), w = c.set("W");
    auto r = c.rel("R", x, u);
    auto s = c.rel("S", y, v);
    auto p = c.rel("P", u, w);
    auto q = c.rel("Q", v, w);
    const auto lhs = kron(r, s) * join(p, q), rhs = join(r * p, s * q);
    c.le("inclusion", lhs, rhs);
    c.eq("model equality", lhs, rhs);
  });

  add("fork-kron", "fork(R,S) * kron(P,Q) <= fork(R*P, S*Q), equal in this model", [](Ctx& c) {
    auto z = c.set("Z"), u = c.set("U"), v = c.set("V"), a = c.set("A"), b = c.set("B");
    auto r = c.rel("R", z, u);
    auto s = c.rel("S", z, v);
    auto p = c.rel("P", u, a);
    auto q = c.rel("Q", v, b);
    const auto lhs = fork(r, s) * kron(p, q), rhs = fork(r * p, s * q);
    c.le("inclusion", lhs, rhs);
    c.eq("model equality", lhs, rhs);
  });

  add("fork-join", "fork(R,S) * join(P,Q) <= R*P & S*Q, equal in this model", [](Ctx& c) {
    auto z = c.set("Z"), u = c.set("U"), v = c.set("V"), w = c.set("W");
    auto r = c.rel("R", z, u);
    auto s = c.rel("S", z, v);
    auto p = c.rel("P", u, w);
    auto q = c.rel("Q", v, w);
    const auto lhs = fork(r, s) * join(p, q), rhs = (r * p) & (s * q);
    c.le("inclusion", lhs, rhs);
    c.eq("model equality", lhs, rhs);
  });

  add("kron-kron-univalent", "f, g univalent => kron(f,g) * kron(A,B) = kron(f*A, g*B)", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y"), u = c.set("U"), v = c.set("V"), a = c.set("A"), b = c.set("B");
    auto f = c.univalent("f", x, u);
    auto g = c.univalent("g", y, v);
    auto ra = c.rel("RA", u, a);
    auto rb = c.rel("RB", v, b);
    c.eq("multiplicative", kron(f, g) * kron(ra, rb), kron(f * ra, g * rb));
  });

  add("kron-join-exact", "f,g univalent or A,B injective => kron(f,g) * join(A,B) = join(f*A, g*B)", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y"), u = c.set("U"), v = c.set("V"), w = c.set("W");
    const bool uni = c.coin();
    auto f = uni ? c.univalent("f", x, u) : c.rel("f", x, u);
    auto g = uni ? c.univalent("g", y, v) : c.rel("g", y, v);
    auto a = uni ? c.rel("A", u, w) : c.injective("A", u, w);
    auto b = uni ? c.rel("B", v, w) : c.injective("B", v, w);
    c.eq("join", kron(f, g) * join(a, b), join(f * a, g * b));
  });

  add("fork-join-exact", "A,B injective or R,S univalent => fork(R,S) * join(A,B) = R*A & S*B", [](Ctx& c) {
    auto z = c.set("Z"), u = c.set("U"), v = c.set("V"), w = c.set("W");
    const bool uni = c.coin();
    auto r = uni ? c.univalent("R", z, u) : c.rel("R", z, u);
    auto s = uni ? c.univalent("S", z, v) : c.rel("S", z, v);
    auto a = uni ? c.rel("A", u, w) : c.injective("A", u, w);
    auto b = uni ? c.rel("B", v, w) : c.injective("B", v, w);
    c.eq("fork-join", fork(r, s) * join(a, b), (r * a) & (s * b));
  });

  add("kron-top", "kron(R,S) * TOP = join(R*TOP, S*TOP)", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y"), u = c.set("U"), v = c.set("V"), w = c.set("W");
    auto r = c.rel("R", x, u);
    auto s = c.rel("S", y, v);
    c.eq("domain", kron(r, s) * T(Universe::pair(u, v), w), join(cyl(r, w), cyl(s, w)));
  });

  add("fork-restrict", "fork(A,B) & C*TOP = fork(A & C*TOP, B & C*TOP)", [](Ctx& c) {
    auto z = c.set("Z"), x = c.set("X"), y = c.set("Y"), w = c.set("W");
    auto a = c.rel("A", z, x);
    auto b = c.rel("B", z, y);
    auto cc = c.rel("C", z, w);
    c.eq("restriction", fork(a, b) & cyl(cc, Universe::pair(x, y)), fork(a & cyl(cc, x), b & cyl(cc, y)));
  });

  add("kron-restrict", "kron(A,B) & join(C*TOP, D*TOP) = kron(A & C*TOP, B & D*TOP)", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y"), u = c.set("U"), v = c.set("V"), w1 = c.set("W"), w2 = c.set("W2");
    auto a = c.rel("A", x, u);
    auto b = c.rel("B", y, v);
    auto cc = c.rel("C", x, w1);
    auto d = c.rel("D", y, w2);
    const auto uv = Universe::pair(u, v);
    c.eq("restriction", kron(a, b) & join(cyl(cc, uv), cyl(d, uv)), kron(a & cyl(cc, u), b & cyl(d, v)));
  });

  add("fork-meet", "fork(A & C, B & D) = fork(A,B) & fork(C,D)", [](Ctx& c) {
    auto z = c.set("Z"), x = c.set("X"), y = c.set("Y");
    auto a = c.rel("A", z, x);
    auto b = c.rel("B", z, y);
    auto cc = c.rel("C", z, x);
    auto d = c.rel("D", z, y);
    c.eq("meet", fork(a & cc, b & d), fork(a, b) & fork(cc, d));
  });

  add("kron-residual", "kron(R\\R, S\\S) <= fork(R,S) \\ fork(R,S)", [](Ctx& c) {
    auto w = c.set("W"), x = c.set("X"), y = c.set("Y");
    auto r = c.rel("R", w, x);
    auto s = c.rel("S", w, y);
    c.le("residual", kron(under(r, r), under(s, s)), under(fork(r, s), fork(r, s)));
  });

  add("fork-univalent-prefix", "C univalent => C * fork(A,B) = fork(C*A, C*B)", [](Ctx& c) {
    auto w = c.set("W"), z = c.set("Z"), x = c.set("X"), y = c.set("Y");
    auto cc = c.univalent("C", w, z);
    auto a = c.rel("A", z, x);
    auto b = c.rel("B", z, y);
    c.eq("prefix", cc * fork(a, b), fork(cc * a, cc * b));
  });

  add("residual-fork", "A \\ fork(B,C) = fork(A\\B, A\\C)", [](Ctx& c) {
    auto x = c.set("X"), w = c.set("W"), y = c.set("Y"), z = c.set("Z");
    auto a = c.rel("A", x, w);
    auto b = c.rel("B", x, y);
    auto cc = c.rel("C", x, z);
    c.eq("distributes", under(a, fork(b, cc)), fork(under(a, b), under(a, cc)));
  });

  add("addition-theorem", "syq(S, iota^*Q*pi^ | kappa^*R*rho^) = fork(syq(iota*S, Q), syq(kappa*S, R))", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y"), u = c.set("U"), v = c.set("V"), z = c.set("Z");
    auto q = c.rel("Q", x, u);
    auto r = c.rel("R", y, v);
    auto s = c.rel("S", Universe::sum(x, y), z);
    c.holds("addition theorem", addition_theorem_check(q, r, s));
  });

  add("vec-roundtrip", "unvec(vec R) = R;  vec(unvec v) = v", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y");
    auto r = c.rel("R", x, y);
    c.eq("unvec . vec", unvec(vec(r)), r);
    auto v = c.vector("v", Universe::pair(x, y));
    c.eq("vec . unvec", vec(unvec(v)), v);
  });

  add("relation-point-decode", "relpt(R) is a point with decode(relpt(R)) = R", [](Ctx& c) {
    auto x = c.set("X", PP), y = c.set("Y", PP);
    auto r = c.rel("R", x, y);
    const auto p = relation_point(r);
    c.holds("point", is_point(p), {{"relpt", p}});
    c.eq("decode", decode(p), r);
  });

  add("identity-point", "I = syq(eps, (pi & rho) * TOP) = syq(eps, vec I);  unvec(eps * I) = I", [](Ctx& c) {
    auto x = c.set("X", PP);
    const auto& p = prod(c, x, x);
    const auto& e = bundle(c, p.carrier).epsilon;
    const auto ip = identity_point(x);
    c.eq("two forms", ip, syq(e, cyl(p.pi & p.rho, one())));
    c.holds("point", is_point(ip));
    c.eq("decodes to I", unvec(e * ip), I(x));
  });

  add("bot-top-points", "unvec(eps * BOT) = BOT;  unvec(eps * TOP) = TOP", [](Ctx& c) {
    auto x = c.set("X", PP), y = c.set("Y", PP);
    c.eq("bottom", decode(bot_point(x, y)), B(x, y));
    c.eq("top", decode(top_point(x, y)), T(x, y));
    c.holds("points", is_point(bot_point(x, y)) && is_point(top_point(x, y)));
  });

  add("transposition-point", "P = pi*rho'^ & rho*pi'^ and TT = syq(P^*eps, eps') bijective;  TT * eps'^ = eps^ * P", [](Ctx& c) {
    auto x = c.set("X", PP), y = c.set("Y", PP);
    const auto& p = prod(c, x, y);
    const auto& p2 = prod(c, y, x);
    const auto sw = swap(x, y);
    c.eq("P formula", sw, (p.pi * cv(p2.rho)) & (p.rho * cv(p2.pi)));
    c.holds("P bijective mapping", is_bijective_mapping(sw));
    const auto tt = transposition_point_map(x, y);
    c.holds("TT bijective mapping", is_bijective_mapping(tt), {{"TT", tt}});
    c.eq("P * rho' = pi", sw * p2.rho, p.pi);
    c.eq("P * pi' = rho", sw * p2.pi, p.rho);
    c.eq("P^ * pi = rho'", cv(sw) * p.pi, p2.rho);
    c.eq("P^ * rho = pi'", cv(sw) * p.rho, p2.pi);
    const auto& e = bundle(c, p.carrier).epsilon;
    const auto& e2 = bundle(c, p2.carrier).epsilon;
    c.eq("bisimulation", tt * cv(e2), cv(e) * sw);
  });

  add("transposition-vec", "unvec(P^ * v) = unvec(v)^;  vec(R^) = P' * vec(R);  complement commutes with vec, unvec", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y");
    auto v = c.vector("v", Universe::pair(x, y));
    c.eq("unvec of swapped", unvec(cv(swap(x, y)) * v), cv(unvec(v)));
    auto r = c.rel("R", x, y);
    c.eq("vec of converse", vec(cv(r)), swap(y, x) * vec(r));
    c.eq("unvec of complement", unvec(~v), ~unvec(v));
    c.eq("vec of complement", vec(~r), ~vec(r));
  });

  add("swap-bijective", "P = pi*rho'^ & rho*pi'^ bijective;  P^ = P", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y");
    c.holds("P bijective", is_bijective_mapping(swap(x, y)));
    c.eq("P^ = P", cv(swap(x, y)), swap(y, x));
    c.eq("P^ = P on a square", cv(swap(x, x)), swap(x, x));
  });

  add("swap-kron", "P*kron(S,R) = kron(R,S)*P'", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y"), u = c.set("U"), v = c.set("V");
    auto r = c.rel("R", x, u);
    auto s = c.rel("S", y, v);
    c.eq("kron", swap(x, y) * kron(s, r), kron(r, s) * swap(u, v));
  });

  add("swap-join-fork", "P*join(R,S) = join(S,R);  fork(R,S)*P = fork(S,R)", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y"), u = c.set("U");
    auto r = c.rel("R", x, u);
    auto s = c.rel("S", y, u);
    c.eq("join", swap(y, x) * join(r, s), join(s, r));
    c.eq("fork", fork(cv(r), cv(s)) * swap(x, y), fork(cv(s), cv(r)));
  });

  add("assoc-bijective", "T = fork(pi'*pi, kron(rho,I)) bijective", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y"), z = c.set("Z");
    const auto t = assoc(x, y, z);
    c.holds("T bijective", is_bijective_mapping(t));
    const auto& inner = prod(c, x, y);
    const auto& outer = prod(c, inner.carrier, z);
    c.eq("T formula", t, fork(outer.pi * inner.pi, kron(inner.rho, I(z))));
  });

  add("assoc-kron", "T*kron(Q,kron(R,S)) = kron(kron(Q,R),S)*T'", [](Ctx& c) {
    auto x = c.set("X"), y = c.set("Y"), z = c.set("Z"), u = c.set("U"), v = c.set("V"), w = c.set("W");
    auto q = c.rel("Q", x, u);
    auto r = c.rel("R", y, v);
    auto s = c.rel("S", z, w);
    c.eq("kron", assoc(x, y, z) * kron(q, kron(r, s)), kron(kron(q, r), s) * assoc(u, v, w));
  });

  add("assoc-fork", "fork(Q,fork(R,S)) = fork(fork(Q,R),S)*T", [](Ctx& c) {
    auto a = c.set("A"), x = c.set("X"), y = c.set("Y"), z = c.set("Z");
    auto q = c.rel("Q", a, x);
    auto r = c.rel("R", a, y);
    auto s = c.rel("S", a, z);
    c.eq("fork", fork(q, fork(r, s)), fork(fork(q, r), s) * assoc(x, y, z));
  });

  add("sum-power-projections", "iota*eps+ = eps_X*pi^;  iota*eps+*pi = eps_X;  syq(iota*eps+, eps_X) = pi;  and the kappa duals",
      [](Ctx& c) {
        auto x = c.set("X", PP), y = c.set("Y", PP);
        const auto s = sum_power_iso(x, y);
        const auto& ep = s.epsilon_plus;
        c.eq("iota", s.sum.iota * ep, s.mx.epsilon * cv(s.product.pi));
        c.eq("iota pi", s.sum.iota * ep * s.product.pi, s.mx.epsilon);
        c.eq("kappa", s.sum.kappa * ep, s.my.epsilon * cv(s.product.rho));
        c.eq("kappa rho", s.sum.kappa * ep * s.product.rho, s.my.epsilon);
        c.eq("syq iota", syq(s.sum.iota * ep, s.mx.epsilon), s.product.pi);
        c.eq("syq kappa", syq(s.sum.kappa * ep, s.my.epsilon), s.product.rho);
      });

  add("sum-power-iso", "phi = syq(iota*eps',eps_X)*pi^ & syq(kappa*eps',eps_Y)*rho^ bijective; eps'*phi = eps+; eps+ membership",
      [](Ctx& c) {
        auto x = c.set("X", PP), y = c.set("Y", PP);
        const auto s = sum_power_iso(x, y);
        const auto& e = s.msum.epsilon;
        const auto& ep = s.epsilon_plus;
        const auto a = syq(s.sum.iota * e, s.mx.epsilon), b = syq(s.sum.kappa * e, s.my.epsilon);
        c.eq("phi formula", s.phi, (a * cv(s.product.pi)) & (b * cv(s.product.rho)));
        c.eq("phi * pi", s.phi * s.product.pi, a);
        c.eq("phi * rho", s.phi * s.product.rho, b);
        c.holds("phi bijective mapping", is_bijective_mapping(s.phi), {{"phi", s.phi}});
        c.eq("eps' * phi = eps+", e * s.phi, ep);
        c.eq("eps+ * phi^ = eps'", ep * cv(s.phi), e);
        c.eq("syq(pi*eps_X^, eps+^) = iota", syq(s.product.pi * cv(s.mx.epsilon), cv(ep)), s.sum.iota);
        c.eq("syq(rho*eps_Y^, eps+^) = kappa", syq(s.product.rho * cv(s.my.epsilon), cv(ep)), s.sum.kappa);
        c.holds("eps+ is a membership", is_membership(ep), {{"eps+", ep}});
      });

  add("sum-power-order", "Omega+ = ~(eps+^ * ~eps+) = kron(Omega_X, Omega_Y) is an order;  Omega' * phi = phi * Omega+", [](Ctx& c) {
    auto x = c.set("X", PP), y = c.set("Y", PP);
    const auto s = sum_power_iso(x, y);
    c.holds("order", is_order(s.omega_plus), {{"Omega+", s.omega_plus}});
    c.eq("componentwise", s.omega_plus, kron(s.mx.omega, s.my.omega));
    c.eq("order isomorphism", s.msum.omega * s.phi, s.phi * s.omega_plus);
  });
}

}  // namespace relkit::laws
