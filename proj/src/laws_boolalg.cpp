#include "law_util.hpp"

namespace relkit::laws {

using namespace util;

namespace {

constexpr auto L = SizeClass::Lifted;

const LiftedAlgebra& pick(Ctx& c) { return algebra(c, c.set("X", L)); }

// A subset of `within` (as a bit mask), drawn bit by bit.
std::size_t sub_mask(Ctx& c, std::size_t within, std::size_t bits) {
  std::size_t m = 0;
  for (std::size_t i = 0; i < bits; ++i)
    if ((within >> i & 1) && c.coin()) m |= std::size_t{1} << i;
  return m;
}

}  // namespace

void add_boolalg_laws(std::vector<Law>& out) {
  Adder add(out, "boolalg");

  add("lifted-match-oracle", "N, meet, join tables = complement, intersection, union of subset indices", [](Ctx& c) {
    const auto& a = pick(c);
    const std::size_t full = a.power().size() - 1;
    c.eq("N", a.N, tabulate(a.power(), a.power(), [&](std::size_t s, std::size_t t) { return t == (~s & full); }));
    c.eq("meet", a.meet, oracle::subset_meet(a.base));
    c.eq("join", a.join, oracle::subset_join(a.base));
    c.holds("glb, lub and direct tables agree", three_way_agreement(a));
  });

  add("negation", "~eps * N = eps;  eps * N = ~eps;  N <= ~(eps^ * eps);  Omega * N = ~(eps^ * eps)", [](Ctx& c) {
    const auto& a = pick(c);
    const auto& e = a.epsilon();
    c.eq("~eps * N", ~e * a.N, e);
    c.eq("eps * N", e * a.N, ~e);
    c.le("N disjoint", a.N, ~(cv(e) * e));
    c.eq("Omega * N", a.omega() * a.N, ~(cv(e) * e));
  });

  add("join-forms", "J = syq(eps*pi^ | eps*rho^, eps) = lubR(pi | rho) = syq(eps*(pi|rho)^, eps) = syq(fork(~eps,~eps), ~eps)",
      [](Ctx& c) {
        const auto& a = pick(c);
        const auto& e = a.epsilon();
        const auto& pp = a.pp;
        c.eq("union form", a.join, syq((e * cv(pp.pi)) | (e * cv(pp.rho)), e));
        c.eq("lubR", a.join, lubR(a.bundle, pp.pi | pp.rho));
        c.eq("converse form", a.join, syq(e * cv(pp.pi | pp.rho), e));
        c.eq("negated fork", a.join, syq(fork(~e, ~e), ~e));
        c.eq("negated meet", a.join, syq((~e * cv(pp.pi)) & (~e * cv(pp.rho)), ~e));
      });

  add("meet-forms", "M = syq(eps*pi^ & eps*rho^, eps) = glbR(pi | rho) = syq(~eps*(pi|rho)^, ~eps) = syq(fork(eps,eps), eps)",
      [](Ctx& c) {
        const auto& a = pick(c);
        const auto& e = a.epsilon();
        const auto& pp = a.pp;
        c.eq("meet form", a.meet, syq((e * cv(pp.pi)) & (e * cv(pp.rho)), e));
        c.eq("glbR", a.meet, glbR(a.bundle, pp.pi | pp.rho));
        c.eq("negated converse form", a.meet, syq(~e * cv(pp.pi | pp.rho), ~e));
        c.eq("fork", a.meet, syq(fork(e, e), e));
      });

  add("sum-forms", "J = syq(iota*eps+ | kappa*eps+, eps);  M = syq(iota*eps+ & kappa*eps+, eps);  eps*J^ and eps*M^ likewise",
      [](Ctx& c) {
        const auto& a = pick(c);
        const auto s = sum_power_iso(a.base, a.base);
        const auto& e = a.epsilon();
        const auto l = s.sum.iota * s.epsilon_plus, r = s.sum.kappa * s.epsilon_plus;
        c.eq("join", a.join, syq(l | r, e));
        c.eq("meet", a.meet, syq(l & r, e));
        c.eq("eps * J^", e * cv(a.join), l | r);
        c.eq("eps * J^ via projections", e * cv(a.join), (e * cv(a.pp.pi)) | (e * cv(a.pp.rho)));
        c.eq("eps * M^", e * cv(a.meet), l & r);
        c.eq("eps * M^ = fork(eps,eps)", e * cv(a.meet), fork(e, e));
      });

  add("de-morgan", "NN*pi = pi*N, NN*rho = rho*N, NN*M = J*N, NN*J = M*N  with NN = kron(N,N)", [](Ctx& c) {
    const auto& a = pick(c);
    const auto nn = negation_pair(a);
    c.eq("pi", nn * a.pp.pi, a.pp.pi * a.N);
    c.eq("rho", nn * a.pp.rho, a.pp.rho * a.N);
    c.eq("meet to join", nn * a.meet, a.join * a.N);
    c.eq("join to meet", nn * a.join, a.meet * a.N);
  });

  add("meet-join-projections", "M^*pi = M^*rho = Omega;  J^*pi = J^*rho = Omega^", [](Ctx& c) {
    const auto& a = pick(c);
    c.eq("M^ * pi", cv(a.meet) * a.pp.pi, a.omega());
    c.eq("M^ * rho", cv(a.meet) * a.pp.rho, a.omega());
    c.eq("J^ * pi", cv(a.join) * a.pp.pi, cv(a.omega()));
    c.eq("J^ * rho", cv(a.join) * a.pp.rho, cv(a.omega()));
  });

  add("meet-join-bounds", "M*Omega^ = pi*Omega^ & rho*Omega^ = join(Omega^,Omega^);  J*Omega = join(Omega,Omega)", [](Ctx& c) {
    const auto& a = pick(c);
    const auto om = a.omega(), omt = cv(a.omega());
    c.eq("M * Omega^", a.meet * omt, (a.pp.pi * omt) & (a.pp.rho * omt));
    c.eq("join form", a.meet * omt, join(omt, omt));
    c.eq("J * Omega", a.join * om, (a.pp.pi * om) & (a.pp.rho * om));
    c.eq("join form", a.join * om, join(om, om));
  });

  add("eps-through-meet-join", "(eps*pi^ & eps*rho^)*M = eps;  (eps*pi^ | eps*rho^)*J = eps;  fork(eps,eps)*M = eps;  fork(eps,eps)*kron(Omega,Omega) = fork(eps,eps)",
      [](Ctx& c) {
        const auto& a = pick(c);
        const auto& e = a.epsilon();
        c.eq("meet", ((e * cv(a.pp.pi)) & (e * cv(a.pp.rho))) * a.meet, e);
        c.eq("join", ((e * cv(a.pp.pi)) | (e * cv(a.pp.rho))) * a.join, e);
        c.eq("fork meet", fork(e, e) * a.meet, e);
        c.eq("fork order", fork(e, e) * kron(a.omega(), a.omega()), fork(e, e));
      });

  add("meet-syq-transfer", "M^ * syq(fork(eps,eps), X) = syq(fork(eps,eps) * M, X)", [](Ctx& c) {
    const auto& a = pick(c);
    auto z = c.set("Z");
    auto x = c.rel("R", a.base, z);
    const auto& e = a.epsilon();
    c.eq("fork form", cv(a.meet) * syq(fork(e, e), x), syq(fork(e, e) * a.meet, x));
    const auto m = (e * cv(a.pp.pi)) & (e * cv(a.pp.rho));
    c.eq("meet form", cv(a.meet) * syq(m, x), syq(m * a.meet, x));
  });

  add("join-above-projections", "pi*Omega & rho <= J;  rho*Omega & pi <= J;  join(Omega,I) <= J;  join(I,Omega) <= J", [](Ctx& c) {
    const auto& a = pick(c);
    const auto& om = a.omega();
    const auto id = I(a.power());
    c.le("pi*Omega & rho", (a.pp.pi * om) & a.pp.rho, a.join);
    c.le("rho*Omega & pi", (a.pp.rho * om) & a.pp.pi, a.join);
    c.le("join(Omega,I)", join(om, id), a.join);
    c.le("join(I,Omega)", join(id, om), a.join);
  });

  add("meet-lower-bound-points", "a <= Omega*c, a <= Omega*d => a <= Omega*M^*join(c,d) = fork(Omega,Omega)*join(c,d)", [](Ctx& c) {
    const auto& alg = pick(c);
    const std::size_t n = alg.base.size(), full = alg.power().size() - 1;
    const std::size_t ci = sub_mask(c, full, n), di = sub_mask(c, full, n);
    const std::size_t ai = c.coin() ? sub_mask(c, ci & di, n) : sub_mask(c, full, n);
    const auto pc = c.input("c", relkit::point(alg.power(), ci));
    const auto pd = c.input("d", relkit::point(alg.power(), di));
    const auto pa = c.input("a", relkit::point(alg.power(), ai));
    const auto& om = alg.omega();
    const auto bound = om * cv(alg.meet) * join(pc, pd);
    c.eq("two forms", bound, fork(om, om) * join(pc, pd));
    if (pa <= om * pc && pa <= om * pd) c.le("a below the meet", pa, bound);
  });

  add("join-upper-bound-points", "b <= Omega^*c, b <= Omega^*d => b <= Omega^*J^*join(c,d) = fork(Omega^,Omega^)*join(c,d)", [](Ctx& c) {
    const auto& alg = pick(c);
    const std::size_t n = alg.base.size(), full = alg.power().size() - 1;
    const std::size_t ci = sub_mask(c, full, n), di = sub_mask(c, full, n);
    const std::size_t bi = c.coin() ? (ci | di | sub_mask(c, full, n)) : sub_mask(c, full, n);
    const auto pc = c.input("c", relkit::point(alg.power(), ci));
    const auto pd = c.input("d", relkit::point(alg.power(), di));
    const auto pb = c.input("b", relkit::point(alg.power(), bi));
    const auto omt = cv(alg.omega());
    const auto bound = omt * cv(alg.join) * join(pc, pd);
    c.eq("two forms", bound, fork(omt, omt) * join(pc, pd));
    if (pb <= omt * pc && pb <= omt * pd) c.le("b above the join", pb, bound);
  });

  add("meet-join-structure", "pi & rho univalent, surjective;  M, J surjective mappings;  J distributes over M;  kron(Omega,Omega)*M = M*Omega",
      [](Ctx& c) {
        const auto& a = pick(c);
        const auto p = a.pp.pi & a.pp.rho;
        c.holds("p univalent", is_univalent(p));
        c.holds("p surjective", is_surjective(p));
        c.holds("M surjective mapping", is_mapping(a.meet) && is_surjective(a.meet));
        c.holds("J surjective mapping", is_mapping(a.join) && is_surjective(a.join));
        c.holds("J distributes over M", distributes_over(join_op(a), meet_op(a)));
        c.eq("M monotone", kron(a.omega(), a.omega()) * a.meet, a.meet * a.omega());
      });

  add("absorption", "(pi^ & rho^*M*rho^)*J = I;  (pi^ & rho^*J*rho^)*M = I", [](Ctx& c) {
    const auto& a = pick(c);
    const auto id = I(a.power());
    c.eq("join absorbs meet", (cv(a.pp.pi) & (cv(a.pp.rho) * a.meet * cv(a.pp.rho))) * a.join, id);
    c.eq("meet absorbs join", (cv(a.pp.pi) & (cv(a.pp.rho) * a.join * cv(a.pp.rho))) * a.meet, id);
  });

  add("meet-associative", "kron(M,I)*M = T*kron(I,M)*M", [](Ctx& c) {
    const auto& a = pick(c);
    const auto& p = a.power();
    const auto id = I(p);
    const auto& t = c.pool().memo<Relation>("assoc:" + key(p), [&] { return assoc(p, p, p); });
    c.eq("associative", kron(a.meet, id) * a.meet, t * kron(id, a.meet) * a.meet);
    c.holds("join associative", is_associative(join_op(a)));
  });

  add("meet-commutative", "P*M = M;  pi & rho <= M", [](Ctx& c) {
    const auto& a = pick(c);
    c.eq("commutative", swap(a.power(), a.power()) * a.meet, a.meet);
    c.le("diagonal", a.pp.pi & a.pp.rho, a.meet);
  });

  add("bottom-top-points", "eps * bot_pt = BOT;  eps * top_pt = TOP", [](Ctx& c) {
    const auto& a = pick(c);
    c.eq("bottom", a.epsilon() * a.bot_pt, B(a.base, one()));
    c.eq("top", a.epsilon() * a.top_pt, T(a.base, one()));
  });
}

}  // namespace relkit::laws
