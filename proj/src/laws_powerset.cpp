#include "law_util.hpp"

namespace relkit::laws {

using namespace util;

void add_powerset_laws(std::vector<Law>& out) {
  Adder add(out, "powerset");

  add("membership-matches-oracle", "eps(x,S) iff x in S;  Omega = ~(eps^ * ~eps) = inclusion", [](Ctx& c) {
    auto x = c.set("X", SizeClass::Power);
    const auto& b = bundle(c, x);
    c.eq("eps", b.epsilon, oracle::membership(x));
    c.eq("Omega", b.omega, oracle::omega(x));
    c.eq("Omega formula", b.omega, ~(cv(b.epsilon) * ~b.epsilon));
    c.holds("Omega is an order", is_order(b.omega));
  });

  add("membership-axioms", "syq(eps, eps) = I;  syq(R, eps) is a mapping", [](Ctx& c) {
    auto x = c.set("X", SizeClass::Power), y = c.set("Y");
    const auto& b = bundle(c, x);
    c.eq("extensionality", syq(b.epsilon, b.epsilon), I(b.power));
    auto r = c.rel("R", x, y);
    c.holds("comprehension", is_mapping(syq(r, b.epsilon)), {{"syq(R,eps)", syq(r, b.epsilon)}});
    c.holds("is_membership", is_membership(b.epsilon));
  });

  add("singleton-injection", "sigma = syq(I, eps) is an injective mapping;  atoms = sigma^ * sigma", [](Ctx& c) {
    auto x = c.set("X", SizeClass::Power);
    const auto& b = bundle(c, x);
    c.eq("sigma", b.sigma, syq(I(x), b.epsilon));
    c.holds("sigma injective mapping", is_mapping(b.sigma) && is_injective(b.sigma), {{"sigma", b.sigma}});
    const auto at = atoms(b);
    c.holds("atoms are the singletons", at <= I(b.power) && at.count() == x.size(), {{"atoms", at}});
  });

  add("lub-glb-match-oracle", "lub(X) = syq(eps, eps * X);  glb(X) = syq(~eps, ~eps * X)", [](Ctx& c) {
    auto x = c.set("X", SizeClass::Power), y = c.set("Y");
    const auto& b = bundle(c, x);
    auto s = c.rel("S", b.power, y);
    c.eq("lub", lub(b, s), oracle::lub(s));
    c.eq("glb", glb(b, s), oracle::glb(s));
    auto r = c.rel("R", y, b.power);
    c.eq("lubR", lubR(b, r), cv(oracle::lub(cv(r))));
    c.eq("glbR", glbR(b, r), cv(oracle::glb(cv(r))));
  });

  add("eps-negation-cancel", "eps * ~(eps^ * X) = ~X  and  ~eps * ~(~eps^ * X) = ~X", [](Ctx& c) {
    auto x = c.set("X", SizeClass::Power), y = c.set("Y");
    const auto& b = bundle(c, x);
    auto r = c.rel("R", x, y);
    const auto& e = b.epsilon;
    c.eq("eps form", e * ~(cv(e) * r), ~r);
    c.eq("negated eps form", ~e * ~(cv(~e) * r), ~r);
  });

  add("sigma-eps", "sigma * eps^ = I", [](Ctx& c) {
    const auto& b = bundle(c, c.set("X", SizeClass::Power));
    c.eq("sigma * eps^", b.sigma * cv(b.epsilon), I(b.base));
  });

  add("sigma-complement", "~(~I * eps) = sigma | ~(TOP * eps)", [](Ctx& c) {
    const auto& b = bundle(c, c.set("X", SizeClass::Power));
    const auto& x = b.base;
    c.eq("non-membership of others", ~(~I(x) * b.epsilon), b.sigma | ~(T(x, x) * b.epsilon));
  });

  add("sigma-omega", "sigma * Omega = eps  and  sigma * Omega^ = sigma | ~(TOP * eps)", [](Ctx& c) {
    const auto& b = bundle(c, c.set("X", SizeClass::Power));
    const auto& x = b.base;
    c.eq("upward", b.sigma * b.omega, b.epsilon);
    c.eq("downward", b.sigma * cv(b.omega), b.sigma | ~(T(x, x) * b.epsilon));
  });

  add("eps-split", "eps = sigma | (eps & ~(TOP * sigma))", [](Ctx& c) {
    const auto& b = bundle(c, c.set("X", SizeClass::Power));
    const auto& x = b.base;
    c.eq("split", b.epsilon, b.sigma | (b.epsilon & ~(T(x, x) * b.sigma)));
  });

  add("eps-nonsingleton", "~I * eps & ~(~I * sigma) = TOP * eps & ~(TOP * sigma)", [](Ctx& c) {
    const auto& b = bundle(c, c.set("X", SizeClass::Power));
    const auto& x = b.base;
    c.eq("sets with another member", (~I(x) * b.epsilon) & ~(~I(x) * b.sigma),
         (T(x, x) * b.epsilon) & ~(T(x, x) * b.sigma));
  });

  add("omega-nonempty", "Omega & eps^ * eps = Omega & eps^ * TOP", [](Ctx& c) {
    const auto& b = bundle(c, c.set("X", SizeClass::Power));
    const auto& e = b.epsilon;
    c.eq("nonempty lower bounds", b.omega & (cv(e) * e), b.omega & (cv(e) * T(b.base, b.power)));
  });

  add("omega-nonempty-members", "(Omega & eps^ * eps) * eps^ = eps^ * TOP", [](Ctx& c) {
    const auto& b = bundle(c, c.set("X", SizeClass::Power));
    const auto& e = b.epsilon;
    c.eq("members", (b.omega & (cv(e) * e)) * cv(e), cv(e) * T(b.base, b.base));
  });

  add("omega-overlap", "(Omega & eps^ * TOP)^ * (Omega & eps^ * TOP) = eps^ * eps", [](Ctx& c) {
    const auto& b = bundle(c, c.set("X", SizeClass::Power));
    const auto& e = b.epsilon;
    const auto m = b.omega & (cv(e) * T(b.base, b.power));
    c.eq("overlap", cv(m) * m, cv(e) * e);
  });

  add("quotient-powerset", "Omega' = ~(eps^ * ~(Xi * eps)) preorder; Q = syq(Xi*eps, Xi*eps) = Omega' & Omega'^; eps * Q = Xi * eps",
      [](Ctx& c) {
        auto x = c.set("X", SizeClass::Power);
        auto xi = c.equivalence("Xi", x);
        const auto& b = bundle(c, x);
        const auto& e = b.epsilon;
        const auto om = ~(cv(e) * ~(xi * e));
        c.holds("Omega' is a preorder", is_preorder(om), {{"Omega'", om}});
        const auto q = syq(xi * e, xi * e);
        c.holds("Q is an equivalence", is_equivalence(q), {{"Q", q}});
        c.eq("Q = Omega' & Omega'^", q, om & cv(om));
        c.eq("eps * Q = Xi * eps", e * q, xi * e);
      });

  add("quotient-membership", "eps_Xi = xi^ * eps * eta is a membership;  xi^ * eps = eps_Xi * eta^;  Omega' * eta = eta * Omega_Xi",
      [](Ctx& c) {
        auto x = c.set("X", SizeClass::Power);
        auto xi = c.equivalence("Xi", x);
        const auto qb = quotient_membership(xi);
        c.holds("all quotient claims", verify(qb).empty());
        c.eq("Q = eta * eta^", qb.Q, qb.eta * cv(qb.eta));
        c.holds("eta surjective mapping", is_mapping(qb.eta) && is_surjective(qb.eta), {{"eta", qb.eta}});
        c.holds("eps_Xi is a membership", is_membership(qb.epsilon_xi), {{"eps_Xi", qb.epsilon_xi}});
        c.eq("xi^ * eps = eps_Xi * eta^", cv(qb.xi) * qb.membership.epsilon, qb.epsilon_xi * cv(qb.eta));
        c.eq("Omega' * eta = eta * Omega_Xi", qb.omega_prime * qb.eta, qb.eta * qb.omega_xi);
        c.holds("quotient powerset size", qb.quotient_power.size() == std::size_t{1} << qb.quotient_universe.size());
      });
}

}  // namespace relkit::laws
