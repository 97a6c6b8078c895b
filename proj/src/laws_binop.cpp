#include "law_util.hpp"

namespace relkit::laws {

using namespace util;

namespace {

Relation pointwise(const Universe& x, const std::function<bool(std::size_t)>& pred) {
  return tabulate(x, one(), [&](std::size_t i, std::size_t) { return pred(i); });
}

bool forall(std::size_t n, const std::function<bool(std::size_t)>& p) {
  for (std::size_t i = 0; i < n; ++i)
    if (!p(i)) return false;
  return true;
}

}  // namespace

void add_binop_laws(std::vector<Law>& out) {
  Adder add(out, "binop");

  add("invariant-elements", "~(pi^ * ~((A & P*A)*TOP)) = ~(rho^ * ~(...)) = pi \\ ((A & P*A)*TOP) = {x | x*y = y*x for all y}",
      [](Ctx& c) {
        auto x = c.set("X");
        auto op = c.binop("A", x);
        const auto inv = invariant_elements(op);
        c.eq("vs oracle", inv, oracle::invariant_elements(op.table()));
        c.eq("via rho", inv, invariant_elements_via_rho(op));
        c.eq("via residual", inv, invariant_elements_via_residual(op));
      });

  add("commutative-associative", "P*A = A iff x*y = y*x;  kron(A,I)*A = T*kron(I,A)*A iff (x*y)*z = x*(y*z)", [](Ctx& c) {
    auto x = c.set("X");
    auto op = c.binop("A", x);
    const std::size_t n = x.size();
    const bool comm = forall(n * n, [&](std::size_t i) { return op.apply(i / n, i % n) == op.apply(i % n, i / n); });
    const bool assoc_ok = forall(n * n * n, [&](std::size_t i) {
      const std::size_t a = i / (n * n), b = i / n % n, d = i % n;
      return op.apply(op.apply(a, b), d) == op.apply(a, op.apply(b, d));
    });
    c.holds("commutative", is_commutative(op) == comm);
    c.holds("associative", is_associative(op) == assoc_ok);
  });

  add("neutral-elements", "n_r = ~(rho^ * (~A & pi) * TOP), n_l = ~(pi^ * (~A & rho) * TOP) match x*e = x, e*x = x", [](Ctx& c) {
    auto x = c.set("X");
    auto op = c.binop("A", x);
    const std::size_t n = x.size();
    const auto nr = pointwise(x, [&](std::size_t e) { return forall(n, [&](std::size_t y) { return op.apply(y, e) == y; }); });
    const auto nl = pointwise(x, [&](std::size_t e) { return forall(n, [&](std::size_t y) { return op.apply(e, y) == y; }); });
    c.eq("right", right_neutrals(op), nr);
    c.eq("left", left_neutrals(op), nl);
    c.eq("both", neutrals(op), nr & nl);
  });

  add("right-neutral-delta", "delta_r = I & A*pi^;  ~(rho^ * ~(delta_r*TOP)) = n_r", [](Ctx& c) {
    auto x = c.set("X");
    auto op = c.binop("A", x);
    c.eq("alternative form", right_neutrals_via_delta(op), right_neutrals(op));
  });

  add("right-neutral-cancels", "e right-neutral point: A^ * join(I, e*TOP) = I", [](Ctx& c) {
    auto x = c.set("X");
    auto op = c.binop("A", x);
    std::vector<std::size_t> nr;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (right_neutrals(op)(i, 0)) nr.push_back(i);
    if (nr.empty()) c.discard();
    const auto e = c.input("e", relkit::point(x, nr[c.choose(nr.size())]));
    c.eq("A^ * (pi & rho*e*TOP) = I", cv(op.table()) * join(I(x), e * T(one(), x)), I(x));
  });

  add("neutral-points-agree", "points e_l in n_l and e_r in n_r coincide", [](Ctx& c) {
    auto x = c.set("X");
    auto op = c.binop("A", x);
    const auto nl = left_neutrals(op), nr = right_neutrals(op);
    if (nl.count() == 0 || nr.count() == 0) c.discard();
    c.eq("n_l = n_r", nl, nr);
    c.holds("a single point", is_point(nl), {{"n_l", nl}});
  });

  add("invertible-elements", "~(~(pi^*A)*TOP) = {x | x*_ onto};  pi^*A = TOP iff all left-invertible;  and rho duals", [](Ctx& c) {
    auto x = c.set("X");
    auto op = c.binop("A", x);
    const std::size_t n = x.size();
    const auto li = pointwise(x, [&](std::size_t a) {
      return forall(n, [&](std::size_t z) {
        for (std::size_t b = 0; b < n; ++b)
          if (op.apply(a, b) == z) return true;
        return false;
      });
    });
    const auto ri = pointwise(x, [&](std::size_t b) {
      return forall(n, [&](std::size_t z) {
        for (std::size_t a = 0; a < n; ++a)
          if (op.apply(a, b) == z) return true;
        return false;
      });
    });
    c.eq("left", left_invertible_elements(op), li);
    c.eq("right", right_invertible_elements(op), ri);
    c.holds("allows left inversion", allows_left_inversion(op) == (li == T(x, one())));
    c.holds("allows right inversion", allows_right_inversion(op) == (ri == T(x, one())));
  });

  add("right-inverse-surjective", "A allows right-inversion, e point => TOP * i_r = TOP", [](Ctx& c) {
    auto x = c.set("X");
    auto op = c.binop("A", x);
    auto e = c.point("e", x);
    if (!allows_right_inversion(op)) c.discard();
    const auto ir = right_inverse_map(op, e);
    c.eq("TOP * i_r = TOP", T(x, x) * ir, T(x, x));
  });

  add("section-maps", "f = (rho & pi*x*TOP)^ mapping, f*rho = I, rho <= f\\I;  g = (pi & rho*x*TOP)^, g*pi = I, pi <= g\\I", [](Ctx& c) {
    auto x = c.set("X");
    auto pt = c.point("x", x);
    const auto& w = prod(c, x, x);
    const auto s = section_maps(pt, w);
    c.holds("f mapping", is_mapping(s.f), {{"f", s.f}});
    c.eq("f * rho = I", s.f * w.rho, I(x));
    c.le("rho <= f \\ I", w.rho, under(s.f, I(x)));
    c.holds("g mapping", is_mapping(s.g), {{"g", s.g}});
    c.eq("g * pi = I", s.g * w.pi, I(x));
    c.le("pi <= g \\ I", w.pi, under(s.g, I(x)));
  });

  add("distributivity", "fork(kron(pi,I)*J, kron(rho,I)*J) * M = kron(M,I) * J iff (a M b) J c = (a J c) M (b J c)", [](Ctx& c) {
    auto x = c.set("X");
    auto j = c.binop("J", x);
    auto m = c.binop("M", x);
    const std::size_t n = x.size();
    const bool ok = forall(n * n * n, [&](std::size_t i) {
      const std::size_t a = i / (n * n), b = i / n % n, d = i % n;
      return j.apply(m.apply(a, b), d) == m.apply(j.apply(a, d), j.apply(b, d));
    });
    c.holds("relational and pointwise agree", distributes_over(j, m) == ok);
  });
}

}  // namespace relkit::laws
