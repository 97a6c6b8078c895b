#include "law_util.hpp"

namespace relkit::laws {

using namespace util;

void add_images_laws(std::vector<Law>& out) {
  Adder add(out, "images");
  constexpr auto P = SizeClass::Power;

  add("exim-matches-oracle", "theta_R = syq(R^ * eps, eps') = pointwise image", [](Ctx& c) {
    auto x = c.set("X", P), y = c.set("Y", P);
    auto r = c.rel("R", x, y);
    const auto th = existential_image(r);
    c.eq("fast path vs oracle", th, oracle::exim(r));
    c.eq("fast path vs syq", th, existential_image_syq(r));
    c.holds("theta_R is a mapping", is_mapping(th));
  });

  add("imim-matches-oracle", "theta_{R^} = syq(R * eps', eps) = pointwise preimage", [](Ctx& c) {
    auto x = c.set("X", P), y = c.set("Y", P);
    auto r = c.rel("R", x, y);
    const auto th = inverse_image(r);
    c.eq("fast path vs oracle", th, oracle::imim(r));
    c.eq("fast path vs syq", th, inverse_image_syq(r));
  });

  add("power-relator-matches-oracle", "zeta_R = eps \\ (R * eps') & (eps^ * R) / eps'^ = mutual cover", [](Ctx& c) {
    auto x = c.set("X", P), y = c.set("Y", P);
    auto r = c.rel("R", x, y);
    const auto& e = bundle(c, x).epsilon;
    const auto& e2 = bundle(c, y).epsilon;
    const auto z = power_relator(r);
    c.eq("formula vs oracle", z, oracle::power_relator(r));
    c.eq("residual form", z, under(e, r * e2) & over(cv(e) * r, cv(e2)));
    c.eq("complement form", z, ~(cv(e) * ~(r * e2)) & ~(~(cv(e) * r) * e2));
  });

  add("power-relator-not-image", "zeta_R != theta_R for R = BOT on {a} -> {b}", [](Ctx& c) {
    auto x = c.pool().universe("X", 1), y = c.pool().universe("Y", 1);
    const auto r = c.input("R", B(x, y));
    c.holds("zeta differs from theta", power_relator(r) != existential_image(r),
            {{"zeta", power_relator(r)}, {"theta", existential_image(r)}});
  });

  add("image-order-mapping", "f mapping: Omega' * theta_{f^} <= theta_{f^} * Omega;  Omega * theta_{f^}^ = theta_f * Omega'",
      [](Ctx& c) {
        auto x = c.set("X", P), y = c.set("Y", P);
        auto f = c.mapping("f", x, y);
        const auto& ox = bundle(c, x).omega;
        const auto& oy = bundle(c, y).omega;
        const auto inv = inverse_image(f);
        c.le("inverse image is monotone", oy * inv, inv * ox);
        c.eq("adjunction", ox * cv(inv), existential_image(f) * oy);
      });

  add("image-singletons", "sigma_X * theta_{R^}^ * sigma_Y^ <= R;  eps_X * theta_{R^}^ * sigma_Y^ = R", [](Ctx& c) {
    auto x = c.set("X", P), y = c.set("Y", P);
    auto r = c.rel("R", x, y);
    const auto& bx = bundle(c, x);
    const auto& by = bundle(c, y);
    const auto back = cv(inverse_image(r)) * cv(by.sigma);
    c.le("singletons", bx.sigma * back, r);
    c.eq("membership", bx.epsilon * back, r);
  });

  add("image-singletons-mapping", "f mapping: sigma_X * theta_f = f * sigma_Y", [](Ctx& c) {
    auto x = c.set("X", P), y = c.set("Y", P);
    auto f = c.mapping("f", x, y);
    c.eq("singletons commute", bundle(c, x).sigma * existential_image(f), f * bundle(c, y).sigma);
  });

  add("power-relator-inherits", "R univalent/surjective/total/injective => zeta_R likewise", [](Ctx& c) {
    auto x = c.set("X", P), y = c.set("Y", P);
    switch (c.choose(4)) {
      case 0: {
        auto r = c.univalent("R", x, y);
        c.holds("univalent", is_univalent(power_relator(r)), {{"zeta", power_relator(r)}});
        break;
      }
      case 1: {
        auto r = c.surjective("R", x, y);
        c.holds("surjective", is_surjective(power_relator(r)), {{"zeta", power_relator(r)}});
        break;
      }
      case 2: {
        auto r = c.total("R", x, y);
        c.holds("total", is_total(power_relator(r)), {{"zeta", power_relator(r)}});
        break;
      }
      default: {
        auto r = c.injective("R", x, y);
        c.holds("injective", is_injective(power_relator(r)), {{"zeta", power_relator(r)}});
        break;
      }
    }
  });

  add("power-relator-mapping", "f mapping => zeta_f = theta_f", [](Ctx& c) {
    auto x = c.set("X", P), y = c.set("Y", P);
    auto f = c.mapping("f", x, y);
    c.eq("zeta_f = theta_f", power_relator(f), existential_image(f));
  });

  add("inverse-image-surjective", "f surjective mapping: theta_{f^}^ univalent;  theta_f & theta_{f^}^ * TOP = theta_{f^}^", [](Ctx& c) {
    auto x = c.set("X", P), y = c.set("Y", P);
    auto f = c.surjective_mapping("f", x, y);
    const auto back = cv(inverse_image(f));
    c.holds("univalent", is_univalent(back), {{"theta_{f^}^", back}});
    c.eq("restriction", existential_image(f) & (back * T(back.tgt(), back.tgt())), back);
  });

  add("inverse-image-sandwich", "f mapping: theta_{f^}^ * theta_{f^} * theta_f = theta_{f^}^ * theta_f^ * theta_f", [](Ctx& c) {
    auto x = c.set("X", P), y = c.set("Y", P);
    auto f = c.mapping("f", x, y);
    const auto inv = inverse_image(f), th = existential_image(f);
    c.eq("sandwich", cv(inv) * inv * th, cv(inv) * cv(th) * th);
  });

  add("inverse-image-domain", "f mapping: theta_{f^}^ * TOP & theta_f = theta_{f^}^ & TOP * theta_f", [](Ctx& c) {
    auto x = c.set("X", P), y = c.set("Y", P);
    auto f = c.mapping("f", x, y);
    const auto back = cv(inverse_image(f)), th = existential_image(f);
    const auto& px = back.src();
    const auto& py = back.tgt();
    c.eq("domain restriction", (back * T(py, py)) & th, back & (T(px, px) * th));
  });

  add("inverse-image-below", "f surjective mapping: theta_{f^}^ <= theta_f, i.e. syq(eps_X, f * eps_Y) <= syq(f^ * eps_X, eps_Y)", [](Ctx& c) {
    auto x = c.set("X", P), y = c.set("Y", P);
    auto f = c.surjective_mapping("f", x, y);
    c.le("inverse below direct", cv(inverse_image(f)), existential_image(f));
    const auto& ex = bundle(c, x).epsilon;
    const auto& ey = bundle(c, y).epsilon;
    c.le("syq form", syq(ex, f * ey), syq(cv(f) * ex, ey));
  });

  add("image-functorial", "theta_{R * S} = theta_R * theta_S", [](Ctx& c) {
    auto x = c.set("X", P), y = c.set("Y", P), z = c.set("Z", P);
    auto r = c.rel("R", x, y);
    auto s = c.rel("S", y, z);
    c.eq("multiplicative", existential_image(r * s), existential_image(r) * existential_image(s));
    c.eq("identity", existential_image(I(x)), I(Universe::power(x)));
  });
}

}  // namespace relkit::laws
