#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "relkit/error.hpp"
#include "relkit/finset.hpp"
#include "relkit/powerset.hpp"
#include "relkit/relation.hpp"

namespace relkit {

struct ProductWitness {
  Universe left, right, carrier;
  Relation pi, rho;
};

struct SumWitness {
  Universe left, right, carrier;
  Relation iota, kappa;
};

inline bool product_axioms_hold(const ProductWitness& w) {
  return compose(converse(w.pi), w.pi) == identity(w.left) && compose(converse(w.rho), w.rho) == identity(w.right) &&
         intersect(compose(w.pi, converse(w.pi)), compose(w.rho, converse(w.rho))) == identity(w.carrier) &&
         compose(converse(w.pi), w.rho) == top(w.left, w.right);
}

inline bool sum_axioms_hold(const SumWitness& w) {
  return compose(w.iota, converse(w.iota)) == identity(w.left) && compose(w.kappa, converse(w.kappa)) == identity(w.right) &&
         unite(compose(converse(w.iota), w.iota), compose(converse(w.kappa), w.kappa)) == identity(w.carrier) &&
         compose(w.iota, converse(w.kappa)) == bottom(w.left, w.right);
}

namespace detail {

inline ProductWitness projections(const Universe& x, const Universe& y) {
  const Universe c = Universe::pair(x, y);
  const std::size_t ny = y.size();
  return {x, y, c, tabulate(c, x, [&](std::size_t i, std::size_t j) { return i / ny == j; }),
          tabulate(c, y, [&](std::size_t i, std::size_t j) { return i % ny == j; })};
}

}  // namespace detail

// With an empty factor the projections cannot be surjective, so the axioms
// are only checked for nonempty factors.
inline ProductWitness product(const Universe& x, const Universe& y) {
  auto w = detail::projections(x, y);
  if (x.size() > 0 && y.size() > 0 && !product_axioms_hold(w))
    throw std::logic_error("product axioms violated for " + w.carrier.name());
  return w;
}

inline SumWitness sum(const Universe& x, const Universe& y) {
  const Universe c = Universe::sum(x, y);
  const std::size_t nx = x.size();
  SumWitness w{x, y, c, tabulate(x, c, [](std::size_t i, std::size_t j) { return i == j; }),
               tabulate(y, c, [&](std::size_t i, std::size_t j) { return nx + i == j; })};
  if (!sum_axioms_hold(w)) throw std::logic_error("sum axioms violated for " + c.name());
  return w;
}

namespace detail {

inline const Universe& require_pair(const Universe& u, const char* what) {
  if (!u.is_pair()) throw Error(Errc::TypeMismatch, std::string(what) + ": " + u.name() + " is not a product");
  return u;
}

inline ProductWitness split(const Universe& u, const char* what) {
  require_pair(u, what);
  return projections(u.left(), u.right());
}

}  // namespace detail

// (x,y) -> (u,v) iff A(x,u) and B(y,v).
inline Relation kron(const Relation& a, const Relation& b) {
  const auto s = detail::projections(a.src(), b.src());
  const auto t = detail::projections(a.tgt(), b.tgt());
  return intersect(compose(compose(s.pi, a), converse(t.pi)), compose(compose(s.rho, b), converse(t.rho)));
}

inline Relation fork(const Relation& c, const Relation& d) {
  if (c.src() != d.src())
    throw Error(Errc::TypeMismatch, "fork: sources " + c.src().name() + " and " + d.src().name() + " differ");
  const auto t = detail::projections(c.tgt(), d.tgt());
  return intersect(compose(c, converse(t.pi)), compose(d, converse(t.rho)));
}

inline Relation join(const Relation& e, const Relation& f) {
  if (e.tgt() != f.tgt())
    throw Error(Errc::TypeMismatch, "join: targets " + e.tgt().name() + " and " + f.tgt().name() + " differ");
  const auto s = detail::projections(e.src(), f.src());
  return intersect(compose(s.pi, e), compose(s.rho, f));
}

// P: (x,y) -> (y,x).
inline Relation swap(const Universe& x, const Universe& y) {
  const auto a = detail::projections(x, y);
  const auto b = detail::projections(y, x);
  return intersect(compose(a.pi, converse(b.rho)), compose(a.rho, converse(b.pi)));
}

// T: ((x,y),z) -> (x,(y,z)).
inline Relation assoc(const Universe& x, const Universe& y, const Universe& z) {
  const auto inner = detail::projections(x, y);
  const auto outer = detail::projections(inner.carrier, z);
  return fork(compose(outer.pi, inner.pi), kron(inner.rho, identity(z)));
}

inline Relation vec(const Relation& r) {
  const auto w = detail::projections(r.src(), r.tgt());
  return compose(intersect(compose(w.pi, r), w.rho), top(r.tgt(), Universe::unit()));
}

inline Relation unvec(const Relation& v) {
  if (v.tgt() != Universe::unit()) throw Error(Errc::TypeMismatch, "unvec: " + v.tgt().name() + " is not the unit");
  const auto w = detail::split(v.src(), "unvec");
  return compose(converse(w.pi), intersect(compose(v, top(Universe::unit(), w.right)), w.rho));
}

// Points of pow(X*Y) standing for relations X -> Y.
inline Relation relation_point(const Relation& r) {
  return syq(membership_relation(Universe::pair(r.src(), r.tgt())), vec(r));
}

inline Relation identity_point(const Universe& x) {
  const Relation e = membership_relation(Universe::pair(x, x));
  return syq(e, vec(identity(x)));
}

inline Relation bot_point(const Universe& x, const Universe& y) {
  const Relation e = membership_relation(Universe::pair(x, y));
  return syq(e, bottom(e.src(), Universe::unit()));
}

inline Relation top_point(const Universe& x, const Universe& y) {
  const Relation e = membership_relation(Universe::pair(x, y));
  return syq(e, top(e.src(), Universe::unit()));
}

inline Relation decode(const Relation& p) {
  if (!p.src().is_power()) throw Error(Errc::TypeMismatch, "decode: " + p.src().name() + " is not a powerset");
  detail::require_pair(p.src().base(), "decode");
  return unvec(compose(membership_relation(p.src().base()), p));
}

// The transposition map pow(X*Y) -> pow(Y*X).
inline Relation transposition_point_map(const Universe& x, const Universe& y) {
  const Relation e = membership_relation(Universe::pair(x, y));
  const Relation e2 = membership_relation(Universe::pair(y, x));
  return syq(compose(converse(swap(x, y)), e), e2);
}

inline bool addition_theorem_check(const Relation& q, const Relation& r, const Relation& s) {
  if (!s.src().is_sum()) throw Error(Errc::TypeMismatch, "addition theorem: " + s.src().name() + " is not a sum");
  if (s.src().left() != q.src() || s.src().right() != r.src())
    throw Error(Errc::TypeMismatch, "addition theorem: " + s.src().name() + " does not match " + q.src().name() + " and " + r.src().name());
  const auto sw = sum(q.src(), r.src());
  const auto pw = detail::projections(q.tgt(), r.tgt());
  const Relation p = unite(compose(compose(converse(sw.iota), q), converse(pw.pi)),
                           compose(compose(converse(sw.kappa), r), converse(pw.rho)));
  return syq(s, p) == fork(syq(compose(sw.iota, s), q), syq(compose(sw.kappa, s), r));
}

struct SumPowerIso {
  SumWitness sum;
  ProductWitness product;
  MembershipBundle mx, my, msum;
  Relation epsilon_plus;
  Relation phi;
  Relation omega_plus;
};

inline SumPowerIso sum_power_iso(const Universe& x, const Universe& y) {
  SumPowerIso s{relkit::sum(x, y), {}, membership(x), membership(y), {}, {}, {}, {}};
  s.product = relkit::product(s.mx.power, s.my.power);
  s.msum = membership(s.sum.carrier);
  s.epsilon_plus = unite(compose(compose(converse(s.sum.iota), s.mx.epsilon), converse(s.product.pi)),
                         compose(compose(converse(s.sum.kappa), s.my.epsilon), converse(s.product.rho)));
  s.phi = syq(s.msum.epsilon, s.epsilon_plus);
  s.omega_plus = negate(compose(converse(s.epsilon_plus), negate(s.epsilon_plus)));
  return s;
}

}  // namespace relkit
