#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "relkit/binop.hpp"
#include "relkit/error.hpp"
#include "relkit/finset.hpp"
#include "relkit/powerset.hpp"
#include "relkit/prodsum.hpp"
#include "relkit/relation.hpp"

namespace relkit {

struct LiftedAlgebra {
  Universe base;
  MembershipBundle bundle;
  ProductWitness pp;  // pow(X) * pow(X)
  Relation N;
  Relation meet;
  Relation join;
  Relation bot_pt;
  Relation top_pt;

  const Universe& power() const { return bundle.power; }
  const Relation& epsilon() const { return bundle.epsilon; }
  const Relation& omega() const { return bundle.omega; }
};

// Meet and join by intersecting and uniting subset indices directly.
inline Relation direct_meet_table(const Universe& power, const ProductWitness& pp) {
  RelBuilder b(pp.carrier, power);
  for (std::size_t i = 0; i < pp.carrier.size(); ++i) {
    auto [l, r] = pp.carrier.pair_split(i);
    b.set(i, l & r);
  }
  return std::move(b).freeze();
}

inline Relation direct_join_table(const Universe& power, const ProductWitness& pp) {
  RelBuilder b(pp.carrier, power);
  for (std::size_t i = 0; i < pp.carrier.size(); ++i) {
    auto [l, r] = pp.carrier.pair_split(i);
    b.set(i, l | r);
  }
  return std::move(b).freeze();
}

inline Relation negation_pair(const LiftedAlgebra& a) { return kron(a.N, a.N); }

inline BinOp meet_op(const LiftedAlgebra& a) { return BinOp(a.power(), a.meet); }
inline BinOp join_op(const LiftedAlgebra& a) { return BinOp(a.power(), a.join); }

// Meet and join computed through the row-wise greatest lower and least upper bound.
inline Relation meet_via_glb(const LiftedAlgebra& a) { return glbR(a.bundle, unite(a.pp.pi, a.pp.rho)); }
inline Relation join_via_lub(const LiftedAlgebra& a) { return lubR(a.bundle, unite(a.pp.pi, a.pp.rho)); }

inline bool three_way_agreement(const LiftedAlgebra& a) {
  return a.meet == meet_via_glb(a) && a.meet == direct_meet_table(a.power(), a.pp) && a.join == join_via_lub(a) &&
         a.join == direct_join_table(a.power(), a.pp);
}

inline LiftedAlgebra lifted(const Universe& base) {
  LiftedAlgebra a{base, membership(base), {}, {}, {}, {}, {}, {}};
  a.pp = product(a.bundle.power, a.bundle.power);
  const Relation& e = a.bundle.epsilon;
  const Relation ne = negate(e);
  a.N = syq(ne, e);
  a.meet = syq(fork(e, e), e);
  a.join = syq(intersect(compose(ne, converse(a.pp.pi)), compose(ne, converse(a.pp.rho))), ne);
  a.bot_pt = syq(e, bottom(base, Universe::unit()));
  a.top_pt = syq(e, top(base, Universe::unit()));

  if (!is_bijective_mapping(a.N) || compose(a.N, a.N) != identity(a.power()))
    throw std::logic_error("lifted negation is not a bijective involution");
  if (!is_mapping(a.meet) || !is_surjective(a.meet) || !is_mapping(a.join) || !is_surjective(a.join))
    throw std::logic_error("lifted meet or join is not a surjective mapping");
  if (!is_point(a.bot_pt) || !is_point(a.top_pt)) throw std::logic_error("lifted bottom or top is not a point");
  if (!three_way_agreement(a)) throw std::logic_error("lifted meet or join disagrees with the direct table");
  return a;
}

// U = eps * e and e = syq(eps, U).
inline Relation subset_of_point(const MembershipBundle& b, const Relation& u) {
  if (u.src() != b.base || u.tgt() != Universe::unit())
    throw Error(Errc::TypeMismatch, "subset_of_point expects a vector " + b.base.name() + " -> 1");
  return syq(b.epsilon, u);
}

inline Relation point_to_subset(const MembershipBundle& b, const Relation& e) {
  require_point(e, "point_to_subset");
  if (e.src() != b.power) throw Error(Errc::TypeMismatch, "point_to_subset: point lives in " + e.src().name());
  return compose(b.epsilon, e);
}

}  // namespace relkit
