#pragma once

#include <string>
#include <utility>
#include <vector>

#include "relkit/binop.hpp"
#include "relkit/boolalg.hpp"
#include "relkit/images.hpp"
#include "relkit/laws.hpp"
#include "relkit/oracle.hpp"
#include "relkit/powerset.hpp"
#include "relkit/prodsum.hpp"
#include "relkit/relation.hpp"

namespace relkit::laws::util {

inline const Universe& one() {
  static const Universe u = Universe::unit();
  return u;
}

inline Relation I(const Universe& u) { return identity(u); }
inline Relation T(const Universe& a, const Universe& b) { return top(a, b); }
inline Relation B(const Universe& a, const Universe& b) { return bottom(a, b); }
inline Relation cv(const Relation& r) { return converse(r); }

// a \ c and c / b.
inline Relation under(const Relation& a, const Relation& c) { return right_residual(a, c); }
inline Relation over(const Relation& c, const Relation& b) { return left_residual(c, b); }

// r * TOP into the given target.
inline Relation cyl(const Relation& r, const Universe& tgt) { return compose(r, top(r.tgt(), tgt)); }

class Adder {
 public:
  Adder(std::vector<Law>& out, std::string suite) : out_(out), suite_(std::move(suite)) {}
  void operator()(std::string name, std::string anchor, std::function<void(Ctx&)> body) {
    out_.push_back(Law{std::move(name), std::move(anchor), suite_, std::move(body)});
  }

 private:
  std::vector<Law>& out_;
  std::string suite_;
};

// Memo key naming a universe by structure and atom sizes.
inline std::string key(const Universe& u) {
  switch (u.kind()) {
    case Universe::Kind::Atomic: return u.name() + ":" + std::to_string(u.size());
    case Universe::Kind::Unit: return "1";
    case Universe::Kind::Power: return "pow(" + key(u.base()) + ")";
    case Universe::Kind::Pair: return "(" + key(u.left()) + "*" + key(u.right()) + ")";
    case Universe::Kind::Sum: return "(" + key(u.left()) + "+" + key(u.right()) + ")";
  }
  return {};
}

inline const MembershipBundle& bundle(Ctx& c, const Universe& base) {
  return c.pool().memo<MembershipBundle>("membership:" + key(base),
                                         [&] { return membership(base); });
}

inline const LiftedAlgebra& algebra(Ctx& c, const Universe& base) {
  return c.pool().memo<LiftedAlgebra>("lifted:" + key(base), [&] { return lifted(base); });
}

inline const ProductWitness& prod(Ctx& c, const Universe& x, const Universe& y) {
  return c.pool().memo<ProductWitness>(
      "product:" + key(x) + "|" + key(y),
      [&] { return detail::projections(x, y); });
}

}  // namespace relkit::laws::util
