#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "relkit/error.hpp"
#include "relkit/finset.hpp"
#include "relkit/relation.hpp"

namespace relkit {

// epsilon(x, S) iff x is in S, with S read by binary counting.
inline Relation membership_relation(const Universe& base) {
  const Universe p = Universe::power(base);
  RelBuilder b(base, p);
  for (std::size_t s = 0; s < p.size(); ++s)
    for (std::size_t x = 0; x < base.size(); ++x)
      if ((s >> x) & 1U) b.set(x, s);
  return std::move(b).freeze();
}

struct MembershipBundle {
  Universe base;
  Universe power;
  Relation epsilon;
  Relation omega;
  Relation sigma;
};

inline MembershipBundle membership(const Universe& base) {
  MembershipBundle b{base, Universe::power(base), {}, {}, {}};
  b.epsilon = membership_relation(base);
  b.omega = negate(compose(converse(b.epsilon), negate(b.epsilon)));
  b.sigma = syq(identity(base), b.epsilon);
  return b;
}

inline Relation atoms(const MembershipBundle& b) { return compose(converse(b.sigma), b.sigma); }

inline Relation atoms_vector(const MembershipBundle& b) {
  return compose(atoms(b), top(b.power, Universe::unit()));
}

// Both membership axioms: syq(e,e) is the identity and every subset of the
// source occurs as a column.
inline bool is_membership(const Relation& e) {
  if (syq(e, e) != identity(e.tgt())) return false;
  const Relation all = membership_relation(e.src());
  return compose(top(e.src(), e.tgt()), syq(e, all)) == top(e.src(), all.tgt());
}

namespace detail {

inline void require_power_source(const MembershipBundle& b, const Relation& x, const char* what) {
  if (x.src() != b.power)
    throw Error(Errc::TypeMismatch, std::string(what) + ": expected source " + b.power.name() + ", got " + x.src().name());
}

inline void require_power_target(const MembershipBundle& b, const Relation& y, const char* what) {
  if (y.tgt() != b.power)
    throw Error(Errc::TypeMismatch, std::string(what) + ": expected target " + b.power.name() + ", got " + y.tgt().name());
}

}  // namespace detail

// Column-wise: column k of the result is the point of the union of the subsets in column k of X.
inline Relation lub(const MembershipBundle& b, const Relation& x) {
  detail::require_power_source(b, x, "lub");
  return syq(b.epsilon, compose(b.epsilon, x));
}

inline Relation glb(const MembershipBundle& b, const Relation& x) {
  detail::require_power_source(b, x, "glb");
  const Relation ne = negate(b.epsilon);
  return syq(ne, compose(ne, x));
}

// Row-wise forms: row k of Y: K -> pow(X) selects subsets, the result row is their union point.
inline Relation lubR(const MembershipBundle& b, const Relation& y) {
  detail::require_power_target(b, y, "lubR");
  return syq(compose(b.epsilon, converse(y)), b.epsilon);
}

inline Relation glbR(const MembershipBundle& b, const Relation& y) {
  detail::require_power_target(b, y, "glbR");
  const Relation ne = negate(b.epsilon);
  return syq(compose(ne, converse(y)), ne);
}

struct Projection {
  Universe quotient;
  Relation xi;
};

// Each class is represented by its least-index element and labelled "[repr]".
inline Projection natural_projection(const Relation& equiv, const std::string& name = {}) {
  if (equiv.src() != equiv.tgt() || !is_equivalence(equiv))
    throw Error(Errc::NotAnEquivalence, "relation on " + equiv.src().name() + " is not an equivalence");
  const Universe& u = equiv.src();
  std::vector<std::size_t> cls(u.size());
  std::vector<std::string> labels;
  std::vector<std::size_t> reprs;
  for (std::size_t i = 0; i < u.size(); ++i) {
    std::size_t found = reprs.size();
    for (std::size_t c = 0; c < reprs.size(); ++c)
      if (equiv(reprs[c], i)) {
        found = c;
        break;
      }
    if (found == reprs.size()) {
      reprs.push_back(i);
      labels.push_back("[" + u.label(i) + "]");
    }
    cls[i] = found;
  }
  Universe q = Universe::atomic(name.empty() ? u.name() + "/~" : name, std::move(labels));
  RelBuilder b(u, q);
  for (std::size_t i = 0; i < u.size(); ++i) b.set(i, cls[i]);
  return {q, std::move(b).freeze()};
}

struct QuotientBundle {
  Relation equivalence;
  Universe quotient_universe;
  Relation xi;
  MembershipBundle membership;
  Relation omega_prime;
  Relation Q;
  Universe quotient_power;
  Relation eta;
  Relation epsilon_xi;
  Relation omega_xi;
};

// Names of the quotient claims that fail; empty when all hold.
inline std::vector<std::string> verify(const QuotientBundle& q) {
  std::vector<std::string> bad;
  const auto& e = q.membership.epsilon;
  if (!is_preorder(q.omega_prime)) bad.push_back("Omega' is a preorder");
  if (!is_equivalence(q.Q)) bad.push_back("Q is an equivalence");
  if (q.Q != intersect(q.omega_prime, converse(q.omega_prime))) bad.push_back("Q = Omega' & Omega'^");
  if (q.Q != compose(q.eta, converse(q.eta))) bad.push_back("Q = eta * eta^");
  if (compose(e, q.Q) != compose(q.equivalence, e)) bad.push_back("eps * Q = Xi * eps");
  if (!is_membership(q.epsilon_xi)) bad.push_back("eps_Xi is a membership relation");
  if (compose(converse(q.xi), e) != compose(q.epsilon_xi, converse(q.eta))) bad.push_back("xi^ * eps = eps_Xi * eta^");
  if (compose(q.omega_prime, q.eta) != compose(q.eta, q.omega_xi)) bad.push_back("Omega' * eta = eta * Omega_Xi");
  if (!is_mapping(q.xi) || !is_surjective(q.xi)) bad.push_back("xi is a surjective mapping");
  if (compose(q.xi, converse(q.xi)) != q.equivalence) bad.push_back("xi * xi^ = Xi");
  return bad;
}

inline QuotientBundle quotient_membership(const Relation& equiv) {
  auto proj = natural_projection(equiv);
  QuotientBundle q{equiv, proj.quotient, proj.xi, membership(equiv.src()), {}, {}, {}, {}, {}, {}};
  const auto& e = q.membership.epsilon;
  q.omega_prime = negate(compose(converse(e), negate(compose(equiv, e))));
  q.Q = intersect(q.omega_prime, converse(q.omega_prime));
  auto pq = natural_projection(q.Q, q.membership.power.name() + "/~");
  q.quotient_power = pq.quotient;
  q.eta = pq.xi;
  q.epsilon_xi = compose(compose(converse(q.xi), e), q.eta);
  q.omega_xi = negate(compose(converse(q.epsilon_xi), negate(q.epsilon_xi)));
  auto bad = verify(q);
  if (!bad.empty()) throw std::logic_error("quotient membership: " + bad.front());
  return q;
}

}  // namespace relkit
