#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "relkit/error.hpp"
#include "relkit/finset.hpp"
#include "relkit/prodsum.hpp"
#include "relkit/relation.hpp"

namespace relkit {

class BinOp {
 public:
  BinOp(Universe carrier, Relation table) : carrier_(std::move(carrier)), product_(product(carrier_, carrier_)), table_(std::move(table)) {
    if (table_.src() != product_.carrier || table_.tgt() != carrier_)
      throw Error(Errc::TypeMismatch, "operation table must be typed " + product_.carrier.name() + " -> " + carrier_.name());
    for (std::size_t i = 0; i < table_.rows(); ++i) {
      const auto hits = table_.successors(i);
      if (hits.size() != 1) {
        auto [l, r] = product_.carrier.pair_split(i);
        throw Error(Errc::NotAMapping, "row " + carrier_.label(l) + ", column " + carrier_.label(r) + " has " +
                                           std::to_string(hits.size()) + " results");
      }
    }
  }

  // rows[l][r] is the index of l*r.
  static BinOp from_table(const Universe& x, const std::vector<std::vector<std::size_t>>& rows) {
    if (rows.size() != x.size())
      throw Error(Errc::NotAMapping, "table has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(x.size()));
    const Universe pair = Universe::pair(x, x);
    RelBuilder b(pair, x);
    for (std::size_t l = 0; l < rows.size(); ++l) {
      if (rows[l].size() != x.size())
        throw Error(Errc::NotAMapping, "row " + x.label(l) + " has " + std::to_string(rows[l].size()) + " entries, expected " +
                                           std::to_string(x.size()));
      for (std::size_t r = 0; r < rows[l].size(); ++r) {
        if (rows[l][r] >= x.size())
          throw Error(Errc::NotAMapping, "row " + x.label(l) + ", column " + x.label(r) + " is outside " + x.name());
        b.set(pair.pair_index(l, r), rows[l][r]);
      }
    }
    return BinOp(x, std::move(b).freeze());
  }

  static BinOp from_labels(const Universe& x, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<std::size_t>> idx(rows.size());
    for (std::size_t l = 0; l < rows.size(); ++l)
      for (std::size_t r = 0; r < rows[l].size(); ++r) {
        auto i = x.index_of(rows[l][r]);
        if (!i) throw Error(Errc::NotAMapping, "row " + std::to_string(l + 1) + ": '" + rows[l][r] + "' is not in " + x.name());
        idx[l].push_back(*i);
      }
    return from_table(x, idx);
  }

  const Universe& carrier() const { return carrier_; }
  const ProductWitness& product_witness() const { return product_; }
  const Relation& table() const { return table_; }
  const Relation& pi() const { return product_.pi; }
  const Relation& rho() const { return product_.rho; }

  std::size_t apply(std::size_t l, std::size_t r) const { return table_.successors(product_.carrier.pair_index(l, r)).front(); }

 private:
  Universe carrier_;
  ProductWitness product_;
  Relation table_;
};

namespace detail {

inline Relation to_unit(const Universe& x) { return top(x, Universe::unit()); }
inline Relation from_unit(const Universe& x) { return top(Universe::unit(), x); }

}  // namespace detail

inline bool is_commutative(const BinOp& op) {
  return compose(swap(op.carrier(), op.carrier()), op.table()) == op.table();
}

inline bool is_associative(const BinOp& op) {
  const Universe& x = op.carrier();
  const Relation id = identity(x);
  return compose(kron(op.table(), id), op.table()) ==
         compose(compose(assoc(x, x, x), kron(id, op.table())), op.table());
}

inline Relation left_invertible_elements(const BinOp& op) {
  return negate(compose(negate(compose(converse(op.pi()), op.table())), detail::to_unit(op.carrier())));
}

inline Relation right_invertible_elements(const BinOp& op) {
  return negate(compose(negate(compose(converse(op.rho()), op.table())), detail::to_unit(op.carrier())));
}

inline bool allows_left_inversion(const BinOp& op) {
  return compose(converse(op.pi()), op.table()) == top(op.carrier(), op.carrier());
}

inline bool allows_right_inversion(const BinOp& op) {
  return compose(converse(op.rho()), op.table()) == top(op.carrier(), op.carrier());
}

namespace detail {

// (A & P*A)*TOP: the pairs on which the operation commutes.
inline Relation commuting_pairs(const BinOp& op) {
  const Relation& a = op.table();
  return compose(intersect(a, compose(swap(op.carrier(), op.carrier()), a)), to_unit(op.carrier()));
}

}  // namespace detail

inline Relation invariant_elements(const BinOp& op) {
  return negate(compose(converse(op.pi()), negate(detail::commuting_pairs(op))));
}

// The same set through rho and through the right residual.
inline Relation invariant_elements_via_rho(const BinOp& op) {
  return negate(compose(converse(op.rho()), negate(detail::commuting_pairs(op))));
}

inline Relation invariant_elements_via_residual(const BinOp& op) {
  return right_residual(op.pi(), detail::commuting_pairs(op));
}

inline Relation right_neutrals(const BinOp& op) {
  const Relation miss = intersect(negate(op.table()), op.pi());
  return negate(compose(compose(converse(op.rho()), miss), detail::to_unit(op.carrier())));
}

inline Relation left_neutrals(const BinOp& op) {
  const Relation miss = intersect(negate(op.table()), op.rho());
  return negate(compose(compose(converse(op.pi()), miss), detail::to_unit(op.carrier())));
}

inline Relation neutrals(const BinOp& op) { return intersect(right_neutrals(op), left_neutrals(op)); }

// Right-neutrals from the pairs whose result equals their left component.
inline Relation right_neutrals_via_delta(const BinOp& op) {
  const Relation delta = intersect(identity(op.product_witness().carrier), compose(op.table(), converse(op.pi())));
  return negate(compose(converse(op.rho()), negate(compose(delta, detail::to_unit(op.product_witness().carrier)))));
}

// x -> { y | x*y = e }.
inline Relation right_inverse_map(const BinOp& op, const Relation& e) {
  require_point(e, "right_inverse_map");
  if (e.src() != op.carrier()) throw Error(Errc::TypeMismatch, "right_inverse_map: point lives in " + e.src().name());
  const Relation hits = compose(compose(op.table(), e), detail::from_unit(op.carrier()));
  return compose(converse(op.pi()), intersect(hits, op.rho()));
}

struct Sections {
  Relation f;  // y -> (x,y)
  Relation g;  // y -> (y,x)
};

inline Sections section_maps(const Relation& x, const ProductWitness& w) {
  require_point(x, "section_map");
  if (x.src() != w.left || w.left != w.right) throw Error(Errc::TypeMismatch, "section_map: point lives in " + x.src().name());
  const Relation fixed = compose(x, detail::from_unit(w.left));
  return {converse(intersect(w.rho, compose(w.pi, fixed))), converse(intersect(w.pi, compose(w.rho, fixed)))};
}

inline Relation section_map(const Relation& x, const ProductWitness& w) { return section_maps(x, w).f; }

// (a M b) J c = (a J c) M (b J c), both operations on the same carrier.
inline bool distributes_over(const BinOp& join_op, const BinOp& meet_op) {
  if (join_op.carrier() != meet_op.carrier())
    throw Error(Errc::TypeMismatch, "distributes_over: carriers " + join_op.carrier().name() + " and " + meet_op.carrier().name());
  const Universe& x = join_op.carrier();
  const Relation id = identity(x);
  const Relation& j = join_op.table();
  const Relation& m = meet_op.table();
  const Relation hat = fork(compose(kron(join_op.pi(), id), j), compose(kron(join_op.rho(), id), j));
  return compose(hat, m) == compose(kron(m, id), j);
}

}  // namespace relkit
