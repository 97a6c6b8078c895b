#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "relkit/error.hpp"
#include "relkit/finset.hpp"

namespace relkit {

class Relation;

// Mutable staging area; freeze() hands the bits to an immutable Relation.
class RelBuilder {
 public:
  RelBuilder(Universe src, Universe tgt)
      : src_(std::move(src)), tgt_(std::move(tgt)), words_((tgt_.size() + 63) / 64),
        bits_(src_.size() * words_, 0) {}

  void set(std::size_t i, std::size_t j, bool v = true) {
    auto& w = bits_[i * words_ + j / 64];
    const std::uint64_t m = std::uint64_t{1} << (j % 64);
    w = v ? (w | m) : (w & ~m);
  }
  bool get(std::size_t i, std::size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U; }
  std::uint64_t* row(std::size_t i) { return bits_.data() + i * words_; }
  std::size_t words() const { return words_; }
  const Universe& src() const { return src_; }
  const Universe& tgt() const { return tgt_; }

  Relation freeze() &&;

 private:
  Universe src_, tgt_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

class Relation {
 public:
  Relation() : Relation(Universe::unit(), Universe::unit()) {}
  Relation(Universe src, Universe tgt) : Relation(RelBuilder(std::move(src), std::move(tgt)).freeze()) {}

  const Universe& src() const { return src_; }
  const Universe& tgt() const { return tgt_; }
  std::size_t rows() const { return src_.size(); }
  std::size_t cols() const { return tgt_.size(); }
  std::size_t words() const { return words_; }

  bool get(std::size_t i, std::size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U; }
  bool operator()(std::size_t i, std::size_t j) const { return get(i, j); }
  std::span<const std::uint64_t> row(std::size_t i) const { return {bits_.data() + i * words_, words_}; }

  bool row_empty(std::size_t i) const {
    for (auto w : row(i))
      if (w) return false;
    return true;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  // Column indices set in row i.
  std::vector<std::size_t> successors(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_; ++k) {
      std::uint64_t w = bits_[i * words_ + k];
      while (w) {
        out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  bool same_type(const Relation& o) const { return src_ == o.src_ && tgt_ == o.tgt_; }

  bool operator==(const Relation& o) const { return same_type(o) && bits_ == o.bits_; }
  bool operator!=(const Relation& o) const { return !(*this == o); }

  const std::vector<std::uint64_t>& raw() const { return bits_; }

 private:
  friend class RelBuilder;
  Relation(Universe src, Universe tgt, std::size_t words, std::vector<std::uint64_t> bits)
      : src_(std::move(src)), tgt_(std::move(tgt)), words_(words), bits_(std::move(bits)) {}

  Universe src_, tgt_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

inline Relation RelBuilder::freeze() && {
  return Relation(std::move(src_), std::move(tgt_), words_, std::move(bits_));
}

namespace detail {

inline std::uint64_t tail_mask(std::size_t cols) {
  const std::size_t r = cols % 64;
  return r == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
}

inline std::string type_str(const Relation& r) { return r.src().name() + " -> " + r.tgt().name(); }

inline void require_same(const Relation& a, const Relation& b, const char* op) {
  if (!a.same_type(b))
    throw Error(Errc::TypeMismatch, std::string(op) + ": " + type_str(a) + " vs " + type_str(b));
}

inline void require_homogeneous(const Relation& r, const char* what) {
  if (r.src() != r.tgt()) throw Error(Errc::TypeMismatch, std::string(what) + " needs a homogeneous relation, got " + type_str(r));
}

template <class F>
Relation zip(const Relation& a, const Relation& b, const char* op, F f) {
  require_same(a, b, op);
  RelBuilder out(a.src(), a.tgt());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto ra = a.row(i), rb = b.row(i);
    auto* o = out.row(i);
    for (std::size_t k = 0; k < a.words(); ++k) o[k] = f(ra[k], rb[k]);
  }
  return std::move(out).freeze();
}

}  // namespace detail

inline Relation bottom(const Universe& src, const Universe& tgt) { return Relation(src, tgt); }

inline Relation top(const Universe& src, const Universe& tgt) {
  RelBuilder b(src, tgt);
  if (b.words() > 0) {
    const auto mask = detail::tail_mask(tgt.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
      auto* r = b.row(i);
      std::fill(r, r + b.words(), ~std::uint64_t{0});
      r[b.words() - 1] &= mask;
    }
  }
  return std::move(b).freeze();
}

inline Relation identity(const Universe& u) {
  RelBuilder b(u, u);
  for (std::size_t i = 0; i < u.size(); ++i) b.set(i, i);
  return std::move(b).freeze();
}

// Relation from a predicate on index pairs.
template <class F>
Relation tabulate(const Universe& src, const Universe& tgt, F f) {
  RelBuilder b(src, tgt);
  for (std::size_t i = 0; i < src.size(); ++i)
    for (std::size_t j = 0; j < tgt.size(); ++j)
      if (f(i, j)) b.set(i, j);
  return std::move(b).freeze();
}

// Relation from explicit successor lists, one per source element.
inline Relation from_rows(const Universe& src, const Universe& tgt, const std::vector<std::vector<std::size_t>>& rows) {
  if (rows.size() != src.size()) throw Error(Errc::IndexOutOfRange, "row count does not match " + src.name());
  RelBuilder b(src, tgt);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (auto j : rows[i]) {
      if (j >= tgt.size()) throw Error(Errc::IndexOutOfRange, "column " + std::to_string(j) + " in " + tgt.name());
      b.set(i, j);
    }
  return std::move(b).freeze();
}

// Vector X -> 1 marking exactly the given elements.
inline Relation vector_of(const Universe& u, std::initializer_list<std::size_t> members) {
  RelBuilder b(u, Universe::unit());
  for (auto m : members) b.set(m, 0);
  return std::move(b).freeze();
}

inline Relation point(const Universe& u, std::size_t i) {
  if (i >= u.size()) throw Error(Errc::IndexOutOfRange, "point " + std::to_string(i) + " in " + u.name());
  return vector_of(u, {i});
}

inline Relation unite(const Relation& a, const Relation& b) {
  return detail::zip(a, b, "union", [](std::uint64_t x, std::uint64_t y) { return x | y; });
}

inline Relation intersect(const Relation& a, const Relation& b) {
  return detail::zip(a, b, "intersection", [](std::uint64_t x, std::uint64_t y) { return x & y; });
}

inline Relation negate(const Relation& r) {
  RelBuilder out(r.src(), r.tgt());
  if (r.words() == 0) return std::move(out).freeze();
  const auto mask = detail::tail_mask(r.cols());
  for (std::size_t i = 0; i < r.rows(); ++i) {
    auto src = r.row(i);
    auto* o = out.row(i);
    for (std::size_t k = 0; k < r.words(); ++k) o[k] = ~src[k];
    o[r.words() - 1] &= mask;
  }
  return std::move(out).freeze();
}

inline bool includes(const Relation& sub, const Relation& sup) {
  detail::require_same(sub, sup, "inclusion");
  const auto& a = sub.raw();
  const auto& b = sup.raw();
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] & ~b[k]) return false;
  return true;
}

inline Relation converse(const Relation& r) {
  RelBuilder out(r.tgt(), r.src());
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t k = 0; k < r.words(); ++k) {
      std::uint64_t w = r.row(i)[k];
      while (w) {
        out.set(k * 64 + static_cast<std::size_t>(std::countr_zero(w)), i);
        w &= w - 1;
      }
    }
  return std::move(out).freeze();
}

// Destination row i is the OR of the S-rows selected by R-row i.
inline Relation compose(const Relation& r, const Relation& s) {
  if (r.tgt() != s.src())
    throw Error(Errc::TypeMismatch, "composition: " + detail::type_str(r) + " then " + detail::type_str(s));
  RelBuilder out(r.src(), s.tgt());
  const std::size_t w = s.words();
  if (w == 0) return std::move(out).freeze();
  for (std::size_t i = 0; i < r.rows(); ++i) {
    auto* o = out.row(i);
    for (std::size_t k = 0; k < r.words(); ++k) {
      std::uint64_t bits = r.row(i)[k];
      while (bits) {
        const std::size_t j = k * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        auto sr = s.row(j);
        for (std::size_t t = 0; t < w; ++t) o[t] |= sr[t];
        bits &= bits - 1;
      }
    }
  }
  return std::move(out).freeze();
}

inline Relation operator|(const Relation& a, const Relation& b) { return unite(a, b); }
inline Relation operator&(const Relation& a, const Relation& b) { return intersect(a, b); }
inline Relation operator~(const Relation& a) { return negate(a); }
inline Relation operator*(const Relation& a, const Relation& b) { return compose(a, b); }
inline bool operator<=(const Relation& a, const Relation& b) { return includes(a, b); }
inline bool operator>=(const Relation& a, const Relation& b) { return includes(b, a); }

inline Relation conv(const Relation& r) { return converse(r); }

// Universal relations with the needed source or target filled in.
inline Relation top_to(const Relation& r, const Universe& tgt) { return top(r.tgt(), tgt); }

// C/B for C: X->Z, B: Y->Z, giving X->Y.
inline Relation left_residual(const Relation& c, const Relation& b) {
  if (c.tgt() != b.tgt())
    throw Error(Errc::TypeMismatch, "left residual: " + detail::type_str(c) + " / " + detail::type_str(b));
  return negate(compose(negate(c), converse(b)));
}

// A\C for A: X->Y, C: X->Z, giving Y->Z.
inline Relation right_residual(const Relation& a, const Relation& c) {
  if (a.src() != c.src())
    throw Error(Errc::TypeMismatch, "right residual: " + detail::type_str(a) + " \\ " + detail::type_str(c));
  return negate(compose(converse(a), negate(c)));
}

inline Relation syq(const Relation& r, const Relation& s) {
  if (r.src() != s.src())
    throw Error(Errc::TypeMismatch, "syq: " + detail::type_str(r) + " and " + detail::type_str(s));
  const Relation rt = converse(r);
  return intersect(negate(compose(rt, negate(s))), negate(compose(negate(rt), s)));
}

inline bool is_univalent(const Relation& r) { return includes(compose(converse(r), r), identity(r.tgt())); }
inline bool is_total(const Relation& r) { return includes(identity(r.src()), compose(r, converse(r))); }
inline bool is_injective(const Relation& r) { return is_univalent(converse(r)); }
inline bool is_surjective(const Relation& r) { return is_total(converse(r)); }
inline bool is_mapping(const Relation& r) { return is_univalent(r) && is_total(r); }
inline bool is_bijective_mapping(const Relation& r) { return is_mapping(r) && is_injective(r) && is_surjective(r); }
inline bool is_vector(const Relation& r) { return r == compose(r, top(r.tgt(), r.tgt())); }
inline bool is_point(const Relation& r) { return is_vector(r) && is_injective(r) && is_surjective(r); }

inline bool is_reflexive(const Relation& r) {
  detail::require_homogeneous(r, "reflexivity");
  return includes(identity(r.src()), r);
}
inline bool is_transitive(const Relation& r) {
  detail::require_homogeneous(r, "transitivity");
  return includes(compose(r, r), r);
}
inline bool is_symmetric(const Relation& r) {
  detail::require_homogeneous(r, "symmetry");
  return r == converse(r);
}
inline bool is_antisymmetric(const Relation& r) {
  detail::require_homogeneous(r, "antisymmetry");
  return includes(intersect(r, converse(r)), identity(r.src()));
}
inline bool is_equivalence(const Relation& r) { return is_reflexive(r) && is_transitive(r) && is_symmetric(r); }
inline bool is_preorder(const Relation& r) { return is_reflexive(r) && is_transitive(r); }
inline bool is_order(const Relation& r) { return is_preorder(r) && is_antisymmetric(r); }

inline void require_point(const Relation& r, const char* what) {
  if (r.tgt().kind() != Universe::Kind::Unit || !is_point(r))
    throw Error(Errc::NotAPoint, std::string(what) + " expects a point X -> 1, got " + detail::type_str(r));
}

// Index of the single element marked by a point.
inline std::size_t point_index(const Relation& p) {
  require_point(p, "point_index");
  for (std::size_t i = 0; i < p.rows(); ++i)
    if (p.get(i, 0)) return i;
  return 0;
}

}  // namespace relkit
