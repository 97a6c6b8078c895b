#pragma once

// Slow reference implementations. Everything here is evaluated cell by cell
// from the set-theoretic definition; no relational operator is used.

#include <cstddef>
#include <string>
#include <vector>

#include "relkit/error.hpp"
#include "relkit/finset.hpp"
#include "relkit/relation.hpp"

namespace relkit::oracle {

inline std::size_t& cell_cap() {
  static std::size_t cap = std::size_t{1} << 12;
  return cap;
}

namespace detail {

inline void check_cells(std::size_t rows, std::size_t cols, const char* what) {
  if (rows * cols > cell_cap())
    throw Error(Errc::CapExceeded, std::string(what) + ": " + std::to_string(rows * cols) + " cells exceed the oracle cap");
}

inline void check_same(const Universe& a, const Universe& b, const char* what) {
  if (a != b) throw Error(Errc::TypeMismatch, std::string(what) + ": " + a.name() + " vs " + b.name());
}

inline bool contains(std::size_t subset, std::size_t x) {
  for (auto m : power_members(subset))
    if (m == x) return true;
  return false;
}

}  // namespace detail

inline Relation compose(const Relation& r, const Relation& s) {
  detail::check_same(r.tgt(), s.src(), "oracle compose");
  detail::check_cells(r.rows(), s.cols(), "oracle compose");
  return tabulate(r.src(), s.tgt(), [&](std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (r(i, j) && s(j, k)) return true;
    return false;
  });
}

inline Relation converse(const Relation& r) {
  return tabulate(r.tgt(), r.src(), [&](std::size_t i, std::size_t j) { return r(j, i); });
}

// (C/B)(x,y) iff every z with B(y,z) has C(x,z).
inline Relation left_residual(const Relation& c, const Relation& b) {
  detail::check_same(c.tgt(), b.tgt(), "oracle left residual");
  detail::check_cells(c.rows(), b.rows(), "oracle left residual");
  return tabulate(c.src(), b.src(), [&](std::size_t x, std::size_t y) {
    for (std::size_t z = 0; z < c.cols(); ++z)
      if (b(y, z) && !c(x, z)) return false;
    return true;
  });
}

// (A\C)(y,z) iff every x with A(x,y) has C(x,z).
inline Relation right_residual(const Relation& a, const Relation& c) {
  detail::check_same(a.src(), c.src(), "oracle right residual");
  detail::check_cells(a.cols(), c.cols(), "oracle right residual");
  return tabulate(a.tgt(), c.tgt(), [&](std::size_t y, std::size_t z) {
    for (std::size_t x = 0; x < a.rows(); ++x)
      if (a(x, y) && !c(x, z)) return false;
    return true;
  });
}

// syq(R,S)(w,z) iff column w of R equals column z of S.
inline Relation syq(const Relation& r, const Relation& s) {
  detail::check_same(r.src(), s.src(), "oracle syq");
  detail::check_cells(r.cols(), s.cols(), "oracle syq");
  return tabulate(r.tgt(), s.tgt(), [&](std::size_t w, std::size_t z) {
    for (std::size_t v = 0; v < r.rows(); ++v)
      if (r(v, w) != s(v, z)) return false;
    return true;
  });
}

inline Relation membership(const Universe& base) {
  const Universe p = Universe::power(base);
  detail::check_cells(base.size(), p.size(), "oracle membership");
  return tabulate(base, p, [](std::size_t x, std::size_t s) { return detail::contains(s, x); });
}

inline Relation omega(const Universe& base) {
  const Universe p = Universe::power(base);
  detail::check_cells(p.size(), p.size(), "oracle omega");
  return tabulate(p, p, [](std::size_t a, std::size_t b) {
    for (auto m : power_members(a))
      if (!detail::contains(b, m)) return false;
    return true;
  });
}

// Column k of the result marks the union of all subsets selected by column k of X.
inline Relation lub(const Relation& x) {
  if (!x.src().is_power()) throw Error(Errc::TypeMismatch, "oracle lub: source " + x.src().name() + " is not a powerset");
  detail::check_cells(x.rows(), x.cols(), "oracle lub");
  const Universe& base = x.src().base();
  std::vector<std::size_t> joined(x.cols(), 0);
  for (std::size_t k = 0; k < x.cols(); ++k)
    for (std::size_t s = 0; s < x.rows(); ++s)
      if (x(s, k))
        for (std::size_t e = 0; e < base.size(); ++e)
          if (detail::contains(s, e)) joined[k] |= std::size_t{1} << e;
  return tabulate(x.src(), x.tgt(), [&](std::size_t s, std::size_t k) { return s == joined[k]; });
}

// Column k marks the intersection of the selected subsets (the full set when none is selected).
inline Relation glb(const Relation& x) {
  if (!x.src().is_power()) throw Error(Errc::TypeMismatch, "oracle glb: source " + x.src().name() + " is not a powerset");
  detail::check_cells(x.rows(), x.cols(), "oracle glb");
  const Universe& base = x.src().base();
  std::vector<std::size_t> met(x.cols(), 0);
  for (std::size_t k = 0; k < x.cols(); ++k)
    for (std::size_t e = 0; e < base.size(); ++e) {
      bool all = true;
      for (std::size_t s = 0; s < x.rows(); ++s)
        if (x(s, k) && !detail::contains(s, e)) all = false;
      if (all) met[k] |= std::size_t{1} << e;
    }
  return tabulate(x.src(), x.tgt(), [&](std::size_t s, std::size_t k) { return s == met[k]; });
}

// A maps to { y | some x in A has R(x,y) }.
inline Relation exim(const Relation& r) {
  const Universe px = Universe::power(r.src());
  const Universe py = Universe::power(r.tgt());
  detail::check_cells(px.size(), py.size(), "oracle exim");
  return tabulate(px, py, [&](std::size_t a, std::size_t b) {
    for (std::size_t y = 0; y < r.cols(); ++y) {
      bool hit = false;
      for (auto x : power_members(a))
        if (r(x, y)) hit = true;
      if (hit != detail::contains(b, y)) return false;
    }
    return true;
  });
}

inline Relation imim(const Relation& r) { return oracle::exim(oracle::converse(r)); }

// A and B cover each other through R.
inline Relation power_relator(const Relation& r) {
  const Universe px = Universe::power(r.src());
  const Universe py = Universe::power(r.tgt());
  detail::check_cells(px.size(), py.size(), "oracle power relator");
  return tabulate(px, py, [&](std::size_t a, std::size_t b) {
    for (auto x : power_members(a)) {
      bool found = false;
      for (auto y : power_members(b))
        if (r(x, y)) found = true;
      if (!found) return false;
    }
    for (auto y : power_members(b)) {
      bool found = false;
      for (auto x : power_members(a))
        if (r(x, y)) found = true;
      if (!found) return false;
    }
    return true;
  });
}

// ((x,y),(u,v)) iff A(x,u) and B(y,v).
inline Relation kron(const Relation& a, const Relation& b) {
  const Universe s = Universe::pair(a.src(), b.src());
  const Universe t = Universe::pair(a.tgt(), b.tgt());
  detail::check_cells(s.size(), t.size(), "oracle kron");
  return tabulate(s, t, [&](std::size_t i, std::size_t j) {
    const std::size_t x = i / b.rows(), y = i % b.rows();
    const std::size_t u = j / b.cols(), v = j % b.cols();
    return a(x, u) && b(y, v);
  });
}

// Value of a binary operation given as a mapping (X*X) -> X.
inline std::size_t apply(const Relation& table, std::size_t x, std::size_t y) {
  const std::size_t n = table.cols();
  for (std::size_t z = 0; z < n; ++z)
    if (table(x * n + y, z)) return z;
  throw Error(Errc::NotAMapping, "operation table has an empty row");
}

// x is invariant when x*y = y*x for every y.
inline Relation invariant_elements(const Relation& table) {
  const Universe& x = table.tgt();
  return tabulate(x, Universe::unit(), [&](std::size_t a, std::size_t) {
    for (std::size_t b = 0; b < x.size(); ++b)
      if (apply(table, a, b) != apply(table, b, a)) return false;
    return true;
  });
}

// Subset meet and join tables on pow(X), built by bit arithmetic on subset indices.
inline Relation subset_meet(const Universe& base) {
  const Universe p = Universe::power(base);
  const Universe pp = Universe::pair(p, p);
  detail::check_cells(pp.size(), p.size(), "oracle meet");
  return tabulate(pp, p, [&](std::size_t i, std::size_t s) { return (i / p.size() & i % p.size()) == s; });
}

inline Relation subset_join(const Universe& base) {
  const Universe p = Universe::power(base);
  const Universe pp = Universe::pair(p, p);
  detail::check_cells(pp.size(), p.size(), "oracle join");
  return tabulate(pp, p, [&](std::size_t i, std::size_t s) { return (i / p.size() | i % p.size()) == s; });
}

}  // namespace relkit::oracle
