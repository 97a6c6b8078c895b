#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "relkit/boolalg.hpp"
#include "relkit/error.hpp"
#include "relkit/fileio.hpp"
#include "relkit/finset.hpp"
#include "relkit/images.hpp"
#include "relkit/powerset.hpp"
#include "relkit/prodsum.hpp"
#include "relkit/relation.hpp"
#include "relkit/term.hpp"

namespace relkit {

class Environment {
 public:
  Environment() = default;
  explicit Environment(const Document& doc) {
    for (const auto& [n, u] : doc.universes) bind(n, u);
    for (const auto& [n, r] : doc.relations) bind(n, r);
    for (const auto& [n, b] : doc.binops) bind(n, b.table());
  }

  void bind(const std::string& name, Universe u) { universes_.insert_or_assign(name, std::move(u)); }
  void bind(const std::string& name, Relation r) { relations_.insert_or_assign(name, std::move(r)); }

  const Universe* universe(const std::string& name) const {
    auto it = universes_.find(name);
    return it == universes_.end() ? nullptr : &it->second;
  }
  const Relation* relation(const std::string& name) const {
    auto it = relations_.find(name);
    return it == relations_.end() ? nullptr : &it->second;
  }

 private:
  std::map<std::string, Universe> universes_;
  std::map<std::string, Relation> relations_;
};

// Static shape of a term: a universe, a string, or a relation src -> tgt.
struct TermType {
  enum class Kind { Universe, String, Relation } kind = Kind::Relation;
  Universe u;  // the universe itself, or the source
  Universe tgt;
  std::string text;
};

namespace eval_detail {

using Kind = TermType::Kind;

inline std::string show(const TermType& t) {
  switch (t.kind) {
    case Kind::Universe: return "universe " + t.u.name();
    case Kind::String: return "string";
    case Kind::Relation: return t.u.name() + " -> " + t.tgt.name();
  }
  return {};
}

inline TermType rel_type(Universe s, Universe t) { return {Kind::Relation, std::move(s), std::move(t), {}}; }

class Checker {
 public:
  explicit Checker(const Environment& env) : env_(env) {}

  TermType infer(const Term& t) {
    try {
      return infer_inner(t);
    } catch (const LocatedError&) {
      throw;
    } catch (const Error& e) {
      throw LocatedError(e.code(), t.at, strip(e.what()));
    }
  }

 private:
  static std::string strip(const std::string& msg) {
    auto p = msg.find(": ");
    return p == std::string::npos ? msg : msg.substr(p + 2);
  }

  [[noreturn]] static void type_error(const Term& t, const std::string& msg) { throw LocatedError(Errc::TypeError, t.at, msg); }

  TermType rel_arg(const Term& call, std::size_t i) {
    TermType a = infer(call.args[i]);
    if (a.kind != Kind::Relation) type_error(call.args[i], call.text + ": argument " + std::to_string(i + 1) + " must be a relation, got " + show(a));
    return a;
  }

  Universe uni_arg(const Term& call, std::size_t i) {
    TermType a = infer(call.args[i]);
    if (a.kind != Kind::Universe) type_error(call.args[i], call.text + ": argument " + std::to_string(i + 1) + " must be a universe, got " + show(a));
    return a.u;
  }

  Universe power_arg(const Term& call, std::size_t i) {
    Universe u = uni_arg(call, i);
    if (!u.is_power()) type_error(call.args[i], call.text + " expects a powerset universe, got " + u.name());
    return u;
  }

  void arity(const Term& call, std::size_t lo, std::size_t hi) {
    if (call.args.size() < lo || call.args.size() > hi) {
      std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi);
      type_error(call, call.text + " takes " + want + " arguments, got " + std::to_string(call.args.size()));
    }
  }

  void same(const Term& at, const char* what, const Universe& a, const Universe& b) {
    if (a != b) type_error(at, std::string(what) + ": " + a.name() + " does not match " + b.name());
  }

  TermType infer_inner(const Term& t) {
    switch (t.kind) {
      case Term::Kind::String: return {Kind::String, {}, {}, t.text};
      case Term::Kind::Ident: {
        if (const Relation* r = env_.relation(t.text)) return rel_type(r->src(), r->tgt());
        if (const Universe* u = env_.universe(t.text)) return {Kind::Universe, *u, {}, {}};
        throw LocatedError(Errc::UnboundIdentifier, t.at, "'" + t.text + "' is not bound");
      }
      case Term::Kind::Converse: {
        TermType a = infer(t.args[0]);
        if (a.kind != Kind::Relation) type_error(t, "converse of " + show(a));
        return rel_type(a.tgt, a.u);
      }
      case Term::Kind::Complement: {
        TermType a = infer(t.args[0]);
        if (a.kind != Kind::Relation) type_error(t, "complement of " + show(a));
        return a;
      }
      case Term::Kind::Binary: return binary(t);
      case Term::Kind::Call: return call(t);
    }
    type_error(t, "unknown term");
  }

  TermType binary(const Term& t) {
    TermType a = infer(t.args[0]);
    TermType b = infer(t.args[1]);
    if (a.kind != Kind::Relation || b.kind != Kind::Relation)
      type_error(t, "operator " + t.text + " needs relations, got " + show(a) + " and " + show(b));
    const std::string& op = t.text;
    if (op == "|" || op == "&") {
      if (a.u != b.u || a.tgt != b.tgt) type_error(t, "operator " + op + ": " + show(a) + " vs " + show(b));
      return a;
    }
    if (op == "*") {
      same(t, "composition", a.tgt, b.u);
      return rel_type(a.u, b.tgt);
    }
    if (op == "\\") {
      same(t, "right residual sources", a.u, b.u);
      return rel_type(a.tgt, b.tgt);
    }
    same(t, "left residual targets", a.tgt, b.tgt);
    return rel_type(a.u, b.u);
  }

  TermType call(const Term& t) {
    const std::string& f = t.text;
    const Universe one = Universe::unit();
    auto pow = [](const Universe& u) { return Universe::power(u); };
    auto prod = [](const Universe& a, const Universe& b) { return Universe::pair(a, b); };

    if (f == "unit") {
      arity(t, 0, 0);
      return {Kind::Universe, one, {}, {}};
    }
    if (f == "pow") {
      arity(t, 1, 1);
      return {Kind::Universe, pow(uni_arg(t, 0)), {}, {}};
    }
    if (f == "prod" || f == "sum") {
      arity(t, 2, 2);
      Universe a = uni_arg(t, 0), b = uni_arg(t, 1);
      return {Kind::Universe, f == "prod" ? prod(a, b) : Universe::sum(a, b), {}, {}};
    }
    if (f == "I") {
      arity(t, 1, 1);
      Universe u = uni_arg(t, 0);
      return rel_type(u, u);
    }
    if (f == "TOP" || f == "BOT") {
      arity(t, 1, 2);
      Universe a = uni_arg(t, 0);
      return rel_type(a, t.args.size() == 2 ? uni_arg(t, 1) : a);
    }
    if (f == "eps" || f == "sigma") {
      arity(t, 1, 1);
      Universe u = uni_arg(t, 0);
      return rel_type(u, pow(u));
    }
    if (f == "omega" || f == "atoms") {
      arity(t, 1, 1);
      Universe p = pow(uni_arg(t, 0));
      return rel_type(p, p);
    }
    if (f == "syq") {
      arity(t, 2, 2);
      TermType a = rel_arg(t, 0), b = rel_arg(t, 1);
      same(t, "syq sources", a.u, b.u);
      return rel_type(a.tgt, b.tgt);
    }
    if (f == "lub" || f == "glb") {
      arity(t, 1, 1);
      TermType a = rel_arg(t, 0);
      if (!a.u.is_power()) type_error(t, f + " expects a relation out of a powerset, got " + show(a));
      return a;
    }
    if (f == "lubR" || f == "glbR") {
      arity(t, 1, 1);
      TermType a = rel_arg(t, 0);
      if (!a.tgt.is_power()) type_error(t, f + " expects a relation into a powerset, got " + show(a));
      return a;
    }
    if (f == "exim" || f == "zeta") {
      arity(t, 1, 1);
      TermType a = rel_arg(t, 0);
      return rel_type(pow(a.u), pow(a.tgt));
    }
    if (f == "imim") {
      arity(t, 1, 1);
      TermType a = rel_arg(t, 0);
      return rel_type(pow(a.tgt), pow(a.u));
    }
    if (f == "kron") {
      arity(t, 2, 2);
      TermType a = rel_arg(t, 0), b = rel_arg(t, 1);
      return rel_type(prod(a.u, b.u), prod(a.tgt, b.tgt));
    }
    if (f == "fork") {
      arity(t, 2, 2);
      TermType a = rel_arg(t, 0), b = rel_arg(t, 1);
      same(t, "fork sources", a.u, b.u);
      return rel_type(a.u, prod(a.tgt, b.tgt));
    }
    if (f == "join") {
      arity(t, 2, 2);
      TermType a = rel_arg(t, 0), b = rel_arg(t, 1);
      same(t, "join targets", a.tgt, b.tgt);
      return rel_type(prod(a.u, b.u), a.tgt);
    }
    if (f == "vec") {
      arity(t, 1, 1);
      TermType a = rel_arg(t, 0);
      return rel_type(prod(a.u, a.tgt), one);
    }
    if (f == "unvec") {
      arity(t, 1, 1);
      TermType a = rel_arg(t, 0);
      if (!a.u.is_pair() || a.tgt != one) type_error(t, "unvec expects a vector on a product, got " + show(a));
      return rel_type(a.u.left(), a.u.right());
    }
    if (f == "swap") {
      arity(t, 2, 2);
      Universe x = uni_arg(t, 0), y = uni_arg(t, 1);
      return rel_type(prod(x, y), prod(y, x));
    }
    if (f == "assoc") {
      arity(t, 3, 3);
      Universe x = uni_arg(t, 0), y = uni_arg(t, 1), z = uni_arg(t, 2);
      return rel_type(prod(prod(x, y), z), prod(x, prod(y, z)));
    }
    if (f == "pi" || f == "rho") {
      arity(t, 2, 2);
      Universe x = uni_arg(t, 0), y = uni_arg(t, 1);
      return rel_type(prod(x, y), f == "pi" ? x : y);
    }
    if (f == "iota" || f == "kappa") {
      arity(t, 2, 2);
      Universe x = uni_arg(t, 0), y = uni_arg(t, 1);
      return rel_type(f == "iota" ? x : y, Universe::sum(x, y));
    }
    if (f == "N") {
      arity(t, 1, 1);
      Universe p = power_arg(t, 0);
      return rel_type(p, p);
    }
    if (f == "meet" || f == "joinop") {
      arity(t, 1, 1);
      Universe p = power_arg(t, 0);
      return rel_type(prod(p, p), p);
    }
    if (f == "pt") {
      arity(t, 2, 2);
      Universe u = uni_arg(t, 0);
      TermType l = infer(t.args[1]);
      if (l.kind != Kind::String) type_error(t.args[1], "pt expects a quoted label");
      if (!u.index_of(l.text)) type_error(t.args[1], "'" + l.text + "' is not an element of " + u.name());
      return rel_type(u, one);
    }
    if (f == "idpt") {
      arity(t, 1, 1);
      Universe x = uni_arg(t, 0);
      return rel_type(pow(prod(x, x)), one);
    }
    if (f == "botpt" || f == "toppt") {
      arity(t, 2, 2);
      return rel_type(pow(prod(uni_arg(t, 0), uni_arg(t, 1))), one);
    }
    if (f == "relpt") {
      arity(t, 1, 1);
      TermType a = rel_arg(t, 0);
      return rel_type(pow(prod(a.u, a.tgt)), one);
    }
    if (f == "tpt") {
      arity(t, 2, 2);
      Universe x = uni_arg(t, 0), y = uni_arg(t, 1);
      return rel_type(pow(prod(x, y)), pow(prod(y, x)));
    }
    if (f == "decode") {
      arity(t, 1, 1);
      TermType a = rel_arg(t, 0);
      if (!a.u.is_power() || !a.u.base().is_pair() || a.tgt != one) type_error(t, "decode expects a vector on pow(X*Y), got " + show(a));
      return rel_type(a.u.base().left(), a.u.base().right());
    }
    throw LocatedError(Errc::UnboundIdentifier, t.at, "unknown function '" + f + "'");
  }

  const Environment& env_;
};

using Value = std::variant<Relation, Universe, std::string>;

class Evaluator {
 public:
  explicit Evaluator(const Environment& env) : env_(env) {}

  Value eval(const Term& t) {
    try {
      return eval_inner(t);
    } catch (const LocatedError&) {
      throw;
    } catch (const Error& e) {
      throw LocatedError(e.code(), t.at, e.what());
    }
  }

 private:
  Relation rel(const Term& t) { return std::get<Relation>(eval(t)); }
  Universe uni(const Term& t) { return std::get<Universe>(eval(t)); }

  Value eval_inner(const Term& t) {
    switch (t.kind) {
      case Term::Kind::String: return t.text;
      case Term::Kind::Ident:
        if (const Relation* r = env_.relation(t.text)) return *r;
        return *env_.universe(t.text);
      case Term::Kind::Converse: return converse(rel(t.args[0]));
      case Term::Kind::Complement: return negate(rel(t.args[0]));
      case Term::Kind::Binary: {
        Relation a = rel(t.args[0]), b = rel(t.args[1]);
        if (t.text == "|") return unite(a, b);
        if (t.text == "&") return intersect(a, b);
        if (t.text == "*") return compose(a, b);
        if (t.text == "\\") return right_residual(a, b);
        return left_residual(a, b);
      }
      case Term::Kind::Call: return call(t);
    }
    return std::string{};
  }

  Value call(const Term& t) {
    const std::string& f = t.text;
    const auto& a = t.args;
    const Universe one = Universe::unit();
    if (f == "unit") return one;
    if (f == "pow") return Universe::power(uni(a[0]));
    if (f == "prod") return Universe::pair(uni(a[0]), uni(a[1]));
    if (f == "sum") return Universe::sum(uni(a[0]), uni(a[1]));
    if (f == "I") return identity(uni(a[0]));
    if (f == "TOP" || f == "BOT") {
      Universe x = uni(a[0]);
      Universe y = a.size() == 2 ? uni(a[1]) : x;
      return f == "TOP" ? top(x, y) : bottom(x, y);
    }
    if (f == "eps") return membership_relation(uni(a[0]));
    if (f == "sigma") return membership(uni(a[0])).sigma;
    if (f == "omega") return membership(uni(a[0])).omega;
    if (f == "atoms") return atoms(membership(uni(a[0])));
    if (f == "syq") return syq(rel(a[0]), rel(a[1]));
    if (f == "lub" || f == "glb" || f == "lubR" || f == "glbR") {
      Relation r = rel(a[0]);
      const Universe& p = (f == "lub" || f == "glb") ? r.src() : r.tgt();
      auto b = membership(p.base());
      if (f == "lub") return lub(b, r);
      if (f == "glb") return glb(b, r);
      if (f == "lubR") return lubR(b, r);
      return glbR(b, r);
    }
    if (f == "exim") return existential_image(rel(a[0]));
    if (f == "imim") return inverse_image(rel(a[0]));
    if (f == "zeta") return power_relator(rel(a[0]));
    if (f == "kron") return kron(rel(a[0]), rel(a[1]));
    if (f == "fork") return fork(rel(a[0]), rel(a[1]));
    if (f == "join") return join(rel(a[0]), rel(a[1]));
    if (f == "vec") return vec(rel(a[0]));
    if (f == "unvec") return unvec(rel(a[0]));
    if (f == "swap") return swap(uni(a[0]), uni(a[1]));
    if (f == "assoc") return assoc(uni(a[0]), uni(a[1]), uni(a[2]));
    if (f == "pi") return product(uni(a[0]), uni(a[1])).pi;
    if (f == "rho") return product(uni(a[0]), uni(a[1])).rho;
    if (f == "iota") return sum(uni(a[0]), uni(a[1])).iota;
    if (f == "kappa") return sum(uni(a[0]), uni(a[1])).kappa;
    if (f == "N" || f == "meet" || f == "joinop") {
      auto alg = lifted(uni(a[0]).base());
      if (f == "N") return alg.N;
      return f == "meet" ? alg.meet : alg.join;
    }
    if (f == "pt") {
      Universe u = uni(a[0]);
      return point(u, *u.index_of(std::get<std::string>(eval(a[1]))));
    }
    if (f == "idpt") return identity_point(uni(a[0]));
    if (f == "botpt") return bot_point(uni(a[0]), uni(a[1]));
    if (f == "toppt") return top_point(uni(a[0]), uni(a[1]));
    if (f == "relpt") return relation_point(rel(a[0]));
    if (f == "tpt") return transposition_point_map(uni(a[0]), uni(a[1]));
    if (f == "decode") return decode(rel(a[0]));
    throw LocatedError(Errc::UnboundIdentifier, t.at, "unknown function '" + f + "'");
  }

  const Environment& env_;
};

}  // namespace eval_detail

inline TermType type_of(const Term& t, const Environment& env) { return eval_detail::Checker(env).infer(t); }

// Type-checks the whole term before evaluating any of it.
inline eval_detail::Value evaluate(const Term& t, const Environment& env) {
  type_of(t, env);
  return eval_detail::Evaluator(env).eval(t);
}

inline Relation evaluate_relation(const Term& t, const Environment& env) {
  auto ty = type_of(t, env);
  if (ty.kind != TermType::Kind::Relation) throw LocatedError(Errc::TypeError, t.at, "expression is a " + eval_detail::show(ty) + ", not a relation");
  return std::get<Relation>(eval_detail::Evaluator(env).eval(t));
}

}  // namespace relkit
