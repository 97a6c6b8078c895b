#pragma once

// Text format:
//   universe X = {a, b, c}
//   universe PX = pow(X)
//   relation R : X -> Y { a: {y1, y2}  b: {} }
//   binop F : X { row a: [c, a, b] ... }
// '#' starts a comment. Relation rows appear once each, in source order.

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "relkit/binop.hpp"
#include "relkit/error.hpp"
#include "relkit/finset.hpp"
#include "relkit/relation.hpp"

namespace relkit {

struct Document {
  std::vector<std::pair<std::string, Universe>> universes;
  std::vector<std::pair<std::string, Relation>> relations;
  std::vector<std::pair<std::string, BinOp>> binops;

  const Universe* universe(const std::string& name) const {
    for (const auto& [n, u] : universes)
      if (n == name) return &u;
    return nullptr;
  }
  const Relation* relation(const std::string& name) const {
    for (const auto& [n, r] : relations)
      if (n == name) return &r;
    for (const auto& [n, b] : binops)
      if (n == name) return &b.table();
    return nullptr;
  }
  const BinOp* binop(const std::string& name) const {
    for (const auto& [n, b] : binops)
      if (n == name) return &b;
    return nullptr;
  }
};

namespace io {

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_bare_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-' || c == '\'' || c == '$';
}

inline bool is_identifier(const std::string& s) {
  if (s.empty() || !is_ident_start(s[0])) return false;
  for (char c : s)
    if (!is_ident_char(c)) return false;
  return s != "pow" && s != "prod" && s != "sum" && s != "unit";
}

inline std::string quote_label(const std::string& s) {
  bool bare = !s.empty();
  for (char c : s)
    if (!is_bare_char(c)) bare = false;
  if (bare) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

class Lexer {
 public:
  enum class Tok { Ident, Label, Punct, Arrow, End };

  struct Token {
    Tok kind;
    std::string text;
    Span at;
  };

  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return cur_; }

  Token next() {
    Token t = cur_;
    advance();
    return t;
  }

  [[noreturn]] void fail(Span at, const std::string& msg) const { throw LocatedError(Errc::ParseError, at, msg); }

  Token expect_punct(char c) {
    if (cur_.kind != Tok::Punct || cur_.text[0] != c) fail(cur_.at, std::string("expected '") + c + "', found " + describe(cur_));
    return next();
  }

  bool accept_punct(char c) {
    if (cur_.kind == Tok::Punct && cur_.text[0] == c) {
      advance();
      return true;
    }
    return false;
  }

  Token expect_ident() {
    if (cur_.kind != Tok::Ident) fail(cur_.at, "expected identifier, found " + describe(cur_));
    return next();
  }

  // Labels may be bare words or quoted strings.
  Token expect_label() {
    if (cur_.kind != Tok::Ident && cur_.kind != Tok::Label) fail(cur_.at, "expected label, found " + describe(cur_));
    return next();
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::End: return "end of input";
      case Tok::Arrow: return "'->'";
      default: return "'" + t.text + "'";
    }
  }

 private:
  void advance() {
    skip_space();
    Span at{line_, col_};
    if (pos_ >= src_.size()) {
      cur_ = {Tok::End, "", at};
      return;
    }
    char c = src_[pos_];
    if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      bump();
      bump();
      cur_ = {Tok::Arrow, "->", at};
      return;
    }
    if (c == '"') {
      bump();
      std::string text;
      while (true) {
        if (pos_ >= src_.size() || src_[pos_] == '\n') fail(at, "unterminated string");
        char d = src_[pos_];
        bump();
        if (d == '"') break;
        if (d == '\\') {
          if (pos_ >= src_.size()) fail(at, "unterminated string");
          d = src_[pos_];
          bump();
        }
        text += d;
      }
      cur_ = {Tok::Label, text, at};
      return;
    }
    if (is_bare_char(c)) {
      std::string text;
      while (pos_ < src_.size() && is_bare_char(src_[pos_])) {
        if (src_[pos_] == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') break;
        text += src_[pos_];
        bump();
      }
      bool ident = is_ident_start(text[0]);
      for (char d : text)
        if (!is_ident_char(d)) ident = false;
      cur_ = {ident ? Tok::Ident : Tok::Label, text, at};
      return;
    }
    if (std::string_view("{}[](),:=").find(c) != std::string_view::npos) {
      bump();
      cur_ = {Tok::Punct, std::string(1, c), at};
      return;
    }
    fail(at, std::string("unexpected character '") + c + "'");
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
  Token cur_{Tok::End, "", {}};
};

class Reader {
 public:
  explicit Reader(std::string_view text) : lex_(text) {}

  Document read() {
    while (lex_.peek().kind != Lexer::Tok::End) {
      auto kw = lex_.expect_ident();
      if (kw.text == "universe") {
        read_universe();
      } else if (kw.text == "relation") {
        read_relation();
      } else if (kw.text == "binop") {
        read_binop();
      } else {
        lex_.fail(kw.at, "expected 'universe', 'relation' or 'binop', found '" + kw.text + "'");
      }
    }
    return std::move(doc_);
  }

 private:
  void check_fresh(const Lexer::Token& name) {
    if (doc_.universe(name.text) || doc_.relation(name.text)) lex_.fail(name.at, "'" + name.text + "' is already defined");
  }

  Universe universe_expr() {
    auto t = lex_.peek();
    if (t.kind == Lexer::Tok::Punct && t.text == "{") lex_.fail(t.at, "inline universe literals are only allowed in declarations");
    auto id = lex_.expect_ident();
    if (id.text == "unit") {
      if (lex_.accept_punct('(')) lex_.expect_punct(')');
      return Universe::unit();
    }
    if (id.text == "pow") {
      lex_.expect_punct('(');
      auto u = universe_expr();
      lex_.expect_punct(')');
      return guarded(id.at, [&] { return Universe::power(u); });
    }
    if (id.text == "prod" || id.text == "sum") {
      lex_.expect_punct('(');
      auto l = universe_expr();
      lex_.expect_punct(',');
      auto r = universe_expr();
      lex_.expect_punct(')');
      return guarded(id.at, [&] { return id.text == "prod" ? Universe::pair(l, r) : Universe::sum(l, r); });
    }
    const Universe* u = doc_.universe(id.text);
    if (!u) throw LocatedError(Errc::UnboundIdentifier, id.at, "unknown universe '" + id.text + "'");
    return *u;
  }

  template <class F>
  Universe guarded(Span at, F f) {
    try {
      return f();
    } catch (const LocatedError&) {
      throw;
    } catch (const Error& e) {
      throw LocatedError(e.code(), at, e.what());
    }
  }

  void read_universe() {
    auto name = lex_.expect_ident();
    check_fresh(name);
    lex_.expect_punct('=');
    if (lex_.peek().kind == Lexer::Tok::Punct && lex_.peek().text == "{") {
      lex_.next();
      std::vector<std::string> labels;
      if (!lex_.accept_punct('}')) {
        do labels.push_back(lex_.expect_label().text);
        while (lex_.accept_punct(','));
        lex_.expect_punct('}');
      }
      doc_.universes.emplace_back(name.text, guarded(name.at, [&] { return Universe::atomic(name.text, labels); }));
    } else {
      doc_.universes.emplace_back(name.text, universe_expr());
    }
  }

  std::size_t label_index(const Universe& u, const Lexer::Token& t) {
    auto i = u.index_of(t.text);
    if (!i) lex_.fail(t.at, "'" + t.text + "' is not an element of " + u.name());
    return *i;
  }

  void read_relation() {
    auto name = lex_.expect_ident();
    check_fresh(name);
    lex_.expect_punct(':');
    Universe src = universe_expr();
    if (lex_.peek().kind != Lexer::Tok::Arrow) lex_.fail(lex_.peek().at, "expected '->'");
    lex_.next();
    Universe tgt = universe_expr();
    auto open = lex_.expect_punct('{');
    RelBuilder b(src, tgt);
    for (std::size_t i = 0; i < src.size(); ++i) {
      auto row = lex_.expect_label();
      std::size_t idx = label_index(src, row);
      if (idx != i) lex_.fail(row.at, "expected row '" + src.label(i) + "', found '" + row.text + "'");
      lex_.expect_punct(':');
      lex_.expect_punct('{');
      if (!lex_.accept_punct('}')) {
        do b.set(i, label_index(tgt, lex_.expect_label()));
        while (lex_.accept_punct(','));
        lex_.expect_punct('}');
      }
    }
    if (lex_.peek().kind != Lexer::Tok::Punct || lex_.peek().text != "}")
      lex_.fail(lex_.peek().at, "relation " + name.text + " has more rows than " + src.name() + " (opened at " +
                                    std::to_string(open.at.line) + ":" + std::to_string(open.at.col) + ")");
    lex_.next();
    doc_.relations.emplace_back(name.text, std::move(b).freeze());
  }

  void read_binop() {
    auto name = lex_.expect_ident();
    check_fresh(name);
    lex_.expect_punct(':');
    Universe x = universe_expr();
    lex_.expect_punct('{');
    std::vector<std::vector<std::size_t>> rows;
    for (std::size_t i = 0; i < x.size(); ++i) {
      auto kw = lex_.expect_ident();
      if (kw.text != "row") lex_.fail(kw.at, "expected 'row'");
      auto row = lex_.expect_label();
      if (label_index(x, row) != i) lex_.fail(row.at, "expected row '" + x.label(i) + "', found '" + row.text + "'");
      lex_.expect_punct(':');
      auto open = lex_.expect_punct('[');
      std::vector<std::size_t> cells;
      if (!lex_.accept_punct(']')) {
        do cells.push_back(label_index(x, lex_.expect_label()));
        while (lex_.accept_punct(','));
        lex_.expect_punct(']');
      }
      if (cells.size() != x.size())
        throw LocatedError(Errc::NotAMapping, open.at,
                           "row " + row.text + " has " + std::to_string(cells.size()) + " entries, expected " + std::to_string(x.size()));
      rows.push_back(std::move(cells));
    }
    lex_.expect_punct('}');
    doc_.binops.emplace_back(name.text, BinOp::from_table(x, rows));
  }

  Lexer lex_;
  Document doc_;
};

}  // namespace io

inline Document parse_document(std::string_view text) { return io::Reader(text).read(); }

// Serializes universes and relations; atomic universes are declared first
// under their own names, renamed when a name is unusable or taken twice.
class Writer {
 public:
  void add_universe(const std::string& name, const Universe& u) {
    declare_atoms(u);
    if (u.kind() == Universe::Kind::Atomic && name == atom_name(u)) return;
    out_ << "universe " << fresh(name) << " = " << expr(u) << "\n";
  }

  void add_relation(const std::string& name, const Relation& r) {
    declare_atoms(r.src());
    declare_atoms(r.tgt());
    out_ << "relation " << fresh(name) << " : " << expr(r.src()) << " -> " << expr(r.tgt()) << " {\n";
    for (std::size_t i = 0; i < r.rows(); ++i) {
      out_ << "  " << io::quote_label(r.src().label(i)) << ": {";
      bool first = true;
      for (auto j : r.successors(i)) {
        out_ << (first ? "" : ", ") << io::quote_label(r.tgt().label(j));
        first = false;
      }
      out_ << "}\n";
    }
    out_ << "}\n";
  }

  void add_binop(const std::string& name, const BinOp& op) {
    const Universe& x = op.carrier();
    declare_atoms(x);
    out_ << "binop " << fresh(name) << " : " << expr(x) << " {\n";
    for (std::size_t l = 0; l < x.size(); ++l) {
      out_ << "  row " << io::quote_label(x.label(l)) << ": [";
      for (std::size_t r = 0; r < x.size(); ++r) out_ << (r ? ", " : "") << io::quote_label(x.label(op.apply(l, r)));
      out_ << "]\n";
    }
    out_ << "}\n";
  }

  std::string str() const { return out_.str(); }

 private:
  void declare_atoms(const Universe& u) {
    switch (u.kind()) {
      case Universe::Kind::Unit: return;
      case Universe::Kind::Power: declare_atoms(u.base()); return;
      case Universe::Kind::Pair:
      case Universe::Kind::Sum:
        declare_atoms(u.left());
        declare_atoms(u.right());
        return;
      case Universe::Kind::Atomic: break;
    }
    for (const auto& [id, n] : atoms_)
      if (id == u.identity()) return;
    const std::string n = fresh(u.name());
    atoms_.emplace_back(u.identity(), n);
    out_ << "universe " << n << " = {";
    for (std::size_t i = 0; i < u.size(); ++i) out_ << (i ? ", " : "") << io::quote_label(u.label(i));
    out_ << "}\n";
  }

  std::string atom_name(const Universe& u) const {
    for (const auto& [id, n] : atoms_)
      if (id == u.identity()) return n;
    return {};
  }

  std::string fresh(const std::string& wanted) {
    std::string n = io::is_identifier(wanted) ? wanted : "U";
    if (n == wanted && !taken(n)) {
      names_.push_back(n);
      return n;
    }
    for (std::size_t k = 1;; ++k) {
      std::string c = n + std::to_string(k);
      if (!taken(c)) {
        names_.push_back(c);
        return c;
      }
    }
  }

  bool taken(const std::string& n) const {
    for (const auto& m : names_)
      if (m == n) return true;
    return false;
  }

  std::string expr(const Universe& u) const {
    switch (u.kind()) {
      case Universe::Kind::Unit: return "unit";
      case Universe::Kind::Atomic: return atom_name(u);
      case Universe::Kind::Power: return "pow(" + expr(u.base()) + ")";
      case Universe::Kind::Pair: return "prod(" + expr(u.left()) + ", " + expr(u.right()) + ")";
      case Universe::Kind::Sum: return "sum(" + expr(u.left()) + ", " + expr(u.right()) + ")";
    }
    return {};
  }

  std::ostringstream out_;
  std::vector<std::pair<const void*, std::string>> atoms_;
  std::vector<std::string> names_;
};

inline std::string write_document(const Document& doc) {
  Writer w;
  for (const auto& [n, u] : doc.universes) w.add_universe(n, u);
  for (const auto& [n, r] : doc.relations) w.add_relation(n, r);
  for (const auto& [n, b] : doc.binops) w.add_binop(n, b);
  return w.str();
}

}  // namespace relkit
