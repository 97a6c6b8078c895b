#pragma once

// Grammar, weakest binding first:
//   union      := inter ('|' inter)*
//   inter      := resid ('&' resid)*
//   resid      := comp (('\' | '/') comp)?        non-associative
//   comp       := prefix ('*' prefix)*
//   prefix     := '~' prefix | postfix
//   postfix    := atom '^'*
//   atom       := ident | ident '(' args ')' | string | '(' union ')'

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "relkit/error.hpp"

namespace relkit {

struct Term {
  enum class Kind { Ident, String, Call, Converse, Complement, Binary };

  Kind kind = Kind::Ident;
  std::string text;  // identifier, string contents, call name, or operator
  std::vector<Term> args;
  Span at;

  bool operator==(const Term& o) const { return kind == o.kind && text == o.text && args == o.args; }
  bool operator!=(const Term& o) const { return !(*this == o); }
};

namespace term_detail {

inline int precedence(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Binary:
      if (t.text == "|") return 1;
      if (t.text == "&") return 2;
      if (t.text == "\\" || t.text == "/") return 3;
      return 4;
    case Term::Kind::Complement: return 5;
    case Term::Kind::Converse: return 6;
    default: return 7;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Term parse() {
    Term t = parse_union();
    skip_space();
    if (pos_ < src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return t;
  }

 private:
  Term parse_union() {
    Term lhs = parse_inter();
    while (accept('|')) lhs = binary("|", std::move(lhs), parse_inter());
    return lhs;
  }

  Term parse_inter() {
    Term lhs = parse_resid();
    while (accept('&')) lhs = binary("&", std::move(lhs), parse_resid());
    return lhs;
  }

  Term parse_resid() {
    Term lhs = parse_comp();
    skip_space();
    if (peek() == '\\' || peek() == '/') {
      std::string op(1, peek());
      ++col_, ++pos_;
      lhs = binary(op, std::move(lhs), parse_comp());
      skip_space();
      if (peek() == '\\' || peek() == '/') fail("residuals do not associate; add parentheses");
    }
    return lhs;
  }

  Term parse_comp() {
    Term lhs = parse_prefix();
    while (accept('*')) lhs = binary("*", std::move(lhs), parse_prefix());
    return lhs;
  }

  Term parse_prefix() {
    skip_space();
    Span at = here();
    if (accept('~')) {
      Term t{Term::Kind::Complement, "~", {parse_prefix()}, at};
      return t;
    }
    return parse_postfix();
  }

  Term parse_postfix() {
    Term t = parse_atom();
    skip_space();
    while (peek() == '^') {
      Span at = here();
      ++col_, ++pos_;
      t = Term{Term::Kind::Converse, "^", {std::move(t)}, at};
      skip_space();
    }
    return t;
  }

  Term parse_atom() {
    skip_space();
    Span at = here();
    char c = peek();
    if (c == '(') {
      ++col_, ++pos_;
      Term t = parse_union();
      expect(')');
      return t;
    }
    if (c == '"') {
      ++col_, ++pos_;
      std::string s;
      while (true) {
        if (pos_ >= src_.size() || src_[pos_] == '\n') throw LocatedError(Errc::ParseError, at, "unterminated string");
        char d = src_[pos_++];
        ++col_;
        if (d == '"') break;
        if (d == '\\' && pos_ < src_.size()) {
          d = src_[pos_++];
          ++col_;
        }
        s += d;
      }
      return Term{Term::Kind::String, s, {}, at};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        name += src_[pos_++];
        ++col_;
      }
      skip_space();
      if (peek() != '(') return Term{Term::Kind::Ident, name, {}, at};
      ++col_, ++pos_;
      Term call{Term::Kind::Call, name, {}, at};
      skip_space();
      if (accept(')')) return call;
      do call.args.push_back(parse_union());
      while (accept(','));
      expect(')');
      return call;
    }
    if (pos_ >= src_.size()) fail("unexpected end of expression");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  static Term binary(std::string op, Term lhs, Term rhs) {
    Span at = lhs.at;
    return Term{Term::Kind::Binary, std::move(op), {std::move(lhs), std::move(rhs)}, at};
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++col_, ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= src_.size()) fail(std::string("expected '") + c + "' before end of expression");
      fail(std::string("expected '") + c + "', found '" + peek() + "'");
    }
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  Span here() const { return {line_, col_}; }

  [[noreturn]] void fail(const std::string& msg) const { throw LocatedError(Errc::ParseError, here(), msg); }

  std::string_view src_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

inline std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace term_detail

inline Term parse_term(std::string_view src) { return term_detail::Parser(src).parse(); }

// Prints with the fewest parentheses that reparse to the same tree.
inline std::string print_term(const Term& t) {
  using term_detail::precedence;
  auto wrap = [](const Term& sub, bool paren) { return paren ? "(" + print_term(sub) + ")" : print_term(sub); };
  switch (t.kind) {
    case Term::Kind::Ident: return t.text;
    case Term::Kind::String: return term_detail::quote(t.text);
    case Term::Kind::Call: {
      std::string s = t.text + "(";
      for (std::size_t i = 0; i < t.args.size(); ++i) s += (i ? ", " : "") + print_term(t.args[i]);
      return s + ")";
    }
    case Term::Kind::Converse: return wrap(t.args[0], precedence(t.args[0]) < 6) + "^";
    case Term::Kind::Complement: return "~" + wrap(t.args[0], precedence(t.args[0]) < 5);
    case Term::Kind::Binary: {
      const int p = precedence(t);
      const bool resid = p == 3;
      const std::string op = t.text == "*" ? " * " : " " + t.text + " ";
      return wrap(t.args[0], precedence(t.args[0]) < p || (resid && precedence(t.args[0]) == p)) + op +
             wrap(t.args[1], precedence(t.args[1]) <= p);
    }
  }
  return {};
}

}  // namespace relkit
