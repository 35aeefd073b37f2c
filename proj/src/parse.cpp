#include "tarski/parse.hpp"

#include <cctype>
#include <sstream>

namespace tarski {

void SymbolSession::note_function(const std::string& name, int arity, size_t pos) {
  if (pred_arity_.count(name))
    throw ParseError("symbol '" + name + "' used as both predicate and function", pos);
  auto [it, fresh] = fn_arity_.emplace(name, arity);
  if (!fresh && it->second != arity)
    throw ParseError("arity clash for '" + name + "': " + std::to_string(arity) +
                         " vs previously seen " + std::to_string(it->second),
                     pos);
}

void SymbolSession::note_predicate(const std::string& name, int arity, size_t pos) {
  if (fn_arity_.count(name))
    throw ParseError("symbol '" + name + "' used as both predicate and function", pos);
  auto [it, fresh] = pred_arity_.emplace(name, arity);
  if (!fresh && it->second != arity)
    throw ParseError("arity clash for '" + name + "': " + std::to_string(arity) +
                         " vs previously seen " + std::to_string(it->second),
                     pos);
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  Parser(std::string_view text, SymbolSession& syms) : text_(text), syms_(syms) {}

  Clause clause() {
    skip_ws();
    Clause c;
    if (peek() == '$') {
      expect_token("$F");
      skip_ws();
      expect('.');
      end();
      return c;
    }
    c.lits.push_back(literal());
    skip_ws();
    while (peek() == '|') {
      ++pos_;
      c.lits.push_back(literal());
      skip_ws();
    }
    expect('.');
    end();
    return c;
  }

  Term term_only() {
    skip_ws();
    Term t = term();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input after term", pos_);
    return t;
  }

 private:
  std::string_view text_;
  SymbolSession& syms_;
  size_t pos_ = 0;

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void expect_token(std::string_view tok) {
    if (text_.substr(pos_, tok.size()) != tok)
      throw ParseError("expected '" + std::string(tok) + "'", pos_);
    pos_ += tok.size();
  }

  void end() {
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input after clause", pos_);
  }

  std::string identifier() {
    skip_ws();
    size_t start = pos_;
    if (pos_ >= text_.size() || !ident_start(text_[pos_]))
      throw ParseError("expected identifier", pos_);
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Term term() {
    size_t start = pos_;
    std::string name = identifier();
    skip_ws();
    if (peek() != '(') {
      if (!is_variable_name(name)) syms_.note_function(name, 0, start);
      return Term(std::move(name));
    }
    if (is_variable_name(name))
      throw ParseError("variable '" + name + "' used as a function symbol", start);
    ++pos_;  // '('
    std::vector<Term> args;
    args.push_back(argument(name));
    skip_ws();
    while (peek() == ',') {
      ++pos_;
      args.push_back(argument(name));
      skip_ws();
    }
    if (peek() != ')') throw ParseError("unclosed argument list of '" + name + "'", pos_);
    ++pos_;
    syms_.note_function(name, static_cast<int>(args.size()), start);
    return Term(std::move(name), std::move(args));
  }

  Term argument(const std::string& of) {
    skip_ws();
    if (pos_ >= text_.size())
      throw ParseError("unclosed argument list of '" + of + "'", pos_);
    return term();
  }

  Literal literal() {
    skip_ws();
    bool positive = true;
    size_t start = pos_;
    if (peek() == '-') {
      positive = false;
      ++pos_;
      skip_ws();
      start = pos_;
    }
    // Parse a term first; '=' or '!=' after it makes this an equality literal,
    // otherwise the head is reinterpreted as a predicate symbol.
    size_t head_pos = pos_;
    Term t = term_or_atom(head_pos);
    skip_ws();
    if (peek() == '=' || (peek() == '!' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '=')) {
      if (!positive)
        throw ParseError("write negated equality as t1 != t2, not -(t1 = t2)", start);
      bool eq_positive = true;
      if (peek() == '!') {
        eq_positive = false;
        pos_ += 2;
      } else {
        ++pos_;
      }
      commit_as_function(t, head_pos);
      Term rhs = term();
      return Literal{eq_positive, "=", {std::move(t), std::move(rhs)}};
    }
    if (t.is_variable())
      throw ParseError("variable '" + t.head + "' used as a predicate", head_pos);
    syms_.note_predicate(t.head, static_cast<int>(t.args.size()), head_pos);
    return Literal{positive, t.head, std::move(t.args)};
  }

  // Like term(), but defers classifying the outermost symbol until we know
  // whether it is a predicate or the left side of an equality.
  Term term_or_atom(size_t& head_pos) {
    skip_ws();
    head_pos = pos_;
    std::string name = identifier();
    skip_ws();
    if (peek() != '(') return Term(std::move(name));
    if (is_variable_name(name))
      throw ParseError("variable '" + name + "' used as a function symbol", head_pos);
    ++pos_;
    std::vector<Term> args;
    args.push_back(argument(name));
    skip_ws();
    while (peek() == ',') {
      ++pos_;
      args.push_back(argument(name));
      skip_ws();
    }
    if (peek() != ')') throw ParseError("unclosed argument list of '" + name + "'", pos_);
    ++pos_;
    return Term(std::move(name), std::move(args));
  }

  void commit_as_function(const Term& t, size_t pos) {
    if (t.is_variable()) return;
    syms_.note_function(t.head, static_cast<int>(t.args.size()), pos);
  }
};

void format_term_into(const Term& t, std::string& out) {
  out += t.head;
  if (t.args.empty()) return;
  out += '(';
  for (size_t i = 0; i < t.args.size(); ++i) {
    if (i) out += ',';
    format_term_into(t.args[i], out);
  }
  out += ')';
}

}  // namespace

Clause parse_clause(std::string_view text, SymbolSession& syms) {
  return Parser(text, syms).clause();
}

Clause parse_clause(std::string_view text) {
  SymbolSession syms;
  return parse_clause(text, syms);
}

Term parse_term(std::string_view text) {
  SymbolSession syms;
  return Parser(text, syms).term_only();
}

std::string format_term(const Term& t) {
  std::string out;
  format_term_into(t, out);
  return out;
}

std::string format_literal(const Literal& l) {
  std::string out;
  if (l.is_equality()) {
    format_term_into(l.args[0], out);
    out += l.positive ? " = " : " != ";
    format_term_into(l.args[1], out);
    return out;
  }
  if (!l.positive) out += '-';
  out += l.pred;
  if (!l.args.empty()) {
    out += '(';
    for (size_t i = 0; i < l.args.size(); ++i) {
      if (i) out += ',';
      format_term_into(l.args[i], out);
    }
    out += ')';
  }
  return out;
}

std::string format_clause(const Clause& c) {
  if (c.empty()) return "$F.";
  std::string out;
  for (size_t i = 0; i < c.lits.size(); ++i) {
    if (i) out += " | ";
    out += format_literal(c.lits[i]);
  }
  out += '.';
  return out;
}

}  // namespace tarski
