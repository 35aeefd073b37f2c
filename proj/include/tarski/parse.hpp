#ifndef TARSKI_PARSE_HPP
#define TARSKI_PARSE_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tarski/term.hpp"

namespace tarski {

struct ParseError : std::runtime_error {
  ParseError(std::string msg, size_t position)
      : std::runtime_error(std::move(msg)), pos(position) {}
  size_t pos;
};

// Tracks arity and predicate-vs-function use of each symbol within one
// problem; clashes with a previously seen use are parse errors.
class SymbolSession {
 public:
  void note_function(const std::string& name, int arity, size_t pos);
  void note_predicate(const std::string& name, int arity, size_t pos);

  const std::map<std::string, int>& functions() const { return fn_arity_; }
  const std::map<std::string, int>& predicates() const { return pred_arity_; }

 private:
  std::map<std::string, int> fn_arity_;
  std::map<std::string, int> pred_arity_;
};

// One clause terminated by '.'; literals separated by '|'; atoms are
// P(t1,...,tn), t1 = t2 or t1 != t2; negation prefix '-'; "$F." is the
// empty clause.
Clause parse_clause(std::string_view text, SymbolSession& syms);
Clause parse_clause(std::string_view text);

Term parse_term(std::string_view text);

std::string format_term(const Term& t);
std::string format_literal(const Literal& l);
// Canonical single-line rendering; parse_clause(format_clause(c)) == c.
std::string format_clause(const Clause& c);

}  // namespace tarski

#endif
