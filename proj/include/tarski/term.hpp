#ifndef TARSKI_TERM_HPP
#define TARSKI_TERM_HPP

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tarski {

// An identifier is a variable iff its first character is one of x y z w u v.
inline bool is_variable_name(std::string_view name) {
  if (name.empty()) return false;
  char c = name.front();
  return c == 'x' || c == 'y' || c == 'z' || c == 'w' || c == 'u' || c == 'v';
}

// First-order term. A variable is a zero-arity term whose head is a variable
// name; everything else is a constant (arity 0) or function application.
struct Term {
  std::string head;
  std::vector<Term> args;

  Term() = default;
  explicit Term(std::string h) : head(std::move(h)) {}
  Term(std::string h, std::vector<Term> a) : head(std::move(h)), args(std::move(a)) {}

  bool is_variable() const { return args.empty() && is_variable_name(head); }

  bool operator==(const Term&) const = default;
  auto operator<=>(const Term&) const = default;
};

// Signed atom. Equality is the distinguished predicate "=", printed infix
// (negated: !=).
struct Literal {
  bool positive = true;
  std::string pred;
  std::vector<Term> args;

  Literal() = default;
  Literal(bool pos, std::string p, std::vector<Term> a)
      : positive(pos), pred(std::move(p)), args(std::move(a)) {}

  bool is_equality() const { return pred == "=" && args.size() == 2; }
  Literal negated() const { return Literal{!positive, pred, args}; }

  bool operator==(const Literal&) const = default;
  auto operator<=>(const Literal&) const = default;
};

// A clause is an ordered disjunction of literals; the empty clause is the
// contradiction, printed "$F.".
struct Clause {
  std::vector<Literal> lits;

  Clause() = default;
  explicit Clause(std::vector<Literal> ls) : lits(std::move(ls)) {}

  bool empty() const { return lits.empty(); }
  bool is_unit() const { return lits.size() == 1; }
  size_t size() const { return lits.size(); }

  bool operator==(const Clause&) const = default;
  auto operator<=>(const Clause&) const = default;
};

int term_symbol_count(const Term& t);

// Symbol-count weight: predicate, function, constant, and variable
// occurrences each count 1; signs and separators are uncounted.
int symbol_count(const Literal& l);
int symbol_count(const Clause& c);

void collect_variables(const Term& t, std::set<std::string>& out);
void collect_variables(const Literal& l, std::set<std::string>& out);
void collect_variables(const Clause& c, std::set<std::string>& out);
std::set<std::string> variables_of(const Clause& c);

void collect_constants(const Term& t, std::set<std::string>& out);
std::set<std::string> constants_of(const Clause& c);

int distinct_variable_count(const Clause& c);

// Contains a complementary literal pair (identical atoms) or a positive t=t.
bool is_tautology(const Clause& c);

bool occurs_in(const std::string& var, const Term& t);

// Maps variables to x y z w u v x1 y1 ... in order of first occurrence.
Clause canonicalize_variables(const Clause& c);

}  // namespace tarski

#endif
