#include "tarski/term.hpp"

#include <map>

namespace tarski {

int term_symbol_count(const Term& t) {
  int n = 1;
  for (const Term& a : t.args) n += term_symbol_count(a);
  return n;
}

int symbol_count(const Literal& l) {
  int n = 1;  // predicate symbol
  for (const Term& a : l.args) n += term_symbol_count(a);
  return n;
}

int symbol_count(const Clause& c) {
  int n = 0;
  for (const Literal& l : c.lits) n += symbol_count(l);
  return n;
}

void collect_variables(const Term& t, std::set<std::string>& out) {
  if (t.is_variable()) {
    out.insert(t.head);
    return;
  }
  for (const Term& a : t.args) collect_variables(a, out);
}

void collect_variables(const Literal& l, std::set<std::string>& out) {
  for (const Term& a : l.args) collect_variables(a, out);
}

void collect_variables(const Clause& c, std::set<std::string>& out) {
  for (const Literal& l : c.lits) collect_variables(l, out);
}

std::set<std::string> variables_of(const Clause& c) {
  std::set<std::string> vars;
  collect_variables(c, vars);
  return vars;
}

void collect_constants(const Term& t, std::set<std::string>& out) {
  if (t.args.empty()) {
    if (!is_variable_name(t.head)) out.insert(t.head);
    return;
  }
  for (const Term& a : t.args) collect_constants(a, out);
}

std::set<std::string> constants_of(const Clause& c) {
  std::set<std::string> consts;
  for (const Literal& l : c.lits)
    for (const Term& a : l.args) collect_constants(a, consts);
  return consts;
}

int distinct_variable_count(const Clause& c) {
  return static_cast<int>(variables_of(c).size());
}

bool is_tautology(const Clause& c) {
  for (size_t i = 0; i < c.lits.size(); ++i) {
    const Literal& l = c.lits[i];
    if (l.positive && l.is_equality() && l.args[0] == l.args[1]) return true;
    for (size_t j = i + 1; j < c.lits.size(); ++j) {
      const Literal& m = c.lits[j];
      if (l.positive != m.positive && l.pred == m.pred && l.args == m.args) return true;
    }
  }
  return false;
}

bool occurs_in(const std::string& var, const Term& t) {
  if (t.is_variable()) return t.head == var;
  for (const Term& a : t.args)
    if (occurs_in(var, a)) return true;
  return false;
}

namespace {

const char* kCanonicalBases[6] = {"x", "y", "z", "w", "u", "v"};

std::string canonical_variable(size_t index) {
  std::string name = kCanonicalBases[index % 6];
  if (index >= 6) name += std::to_string(index / 6);
  return name;
}

void canonicalize_term(const Term& t, std::map<std::string, std::string>& map, Term& out) {
  if (t.is_variable()) {
    auto it = map.find(t.head);
    if (it == map.end())
      it = map.emplace(t.head, canonical_variable(map.size())).first;
    out = Term(it->second);
    return;
  }
  out = Term(t.head);
  out.args.reserve(t.args.size());
  for (const Term& a : t.args) {
    Term sub;
    canonicalize_term(a, map, sub);
    out.args.push_back(std::move(sub));
  }
}

}  // namespace

Clause canonicalize_variables(const Clause& c) {
  std::map<std::string, std::string> map;
  Clause out;
  out.lits.reserve(c.lits.size());
  for (const Literal& l : c.lits) {
    Literal nl;
    nl.positive = l.positive;
    nl.pred = l.pred;
    nl.args.reserve(l.args.size());
    for (const Term& a : l.args) {
      Term sub;
      canonicalize_term(a, map, sub);
      nl.args.push_back(std::move(sub));
    }
    out.lits.push_back(std::move(nl));
  }
  return out;
}

}  // namespace tarski
