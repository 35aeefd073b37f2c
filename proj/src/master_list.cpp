#include "tarski/master_list.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "tarski/parse.hpp"
#include "tarski/unify.hpp"

namespace tarski {

bool TheoremEntry::has_flag(std::string_view f) const {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

const TheoremEntry* MasterList::find_theorem(std::string_view name) const {
  for (const TheoremEntry& t : theorems)
    if (t.name == name) return &t;
  return nullptr;
}

int MasterList::theorem_index(std::string_view name) const {
  for (size_t i = 0; i < theorems.size(); ++i)
    if (theorems[i].name == name) return static_cast<int>(i);
  return -1;
}

namespace {

std::string strip(std::string s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct EntryRef {
  enum Kind { axiom, definition, theorem, none } kind = none;
  size_t index = 0;
};

}  // namespace

MasterParse parse_master_list(std::string_view text) {
  MasterParse out;
  SymbolSession syms;
  std::istringstream in{std::string(text)};
  std::string raw;
  size_t line_no = 0;
  EntryRef cur;
  std::string block;  // active clause block label

  auto entry_name = [&]() -> std::string {
    switch (cur.kind) {
      case EntryRef::axiom: return out.list.axioms[cur.index].name;
      case EntryRef::definition: return out.list.definitions[cur.index].name;
      case EntryRef::theorem: return out.list.theorems[cur.index].name;
      default: return "";
    }
  };
  auto error = [&](const std::string& field, const std::string& msg) {
    out.errors.push_back({entry_name(), field, msg, line_no});
  };
  auto clause_target = [&]() -> std::vector<Clause>* {
    if (cur.kind == EntryRef::axiom && block == "clauses")
      return &out.list.axioms[cur.index].clauses;
    if (cur.kind == EntryRef::definition && block == "clauses")
      return &out.list.definitions[cur.index].clauses;
    if (cur.kind == EntryRef::theorem) {
      TheoremEntry& t = out.list.theorems[cur.index];
      if (block == "negated") return &t.negated_form;
      if (block == "positive") return &t.positive_form;
      if (block == "diagram") return &t.diagram;
      if (block == "cases") return &t.cases;
    }
    return nullptr;
  };

  while (std::getline(in, raw)) {
    ++line_no;
    if (size_t hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string line = strip(raw);
    if (line.empty()) continue;

    if (line.rfind("axiom ", 0) == 0 || line.rfind("definition ", 0) == 0 ||
        line.rfind("theorem ", 0) == 0) {
      std::istringstream hs(line);
      std::string kind, name;
      hs >> kind >> name;
      std::string rest;
      std::getline(hs, rest);
      if (name.empty() || !strip(rest).empty()) {
        cur = {};
        block.clear();
        out.errors.push_back({name, "header", "malformed entry header", line_no});
        continue;
      }
      auto duplicate = [&](const std::string& n) {
        for (const NamedClauses& a : out.list.axioms)
          if (a.name == n) return true;
        for (const NamedClauses& d : out.list.definitions)
          if (d.name == n) return true;
        for (const TheoremEntry& t : out.list.theorems)
          if (t.name == n) return true;
        return false;
      };
      if (duplicate(name))
        out.errors.push_back({name, "header",
                              "duplicate entry name '" + name + "' (already defined earlier)",
                              line_no});
      if (kind == "axiom") {
        out.list.axioms.push_back({name, {}, {}});
        cur = {EntryRef::axiom, out.list.axioms.size() - 1};
      } else if (kind == "definition") {
        out.list.definitions.push_back({name, {}, {}});
        cur = {EntryRef::definition, out.list.definitions.size() - 1};
      } else {
        TheoremEntry t;
        t.name = name;
        out.list.theorems.push_back(std::move(t));
        cur = {EntryRef::theorem, out.list.theorems.size() - 1};
      }
      block.clear();
      continue;
    }

    if (cur.kind == EntryRef::none) {
      out.errors.push_back({"", "structure", "content before any entry header", line_no});
      continue;
    }

    if (line.rfind("skolem:", 0) == 0) {
      // skolem: <name>/<arity> (<arg-order>)
      std::string body = strip(line.substr(7));
      size_t slash = body.find('/');
      size_t lpar = body.find('(');
      size_t rpar = body.find(')');
      if (slash == std::string::npos || lpar == std::string::npos || rpar == std::string::npos ||
          !(slash < lpar && lpar < rpar)) {
        error("skolem", "malformed skolem declaration '" + body + "'");
        continue;
      }
      SkolemDecl decl;
      decl.name = strip(body.substr(0, slash));
      try {
        decl.arity = std::stoi(strip(body.substr(slash + 1, lpar - slash - 1)));
      } catch (const std::exception&) {
        error("skolem", "bad skolem arity in '" + body + "'");
        continue;
      }
      decl.arg_order = split_tokens(body.substr(lpar + 1, rpar - lpar - 1));
      if (static_cast<int>(decl.arg_order.size()) != decl.arity)
        error("skolem", "skolem '" + decl.name + "' declares arity " +
                            std::to_string(decl.arity) + " but lists " +
                            std::to_string(decl.arg_order.size()) + " arguments");
      if (cur.kind == EntryRef::theorem)
        out.list.theorems[cur.index].skolems.push_back(std::move(decl));
      else if (cur.kind == EntryRef::axiom)
        out.list.axioms[cur.index].skolems.push_back(std::move(decl));
      else
        out.list.definitions[cur.index].skolems.push_back(std::move(decl));
      continue;
    }

    if (line.rfind("flags:", 0) == 0) {
      if (cur.kind != EntryRef::theorem) {
        error("flags", "flags are only valid on theorem entries");
        continue;
      }
      for (std::string& f : split_tokens(line.substr(6)))
        out.list.theorems[cur.index].flags.push_back(std::move(f));
      continue;
    }

    if (line.rfind("constmap:", 0) == 0) {
      if (cur.kind != EntryRef::theorem) {
        error("constmap", "constmap is only valid on theorem entries");
        continue;
      }
      for (const std::string& pair : split_tokens(line.substr(9))) {
        size_t eq = pair.find('=');
        if (eq == std::string::npos) {
          error("constmap", "malformed constmap pair '" + pair + "'");
          continue;
        }
        std::string key = pair.substr(0, eq), value = pair.substr(eq + 1);
        if (!is_variable_name(value)) {
          error("constmap", "constmap value '" + value + "' is not a variable name");
          continue;
        }
        out.list.theorems[cur.index].constmap[key] = value;
      }
      continue;
    }

    if (line.size() > 1 && line.back() == ':') {
      std::string label = strip(line.substr(0, line.size() - 1));
      block = label;
      if (!clause_target()) {
        error(label, "block '" + label + "' is not valid here");
        block.clear();
      }
      continue;
    }

    if (line.back() == '.') {
      std::vector<Clause>* target = clause_target();
      if (!target) {
        error("structure", "clause outside a clause block: " + line);
        continue;
      }
      try {
        target->push_back(parse_clause(line, syms));
      } catch (const ParseError& e) {
        error(block, std::string(e.what()) + " in: " + line);
      }
      continue;
    }

    error("structure", "unrecognized line: " + line);
  }
  return out;
}

MasterList parse_master_list_or_throw(std::string_view text) {
  MasterParse p = parse_master_list(text);
  if (!p.ok()) {
    std::string msg = "master list has errors:";
    for (const MasterDiagnostic& d : p.errors)
      msg += "\n  line " + std::to_string(d.line) + " [" + d.entry + "/" + d.field + "] " +
             d.message;
    throw ParseError(msg, p.errors.front().line);
  }
  return std::move(p.list);
}

namespace {

void format_skolem(std::ostringstream& os, const SkolemDecl& s) {
  os << "  skolem: " << s.name << '/' << s.arity << " (";
  for (size_t i = 0; i < s.arg_order.size(); ++i) {
    if (i) os << ',';
    os << s.arg_order[i];
  }
  os << ")\n";
}

void format_block(std::ostringstream& os, const char* label, const std::vector<Clause>& cs) {
  if (cs.empty()) return;
  os << "  " << label << ":\n";
  for (const Clause& c : cs) os << "    " << format_clause(c) << "\n";
}

}  // namespace

std::string format_master_list(const MasterList& m) {
  std::ostringstream os;
  bool first = true;
  auto gap = [&]() {
    if (!first) os << "\n";
    first = false;
  };
  for (const NamedClauses& a : m.axioms) {
    gap();
    os << "axiom " << a.name << "\n";
    for (const SkolemDecl& s : a.skolems) format_skolem(os, s);
    format_block(os, "clauses", a.clauses);
  }
  for (const NamedClauses& d : m.definitions) {
    gap();
    os << "definition " << d.name << "\n";
    for (const SkolemDecl& s : d.skolems) format_skolem(os, s);
    format_block(os, "clauses", d.clauses);
  }
  for (const TheoremEntry& t : m.theorems) {
    gap();
    os << "theorem " << t.name << "\n";
    if (!t.flags.empty()) {
      os << "  flags:";
      for (const std::string& f : t.flags) os << ' ' << f;
      os << "\n";
    }
    for (const SkolemDecl& s : t.skolems) format_skolem(os, s);
    if (!t.constmap.empty()) {
      os << "  constmap:";
      bool firstpair = true;
      for (const auto& [k, v] : t.constmap) {
        os << (firstpair ? " " : ", ") << k << '=' << v;
        firstpair = false;
      }
      os << "\n";
    }
    format_block(os, "negated", t.negated_form);
    format_block(os, "positive", t.positive_form);
    format_block(os, "diagram", t.diagram);
    format_block(os, "cases", t.cases);
  }
  return os.str();
}

namespace {

Term map_constants(const Term& t, const std::map<std::string, std::string>& cmap) {
  if (t.args.empty()) {
    if (is_variable_name(t.head)) return t;
    auto it = cmap.find(t.head);
    return it == cmap.end() ? t : Term(it->second);
  }
  Term out(t.head);
  out.args.reserve(t.args.size());
  for (const Term& a : t.args) out.args.push_back(map_constants(a, cmap));
  return out;
}

Literal map_constants(const Literal& l, const std::map<std::string, std::string>& cmap) {
  Literal out = l;
  for (Term& a : out.args) a = map_constants(a, cmap);
  return out;
}

Term replace_variable(const Term& t, const std::string& var, const Term& value) {
  if (t.is_variable()) return t.head == var ? value : t;
  Term out(t.head);
  out.args.reserve(t.args.size());
  for (const Term& a : t.args) out.args.push_back(replace_variable(a, var, value));
  return out;
}

void goal_variables_in_order(const Clause& c, std::vector<std::string>& out) {
  std::set<std::string> seen;
  std::function<void(const Term&)> walk = [&](const Term& t) {
    if (t.is_variable()) {
      if (seen.insert(t.head).second) out.push_back(t.head);
      return;
    }
    for (const Term& a : t.args) walk(a);
  };
  for (const Literal& l : c.lits)
    for (const Term& a : l.args) walk(a);
}

}  // namespace

SkolemizeResult skolemize_negated(const TheoremEntry& entry) {
  SkolemizeResult result;

  // The goal clause is the one with variables or more than one literal;
  // everything else is a ground hypothesis unit.
  std::vector<size_t> goal_idx;
  for (size_t i = 0; i < entry.negated_form.size(); ++i) {
    const Clause& c = entry.negated_form[i];
    if (c.size() > 1 || !variables_of(c).empty()) goal_idx.push_back(i);
  }
  if (goal_idx.size() > 1) {
    result.fell_back = true;
    result.warnings.push_back(
        "negated form has multiple disjunctions; returning the recorded positive form");
    result.clauses = entry.positive_form;
    return result;
  }

  // Constant-to-variable map: a -> xa unless overridden by the constmap.
  std::map<std::string, std::string> cmap;
  for (const Clause& c : entry.negated_form)
    for (const std::string& k : constants_of(c)) {
      auto ann = entry.constmap.find(k);
      cmap[k] = ann == entry.constmap.end() ? "x" + k : ann->second;
    }
  for (const auto& [k, v] : entry.constmap)
    if (!cmap.count(k))
      result.warnings.push_back("constmap annotation for '" + k +
                                "' matches no constant of the negated form");

  std::vector<Literal> flipped_units;
  for (size_t i = 0; i < entry.negated_form.size(); ++i) {
    if (!goal_idx.empty() && i == goal_idx[0]) continue;
    flipped_units.push_back(map_constants(entry.negated_form[i].lits[0].negated(), cmap));
  }

  if (goal_idx.empty()) {
    result.clauses.push_back(Clause{flipped_units});
    return result;
  }

  const Clause& goal = entry.negated_form[goal_idx[0]];
  std::vector<std::string> goal_vars;
  goal_variables_in_order(goal, goal_vars);
  if (goal_vars.size() != entry.skolems.size()) {
    result.fell_back = true;
    result.warnings.push_back("goal clause has " + std::to_string(goal_vars.size()) +
                              " witness variables but " + std::to_string(entry.skolems.size()) +
                              " skolem declarations; returning the recorded positive form");
    result.clauses = entry.positive_form;
    return result;
  }

  std::vector<Term> witnesses;
  for (size_t k = 0; k < entry.skolems.size(); ++k) {
    Term sk(entry.skolems[k].name);
    for (const std::string& arg : entry.skolems[k].arg_order) {
      auto it = cmap.find(arg);
      sk.args.push_back(Term(it == cmap.end() ? arg : it->second));
    }
    witnesses.push_back(std::move(sk));
  }

  for (const Literal& gl : goal.lits) {
    Literal conclusion = map_constants(gl.negated(), cmap);
    for (size_t k = 0; k < goal_vars.size(); ++k)
      for (Term& a : conclusion.args) a = replace_variable(a, goal_vars[k], witnesses[k]);
    Clause out{flipped_units};
    out.lits.push_back(std::move(conclusion));
    result.clauses.push_back(std::move(out));
  }
  return result;
}

namespace {

struct SkolemIntro {
  int position;  // global entry order: axioms, definitions, theorems
  std::string entry;
  int arity;
};

void collect_function_uses(const Term& t, std::map<std::string, int>& out) {
  if (!t.args.empty()) {
    out.emplace(t.head, static_cast<int>(t.args.size()));
    for (const Term& a : t.args) collect_function_uses(a, out);
  }
}

void collect_function_uses(const Clause& c, std::map<std::string, int>& out) {
  for (const Literal& l : c.lits)
    for (const Term& a : l.args) collect_function_uses(a, out);
}

}  // namespace

std::vector<CheckViolation> check_master_list(const MasterList& m) {
  std::vector<CheckViolation> vs;

  // Duplicate entry names.
  {
    std::map<std::string, std::string> seen;  // name -> kind
    auto note = [&](const std::string& name, const char* kind) {
      auto [it, fresh] = seen.emplace(name, kind);
      if (!fresh)
        vs.push_back({name, "name",
                      "entry name defined twice (as " + it->second + " and " + kind + ")"});
    };
    for (const NamedClauses& a : m.axioms) note(a.name, "axiom");
    for (const NamedClauses& d : m.definitions) note(d.name, "definition");
    for (const TheoremEntry& t : m.theorems) note(t.name, "theorem");
  }

  // (1) Mechanical Skolemization agrees with the recorded positive form.
  for (const TheoremEntry& t : m.theorems) {
    if (t.has_flag("manual_skolemization")) continue;
    SkolemizeResult r = skolemize_negated(t);
    if (r.fell_back) {
      vs.push_back({t.name, "positive",
                    "not mechanically skolemizable and not flagged manual_skolemization: " +
                        r.warnings.front()});
      continue;
    }
    if (r.clauses.size() != t.positive_form.size()) {
      vs.push_back({t.name, "positive",
                    "skolemization yields " + std::to_string(r.clauses.size()) +
                        " clauses, recorded positive form has " +
                        std::to_string(t.positive_form.size())});
      continue;
    }
    for (size_t i = 0; i < r.clauses.size(); ++i)
      if (!variant(r.clauses[i], t.positive_form[i]))
        vs.push_back({t.name, "positive",
                      "skolemization mismatch: computed " + format_clause(r.clauses[i]) +
                          " but recorded " + format_clause(t.positive_form[i])});
  }

  // (2) Diagram equations define a new constant each.
  for (const TheoremEntry& t : m.theorems) {
    std::set<std::string> theorem_consts;
    for (const Clause& c : t.negated_form) {
      std::set<std::string> cs = constants_of(c);
      theorem_consts.insert(cs.begin(), cs.end());
    }
    std::set<std::string> prior_rhs;
    for (const Clause& eq : t.diagram) {
      if (!eq.is_unit() || !eq.lits[0].positive || !eq.lits[0].is_equality() ||
          !eq.lits[0].args[0].args.empty() || eq.lits[0].args[0].is_variable()) {
        vs.push_back({t.name, "diagram",
                      "diagram line is not an equation with a constant on the left: " +
                          format_clause(eq)});
        continue;
      }
      const std::string& c = eq.lits[0].args[0].head;
      std::set<std::string> rhs;
      collect_constants(eq.lits[0].args[1], rhs);
      if (theorem_consts.count(c))
        vs.push_back({t.name, "diagram",
                      "diagram constant '" + c + "' is not new: it occurs in the theorem"});
      if (prior_rhs.count(c))
        vs.push_back({t.name, "diagram",
                      "diagram constant '" + c +
                          "' used before introduction (it occurs on the right side of a "
                          "previous diagram equation)"});
      if (rhs.count(c))
        vs.push_back({t.name, "diagram",
                      "diagram constant '" + c + "' occurs on its own right side"});
      prior_rhs.insert(rhs.begin(), rhs.end());
    }
  }

  // (3)+(4) Skolem symbols: unique introduction, never used early, declared
  // arity respected (positive forms of later entries included via the scan).
  std::map<std::string, SkolemIntro> intro;
  int position = 0;
  auto declare = [&](const std::vector<SkolemDecl>& decls, const std::string& entry) {
    for (const SkolemDecl& d : decls) {
      auto [it, fresh] = intro.emplace(d.name, SkolemIntro{position, entry, d.arity});
      if (!fresh)
        vs.push_back({entry, "skolem",
                      "skolem symbol '" + d.name + "' already introduced by entry '" +
                          it->second.entry + "'"});
    }
  };
  std::vector<std::pair<std::string, std::map<std::string, int>>> uses_by_entry;
  auto scan = [&](const std::string& entry, const std::vector<const std::vector<Clause>*>& lists) {
    std::map<std::string, int> uses;
    for (const std::vector<Clause>* cs : lists)
      for (const Clause& c : *cs) collect_function_uses(c, uses);
    uses_by_entry.emplace_back(entry, std::move(uses));
  };
  for (const NamedClauses& a : m.axioms) {
    declare(a.skolems, a.name);
    scan(a.name, {&a.clauses});
    ++position;
  }
  for (const NamedClauses& d : m.definitions) {
    declare(d.skolems, d.name);
    scan(d.name, {&d.clauses});
    ++position;
  }
  for (const TheoremEntry& t : m.theorems) {
    declare(t.skolems, t.name);
    scan(t.name, {&t.positive_form, &t.negated_form, &t.diagram, &t.cases});
    ++position;
  }
  for (int p = 0; p < static_cast<int>(uses_by_entry.size()); ++p) {
    const auto& [entry, uses] = uses_by_entry[p];
    for (const auto& [fn, arity] : uses) {
      auto it = intro.find(fn);
      if (it == intro.end()) continue;  // ordinary function symbol
      if (it->second.position > p)
        vs.push_back({entry, "skolem",
                      "skolem symbol '" + fn + "' used before its introduction in entry '" +
                          it->second.entry + "'"});
      if (it->second.arity != arity)
        vs.push_back({entry, "skolem",
                      "skolem symbol '" + fn + "' used with arity " + std::to_string(arity) +
                          " but declared with arity " + std::to_string(it->second.arity)});
    }
  }

  return vs;
}

ProblemSpec build_problem(const MasterList& m, const std::string& name,
                          const BuildOptions& options) {
  int idx = m.theorem_index(name);
  if (idx < 0) throw std::out_of_range("unknown theorem '" + name + "'");
  const TheoremEntry& entry = m.theorems[static_cast<size_t>(idx)];

  ProblemSpec p;
  p.name = name;
  p.settings = options.settings;
  p.hints = options.hints;
  for (const NamedClauses& a : m.axioms)
    p.usable.insert(p.usable.end(), a.clauses.begin(), a.clauses.end());
  for (const NamedClauses& d : m.definitions)
    p.usable.insert(p.usable.end(), d.clauses.begin(), d.clauses.end());
  for (int i = 0; i < idx; ++i)
    p.usable.insert(p.usable.end(), m.theorems[static_cast<size_t>(i)].positive_form.begin(),
                    m.theorems[static_cast<size_t>(i)].positive_form.end());
  p.sos = entry.negated_form;
  if (options.use_diagram) p.sos.insert(p.sos.end(), entry.diagram.begin(), entry.diagram.end());
  if (options.use_cases) p.sos.insert(p.sos.end(), entry.cases.begin(), entry.cases.end());
  return p;
}

}  // namespace tarski
