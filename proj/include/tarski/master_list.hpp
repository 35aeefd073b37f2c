#ifndef TARSKI_MASTER_LIST_HPP
#define TARSKI_MASTER_LIST_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tarski/saturation.hpp"

namespace tarski {

struct SkolemDecl {
  std::string name;
  int arity = 0;
  std::vector<std::string> arg_order;  // constant names of the negated form

  bool operator==(const SkolemDecl&) const = default;
};

// An axiom or definition group.
struct NamedClauses {
  std::string name;
  std::vector<Clause> clauses;
  std::vector<SkolemDecl> skolems;
};

struct TheoremEntry {
  std::string name;
  std::vector<Clause> positive_form;
  std::vector<Clause> negated_form;
  std::vector<Clause> diagram;  // unit equations, new constant on the left
  std::vector<Clause> cases;
  std::vector<SkolemDecl> skolems;
  std::vector<std::string> flags;
  std::map<std::string, std::string> constmap;  // e.g. cu -> u

  bool has_flag(std::string_view f) const;
};

struct MasterList {
  std::vector<NamedClauses> axioms;
  std::vector<NamedClauses> definitions;
  std::vector<TheoremEntry> theorems;

  const TheoremEntry* find_theorem(std::string_view name) const;
  int theorem_index(std::string_view name) const;  // -1 when absent
};

struct MasterDiagnostic {
  std::string entry;
  std::string field;
  std::string message;
  size_t line = 0;
};

struct MasterParse {
  MasterList list;
  std::vector<MasterDiagnostic> errors;

  bool ok() const { return errors.empty(); }
};

// Sectioned plain-text format: entries `axiom <Name>` / `definition <Name>` /
// `theorem <Name>`; blocks `clauses:`, `negated:`, `positive:`, `diagram:`,
// `cases:` hold one clause per line; inline lines `skolem: <name>/<arity>
// (<arg-order>)`, `flags: ...`, `constmap: c=v, ...`; '#' comments.
MasterParse parse_master_list(std::string_view text);
MasterList parse_master_list_or_throw(std::string_view text);

std::string format_master_list(const MasterList& m);

struct SkolemizeResult {
  std::vector<Clause> clauses;
  std::vector<std::string> warnings;
  bool fell_back = false;  // recorded positive form returned instead
};

// Text-mechanical Skolemization of the negated form: every literal flips
// sign, constants become x-prefixed variables (constmap overrides), and the
// goal clause's variables become Skolem terms over the declared argument
// order. Falls back to the recorded positive form when the negated form has
// more than one non-unit or variable-bearing clause.
SkolemizeResult skolemize_negated(const TheoremEntry& entry);

struct CheckViolation {
  std::string entry;
  std::string field;
  std::string message;
};

// Verifies Skolemization against the recorded positive forms, diagram
// equation shape and constant newness, unique Skolem introduction, and that
// no entry uses a Skolem symbol before its introducing entry.
std::vector<CheckViolation> check_master_list(const MasterList& m);

struct BuildOptions {
  bool use_diagram = true;
  bool use_cases = false;
  std::vector<Clause> hints;
  Settings settings;
};

// sos = negated form (+ diagram, + cases); usable = axioms + definitions +
// strictly earlier theorems' positive forms. Throws std::out_of_range for an
// unknown theorem name.
ProblemSpec build_problem(const MasterList& m, const std::string& name,
                          const BuildOptions& options);

// The shipped fixture;  parsed once from the embedded master list text.
const MasterList& starter_corpus();
const std::string& starter_corpus_text();

}  // namespace tarski

#endif
