#include "tarski/strategies.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tarski/parse.hpp"
#include "tarski/proof_io.hpp"
#include "tarski/unify.hpp"

namespace tarski {

bool HintSet::add(const Clause& c, std::string source) {
  for (const Clause& existing : clauses)
    if (variant(existing, c)) return false;
  clauses.push_back(c);
  provenance.push_back(std::move(source));
  return true;
}

HintSet generate_subformula_hints(const std::vector<Clause>& sos) {
  HintSet hints;
  for (const Clause& c : sos) {
    for (const Literal& l : c.lits) {
      hints.add(Clause{{l}}, "subformula");
      hints.add(Clause{{l.negated()}}, "subformula");
    }
  }
  return hints;
}

HintSet extract_hints_from_proof(const Proof& pf) {
  HintSet hints;
  for (const ProofStep& s : pf.steps) {
    if (s.is_input() || s.clause.empty()) continue;
    hints.add(s.clause, "proof");
  }
  return hints;
}

HintSet extract_hints_from_proof_file(const std::filesystem::path& path) {
  return extract_hints_from_proof(read_proof_file(path));
}

std::string format_hints_sidecar(const HintSet& hints, const std::string& title) {
  std::ostringstream os;
  os << "# hints: " << title << "\n";
  for (size_t i = 0; i < hints.clauses.size(); ++i)
    os << format_clause(hints.clauses[i]) << "  # " << hints.provenance[i] << "\n";
  return os.str();
}

std::vector<Clause> parse_hints_sidecar(std::string_view text) {
  std::vector<Clause> out;
  SymbolSession syms;
  std::istringstream in{std::string(text)};
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    size_t last = line.find_last_not_of(" \t\r");
    try {
      out.push_back(parse_clause(std::string_view(line).substr(begin, last - begin + 1), syms));
    } catch (const ParseError& e) {
      throw ParseError("hints line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
  }
  return out;
}

ProblemSpec adjoin_cases(const ProblemSpec& p, const std::vector<CaseSplit>& splits) {
  ProblemSpec out = p;
  for (const CaseSplit& s : splits)
    out.sos.push_back(Clause{{s.atom, s.atom.negated()}});
  return out;
}

std::pair<ProblemSpec, ProblemSpec> split_problem(const ProblemSpec& p, const Literal& atom) {
  ProblemSpec with = p;
  ProblemSpec without = p;
  with.sos.push_back(Clause{{atom}});
  without.sos.push_back(Clause{{atom.negated()}});
  return {std::move(with), std::move(without)};
}

namespace {

bool term_mentions(const Term& hay, const Term& needle) {
  if (hay == needle) return true;
  for (const Term& a : hay.args)
    if (term_mentions(a, needle)) return true;
  return false;
}

bool unifies_with_subterm_of(const Term& side, const Literal& atom) {
  // Conservative overlap test: could rewriting with this equality side touch
  // a term of the case atom?
  std::vector<const Term*> stack;
  for (const Term& a : atom.args) stack.push_back(&a);
  while (!stack.empty()) {
    const Term* t = stack.back();
    stack.pop_back();
    if (!t->is_variable()) {
      Substitution sigma;
      if (unify_terms(side, *t, sigma)) return true;
    }
    for (const Term& a : t->args) stack.push_back(&a);
  }
  return false;
}

struct BuilderStep {
  Clause clause;
  std::string rule;
  std::vector<int> parents;  // ids in the builder's own space
  std::vector<int> demods;
};

}  // namespace

CombineOutcome combine_case_proofs(const Proof& from_atom, const Proof& from_negation,
                                   const Literal& atom) {
  const Clause atom_unit{{atom}};
  const Literal neg_atom = atom.negated();
  const Clause neg_unit{{neg_atom}};

  // Locate the case-atom input of the first proof.
  int atom_step = -1;
  for (const ProofStep& s : from_atom.steps)
    if (s.is_input() && variant(s.clause, atom_unit)) {
      atom_step = s.id;
      break;
    }
  if (atom_step < 0) return {from_atom, {}};

  // Descendants of the atom input.
  std::set<int> affected{atom_step};
  for (const ProofStep& s : from_atom.steps) {
    for (int p : s.parents)
      if (affected.count(p)) {
        affected.insert(s.id);
        break;
      }
  }

  std::map<int, const ProofStep*> atom_by_id;
  for (const ProofStep& s : from_atom.steps) atom_by_id[s.id] = &s;

  for (const ProofStep& s : from_atom.steps) {
    if (!affected.count(s.id) || s.is_input()) continue;
    if (s.rule == rules::kHyper)
      return {std::nullopt,
              "hyperresolution step " + std::to_string(s.id) + " descends from the case atom"};
    if (s.rule == rules::kPara) {
      const ProofStep* from = atom_by_id.at(s.parents.at(0));
      for (const Literal& l : from->clause.lits) {
        if (!l.positive || !l.is_equality()) continue;
        if (unifies_with_subterm_of(l.args[0], atom) || unifies_with_subterm_of(l.args[1], atom))
          return {std::nullopt, "paramodulation step " + std::to_string(s.id) +
                                    " may rewrite inside the case atom"};
      }
    }
    if (!s.demods.empty())
      return {std::nullopt,
              "demodulated step " + std::to_string(s.id) + " descends from the case atom"};
  }

  // Rebuild the first proof with -atom disjoined onto every affected step.
  std::vector<BuilderStep> steps;
  std::map<int, int> map_atom;  // old id -> builder id
  auto push = [&](BuilderStep s) {
    steps.push_back(std::move(s));
    return static_cast<int>(steps.size());
  };
  auto remap = [](const std::map<int, int>& m, const std::vector<int>& ids) {
    std::vector<int> out;
    out.reserve(ids.size());
    for (int i : ids) out.push_back(m.at(i));
    return out;
  };

  for (const ProofStep& s : from_atom.steps) {
    if (s.id == atom_step) {
      map_atom[s.id] = push({Clause{{atom, neg_atom}}, origin_name(Origin::input_sos), {}, {}});
      continue;
    }
    if (!affected.count(s.id)) {
      map_atom[s.id] = push({s.clause, s.rule, remap(map_atom, s.parents),
                             remap(map_atom, s.demods)});
      continue;
    }
    int in_affected = 0;
    for (int p : s.parents)
      if (affected.count(p)) ++in_affected;
    Clause extended = s.clause;
    extended.lits.push_back(neg_atom);
    // Resolution on two affected parents yields two copies of -atom; an
    // explicit factor step merges them. A unit parent extended by -atom is
    // no longer a unit, so transformed unit steps replay as binary.
    std::string rule = s.rule == rules::kUnit ? rules::kBinary : s.rule;
    if (in_affected >= 2) {
      Clause doubled = extended;
      doubled.lits.push_back(neg_atom);
      int raw = push({std::move(doubled), rule, remap(map_atom, s.parents), {}});
      map_atom[s.id] = push({std::move(extended), rules::kFactor, {raw}, {}});
    } else {
      map_atom[s.id] = push({std::move(extended), rule, remap(map_atom, s.parents), {}});
    }
  }
  int derived_negation = map_atom.at(from_atom.steps.back().id);

  // Append the second proof, with its -atom input replaced by the derived
  // unit and shared inputs deduplicated.
  std::map<int, int> map_neg;
  for (const ProofStep& s : from_negation.steps) {
    if (s.is_input()) {
      if (variant(s.clause, neg_unit)) {
        map_neg[s.id] = derived_negation;
        continue;
      }
      int existing = 0;
      for (size_t i = 0; i < steps.size(); ++i) {
        const BuilderStep& b = steps[i];
        if (b.parents.empty() && b.rule.rfind("input-", 0) == 0 && b.rule == s.rule &&
            variant(b.clause, s.clause)) {
          existing = static_cast<int>(i) + 1;
          break;
        }
      }
      map_neg[s.id] = existing ? existing : push({s.clause, s.rule, {}, {}});
      continue;
    }
    map_neg[s.id] = push({s.clause, s.rule, remap(map_neg, s.parents), remap(map_neg, s.demods)});
  }
  int final_id = map_neg.at(from_negation.steps.back().id);

  // Prune to the ancestor closure of the final step and renumber.
  std::set<int> needed;
  std::vector<int> todo{final_id};
  while (!todo.empty()) {
    int id = todo.back();
    todo.pop_back();
    if (!needed.insert(id).second) continue;
    for (int p : steps[id - 1].parents) todo.push_back(p);
    for (int d : steps[id - 1].demods) todo.push_back(d);
  }

  Proof out;
  out.problem = from_atom.problem;
  out.settings_digest = from_atom.settings_digest;
  out.target_goal = 0;
  std::map<int, int> final_map;
  for (int id : needed) {  // increasing builder ids preserve topology
    const BuilderStep& b = steps[id - 1];
    ProofStep step;
    step.id = static_cast<int>(final_map.size()) + 1;
    step.clause = b.clause;
    step.rule = b.rule;
    step.parents = remap(final_map, b.parents);
    step.demods = remap(final_map, b.demods);
    final_map[id] = step.id;
    out.steps.push_back(std::move(step));
  }

  if (VerifyResult v = verify_proof(out, {}); !v.ok)
    return {std::nullopt, "combined proof fails replay at step " +
                              std::to_string(v.failing_step) + ": " + v.message};
  return {std::move(out), {}};
}

ProblemSpec lemma_adjunction_plan(const ProblemSpec& p, const std::vector<Clause>& book_steps) {
  for (const Clause& step : book_steps)
    if (!variables_of(step).empty())
      throw std::invalid_argument(
          "book step is not ground (its negation is not clausal): " + format_clause(step));

  ProblemSpec out = p;
  int next_goal = 0;
  for (const PassiveGoal& g : p.passive) next_goal = std::max(next_goal, g.goal);
  HintSet existing;
  for (const Clause& h : out.hints) existing.add(h, "given");
  for (const Clause& step : book_steps) {
    if (existing.add(step, "book")) out.hints.push_back(step);
    for (const Literal& l : step.lits)
      out.passive.push_back({++next_goal, Clause{{l.negated()}}});
  }
  out.settings.max_proofs =
      std::max(out.settings.max_proofs, static_cast<int>(book_steps.size()) + 1);
  return out;
}

}  // namespace tarski
