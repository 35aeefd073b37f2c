#ifndef TARSKI_STRATEGIES_HPP
#define TARSKI_STRATEGIES_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tarski/saturation.hpp"

namespace tarski {

// A proposed case split; the adjoined clause is atom | -atom.
struct CaseSplit {
  Literal atom;
};

// Deduplicated hint clauses with per-clause source tags.
struct HintSet {
  std::vector<Clause> clauses;
  std::vector<std::string> provenance;

  // Returns false (and keeps the set unchanged) when c is a variant of an
  // existing hint.
  bool add(const Clause& c, std::string source);
  size_t size() const { return clauses.size(); }
  bool empty() const { return clauses.empty(); }
};

// For every literal of every sos clause, the unit clause and its negation.
HintSet generate_subformula_hints(const std::vector<Clause>& sos);

// Every derived step of the proof becomes a hint; input clauses and the
// empty clause are excluded.
HintSet extract_hints_from_proof(const Proof& pf);
HintSet extract_hints_from_proof_file(const std::filesystem::path& path);

// One clause per line in kernel syntax, '#'-comments allowed.
std::string format_hints_sidecar(const HintSet& hints, const std::string& title);
std::vector<Clause> parse_hints_sidecar(std::string_view text);

// Appends one tautology clause atom | -atom to sos per split.
ProblemSpec adjoin_cases(const ProblemSpec& p, const std::vector<CaseSplit>& splits);

// The two sub-problems with unit atom resp. -atom added to sos.
std::pair<ProblemSpec, ProblemSpec> split_problem(const ProblemSpec& p, const Literal& atom);

struct CombineOutcome {
  std::optional<Proof> proof;
  std::string reason;  // set when not combinable

  bool combinable() const { return proof.has_value(); }
};

// Welds a refutation from `atom` and one from its negation into a single
// refutation from the tautology atom | -atom. Implemented for proofs whose
// atom-descended steps use only binary/unit resolution, factoring, and
// paramodulation away from atom's terms; anything else is NotCombinable.
// A produced proof always passes verify_proof.
CombineOutcome combine_case_proofs(const Proof& from_atom, const Proof& from_negation,
                                   const Literal& atom);

// Book steps become hints plus negated passive goals with fresh numbers;
// max_proofs is raised to cover every goal and the main goal. Non-ground
// steps are rejected.
ProblemSpec lemma_adjunction_plan(const ProblemSpec& p, const std::vector<Clause>& book_steps);

}  // namespace tarski

#endif
