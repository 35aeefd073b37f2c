#ifndef TARSKI_UNIFY_HPP
#define TARSKI_UNIFY_HPP

#include <optional>
#include <set>
#include <string>

#include "tarski/subst.hpp"
#include "tarski/term.hpp"

namespace tarski {

// Extends sigma to a most general unifier of s and t (occurs check on).
// On failure sigma is left in an unspecified extended state; callers that
// need rollback pass a copy.
bool unify_terms(const Term& s, const Term& t, Substitution& sigma);
bool unify_atoms(const Literal& a, const Literal& b, Substitution& sigma);

std::optional<Substitution> unify(const Term& s, const Term& t);
// Unifies the atoms; signs are ignored by the caller's choice.
std::optional<Substitution> unify(const Literal& a, const Literal& b);

// One-way matching: variables of the target are treated as constants.
bool match_terms(const Term& pattern, const Term& target, Substitution& sigma);
bool match_atoms(const Literal& pattern, const Literal& target, Substitution& sigma);

std::optional<Substitution> match_onto(const Term& pattern, const Term& target);
std::optional<Substitution> match_onto(const Literal& pattern, const Literal& target);
// Positional clause matching: sigma(pattern.lits[i]) == target.lits[i].
std::optional<Substitution> match_onto(const Clause& pattern, const Clause& target);

// Variant of c whose variables avoid `taken`; literal structure unchanged.
Clause rename_apart(const Clause& c, const std::set<std::string>& taken);

// Renames b's variables away from a's; used before binary inferences.
Clause rename_for_inference(const Clause& a, const Clause& b);

}  // namespace tarski

#endif
