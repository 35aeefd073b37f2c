#ifndef TARSKI_INFERENCE_HPP
#define TARSKI_INFERENCE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tarski/subst.hpp"
#include "tarski/term.hpp"

namespace tarski {

namespace rules {
inline constexpr const char* kBinary = "binary";
inline constexpr const char* kHyper = "hyper";
inline constexpr const char* kUnit = "unit";
inline constexpr const char* kPara = "para";
inline constexpr const char* kFactor = "factor";
}  // namespace rules

struct InferenceResult {
  Clause conclusion;
  std::string rule;
  Substitution unifier;  // for diagnostics
};

// An equation used left-to-right as a rewrite rule.
struct Demodulator {
  Clause equation;

  const Term& lhs() const { return equation.lits[0].args[0]; }
  const Term& rhs() const { return equation.lits[0].args[1]; }
};

// Validates the demodulator shape: one positive equality, every right-side
// variable occurs on the left, left side is not a bare variable.
Demodulator make_demodulator(const Clause& equation);

// One result per pair (positive literal of one, negative literal of the
// other) whose atoms unify. c2 is renamed apart internally.
std::vector<InferenceResult> binary_resolve(const Clause& c1, const Clause& c2);

// Simultaneous unification of each negative nucleus literal with a positive
// literal of the corresponding satellite; satellites must be all-positive,
// one per negative literal, and are renamed apart internally.
std::optional<InferenceResult> hyper_resolve(const Clause& nucleus,
                                             const std::vector<Clause>& satellites);

// Binary resolution restricted to pairs where one parent is a unit.
std::vector<InferenceResult> unit_resolve(const Clause& c1, const Clause& c2);

// For each positive equality s = t of `from` and each unifiable non-variable
// subterm occurrence in `into` (both orientations), replaces the occurrence
// by the other side under the MGU. Never paramodulates into variables.
std::vector<InferenceResult> paramodulate(const Clause& from, const Clause& into);

// One result per unifiable pair of same-sign literals, merged under the MGU.
std::vector<InferenceResult> factor(const Clause& c);

// Theta-subsumption as a literal multiset, with the |general| <= |specific|
// length guard.
bool subsumes(const Clause& general, const Clause& specific);

// Fast path of subsumes for a unit subsumer against one literal.
bool unit_subsumes_literal(const Literal& unit, const Literal& target);

// Variant equality: equal length and mutual subsumption.
bool variant(const Clause& a, const Clause& b);

struct RewriteLimitExceeded : std::runtime_error {
  explicit RewriteLimitExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// Rewrites innermost-leftmost matching subterms left-to-right until fixpoint.
// Indexes of demodulators that fired are appended to `used` (if given), in
// firing order without duplicates. Throws RewriteLimitExceeded past
// step_limit rewrites.
Clause demodulate(const Clause& c, const std::vector<Demodulator>& demods,
                  int step_limit = 1000, std::vector<size_t>* used = nullptr);

}  // namespace tarski

#endif
