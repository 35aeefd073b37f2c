#ifndef TARSKI_SATURATION_HPP
#define TARSKI_SATURATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "tarski/inference.hpp"
#include "tarski/term.hpp"

namespace tarski {

enum class HintMode { off, subsumes_hint, subsumed_by_hint, both };

const char* hint_mode_name(HintMode m);

struct RuleFlags {
  bool binary = true;
  bool hyper = true;
  bool unit = true;
  bool paramodulation = true;
  bool factoring = true;
};

struct Settings {
  int max_weight = 16;
  int pick_given_ratio = 4;
  int max_proofs = 1;
  std::optional<int> max_distinct_vars;
  std::optional<int> max_seconds;
  std::optional<long> max_given;
  RuleFlags rules;
  HintMode hint_mode = HintMode::off;
  int bsub_hint_wt = -1;               // weight when subsumed by a hint
  std::optional<int> fsub_hint_wt;     // weight when subsuming a hint; off by default
  bool level_saturation = false;
  int demod_step_limit = 1000;

  // Stable one-line key=value summary, used in proof file headers.
  std::string digest() const;
};

struct PassiveGoal {
  int goal = 0;
  Clause clause;
};

struct ProblemSpec {
  std::string name;
  std::vector<Clause> sos;
  std::vector<Clause> usable;
  std::vector<Clause> hints;
  std::vector<PassiveGoal> passive;
  std::vector<Demodulator> demodulators;
  std::vector<Clause> hot;
  Settings settings;
};

enum class Origin { input_sos, input_usable, input_demodulator, input_hot, derived };

const char* origin_name(Origin o);

struct ProofStep {
  int id = 0;
  Clause clause;
  std::string rule;  // input-sos/input-usable/... for inputs, rule name otherwise
  std::vector<int> parents;
  std::vector<int> demods;

  bool is_input() const { return rule.rfind("input-", 0) == 0; }
};

// Replayable derivation record. target_goal 0 is the main goal; a positive
// value is a passive-list goal number, in which case the final step is the
// conflicting witness clause rather than the empty clause.
struct Proof {
  std::string problem;
  std::string settings_digest;
  int target_goal = 0;
  std::vector<ProofStep> steps;

  int length() const;
  const ProofStep& final_step() const { return steps.back(); }
};

struct RunStats {
  long generated = 0;
  long kept = 0;
  long given = 0;
  long discarded_weight = 0;
  long discarded_vars = 0;
  long discarded_taut = 0;
  long discarded_subsumed = 0;
  long back_subsumed = 0;
  long rewrite_limit_discards = 0;

  bool operator==(const RunStats&) const = default;
};

enum class StopReason { proofs_found, sos_empty, max_seconds, max_given };

const char* stop_reason_name(StopReason r);

struct RunResult {
  std::vector<Proof> proofs;
  RunStats stats;
  StopReason reason = StopReason::sos_empty;
  double wall_seconds = 0.0;

  bool main_proved() const;
};

// Symbol-count weight, replaced by the configured hint weight when the
// clause matches the hint list per hint_mode.
int clause_weight(const Clause& c, const std::vector<Clause>& hints, const Settings& s);

struct SosEntry {
  int weight = 0;
  int id = 0;
};

// Picks the clause id for the `counter`-th selection (1-based): the oldest
// on every (ratio+1)-th pick, otherwise the lightest, ties by lowest id.
int select_given(const std::vector<SosEntry>& sos, long counter, const Settings& s);

enum class KeepCode { keep, weight, vars, tautology, subsumed };

struct KeepOutcome {
  KeepCode code = KeepCode::keep;
  int weight = 0;
};

struct KeepState {
  std::vector<Clause> active;  // kept clauses, inputs included
  std::vector<Clause> hints;
  Settings settings;
};

// Retention rule for a freshly derived, demodulated clause.
KeepOutcome keep_decision(const Clause& c, const KeepState& state);

// Goal numbers of passive clauses that unit-conflict with c.
std::vector<int> check_passive(const Clause& c, const std::vector<PassiveGoal>& passive);

// The given-clause main loop. Deterministic for fixed settings and input
// order; absence of a main-goal proof is reported via RunResult::reason.
RunResult saturate(const ProblemSpec& p);

}  // namespace tarski

#endif
