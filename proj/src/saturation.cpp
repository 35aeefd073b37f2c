#include "tarski/saturation.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <memory>
#include <unordered_set>
#include <functional>
#include <set>
#include <sstream>

#include "tarski/parse.hpp"
#include "tarski/unify.hpp"

namespace tarski {

const char* hint_mode_name(HintMode m) {
  switch (m) {
    case HintMode::off: return "off";
    case HintMode::subsumes_hint: return "subsumes_hint";
    case HintMode::subsumed_by_hint: return "subsumed_by_hint";
    case HintMode::both: return "both";
  }
  return "?";
}

const char* origin_name(Origin o) {
  switch (o) {
    case Origin::input_sos: return "input-sos";
    case Origin::input_usable: return "input-usable";
    case Origin::input_demodulator: return "input-demodulator";
    case Origin::input_hot: return "input-hot";
    case Origin::derived: return "derived";
  }
  return "?";
}

const char* stop_reason_name(StopReason r) {
  switch (r) {
    case StopReason::proofs_found: return "proofs-found";
    case StopReason::sos_empty: return "sos-empty";
    case StopReason::max_seconds: return "max-seconds";
    case StopReason::max_given: return "max-given";
  }
  return "?";
}

std::string Settings::digest() const {
  std::ostringstream os;
  os << "max_weight=" << max_weight << ";pick_given_ratio=" << pick_given_ratio
     << ";max_proofs=" << max_proofs;
  os << ";max_distinct_vars=" << (max_distinct_vars ? std::to_string(*max_distinct_vars) : "off");
  os << ";max_seconds=" << (max_seconds ? std::to_string(*max_seconds) : "off");
  os << ";max_given=" << (max_given ? std::to_string(*max_given) : "off");
  os << ";rules=";
  bool first = true;
  auto rule = [&](bool on, const char* name) {
    if (!on) return;
    if (!first) os << '+';
    os << name;
    first = false;
  };
  rule(rules.binary, "binary");
  rule(rules.hyper, "hyper");
  rule(rules.unit, "unit");
  rule(rules.paramodulation, "para");
  rule(rules.factoring, "factor");
  os << ";hint_mode=" << hint_mode_name(hint_mode);
  os << ";bsub_hint_wt=" << bsub_hint_wt;
  os << ";fsub_hint_wt=" << (fsub_hint_wt ? std::to_string(*fsub_hint_wt) : "off");
  if (level_saturation) os << ";level_saturation=on";
  return os.str();
}

int Proof::length() const {
  int n = 0;
  for (const ProofStep& s : steps)
    if (!s.is_input()) ++n;
  return n;
}

bool RunResult::main_proved() const {
  for (const Proof& p : proofs)
    if (p.target_goal == 0) return true;
  return false;
}

int clause_weight(const Clause& c, const std::vector<Clause>& hints, const Settings& s) {
  int w = symbol_count(c);
  if (s.hint_mode == HintMode::off || hints.empty() || c.empty()) return w;
  bool check_bsub =
      s.hint_mode == HintMode::subsumed_by_hint || s.hint_mode == HintMode::both;
  bool check_fsub = (s.hint_mode == HintMode::subsumes_hint || s.hint_mode == HintMode::both) &&
                    s.fsub_hint_wt.has_value();
  if (check_bsub)
    for (const Clause& h : hints)
      if (subsumes(h, c)) return s.bsub_hint_wt;
  if (check_fsub)
    for (const Clause& h : hints)
      if (subsumes(c, h)) return *s.fsub_hint_wt;
  return w;
}

int select_given(const std::vector<SosEntry>& sos, long counter, const Settings& s) {
  if (sos.empty()) throw std::logic_error("select_given on empty sos");
  long period = static_cast<long>(s.pick_given_ratio) + 1;
  if (counter % period == 0) {
    // Age pick: the oldest clause is the one with the lowest id.
    const SosEntry* best = &sos.front();
    for (const SosEntry& e : sos)
      if (e.id < best->id) best = &e;
    return best->id;
  }
  const SosEntry* best = &sos.front();
  for (const SosEntry& e : sos)
    if (e.weight < best->weight || (e.weight == best->weight && e.id < best->id)) best = &e;
  return best->id;
}

KeepOutcome keep_decision(const Clause& c, const KeepState& state) {
  int w = clause_weight(c, state.hints, state.settings);
  if (c.empty()) return {KeepCode::keep, w};
  if (w > state.settings.max_weight) return {KeepCode::weight, w};
  if (state.settings.max_distinct_vars &&
      distinct_variable_count(c) > *state.settings.max_distinct_vars)
    return {KeepCode::vars, w};
  if (is_tautology(c)) return {KeepCode::tautology, w};
  for (const Clause& d : state.active)
    if (subsumes(d, c)) return {KeepCode::subsumed, w};
  return {KeepCode::keep, w};
}

std::vector<int> check_passive(const Clause& c, const std::vector<PassiveGoal>& passive) {
  std::vector<int> hits;
  if (!c.is_unit()) return hits;
  for (const PassiveGoal& g : passive) {
    if (!g.clause.is_unit()) continue;
    const Literal& a = c.lits[0];
    const Literal& b = g.clause.lits[0];
    if (a.positive == b.positive) continue;
    Clause renamed = rename_for_inference(c, g.clause);
    Substitution sigma;
    if (unify_atoms(a, renamed.lits[0], sigma)) hits.push_back(g.goal);
  }
  return hits;
}

namespace {

constexpr long kHyperBudgetPerGiven = 200000;

uint64_t literal_bit(const Literal& l) {
  size_t h = std::hash<std::string>{}(l.pred) * 2 + (l.positive ? 1 : 0);
  return uint64_t{1} << (h % 64);
}

uint64_t pred_bit(const Literal& l) {
  return uint64_t{1} << (std::hash<std::string>{}(l.pred) % 64);
}

uint64_t clause_mask(const Clause& c) {
  uint64_t m = 0;
  for (const Literal& l : c.lits) m |= literal_bit(l);
  return m;
}

// Top-symbol compatibility: a cheap refutation of unifiability.
bool atoms_compatible(const Literal& a, const Literal& b) {
  if (a.pred != b.pred || a.args.size() != b.args.size()) return false;
  for (size_t i = 0; i < a.args.size(); ++i) {
    const Term& s = a.args[i];
    const Term& t = b.args[i];
    if (s.is_variable() || t.is_variable()) continue;
    if (s.head != t.head || s.args.size() != t.args.size()) return false;
  }
  return true;
}

struct ClauseRec {
  Clause clause;
  int id = 0;
  Origin origin = Origin::derived;
  std::string rule;
  std::vector<int> parents;
  std::vector<int> demods;
  int weight = 0;
  bool active = true;
  bool in_sos = false;
  bool positive_only = false;
  bool has_negative = false;
  bool has_pos_eq = false;
  uint64_t mask = 0;
  uint64_t pos_pred_mask = 0;
  uint64_t neg_pred_mask = 0;
};

struct Pending {
  Clause raw;
  const char* rule;
  std::vector<int> parents;
};

class Engine {
 public:
  explicit Engine(const ProblemSpec& spec) : spec_(spec), st_(spec.settings) {}

  RunResult run() {
    start_ = std::chrono::steady_clock::now();
    init();
    for (;;) {
      if (time_exceeded()) return finish(StopReason::max_seconds);
      if (sos_ids_.empty()) return finish(StopReason::sos_empty);
      if (st_.max_given && result_.stats.given >= *st_.max_given)
        return finish(StopReason::max_given);

      ++result_.stats.given;
      int gid = pick_given(result_.stats.given);
      ClauseRec& given = rec(gid);
      sos_queue_.erase({given.weight, gid});
      sos_ids_.erase(gid);
      given.in_sos = false;
      usable_.push_back(gid);
      if (trace_)
        std::fprintf(stderr, "given #%ld id=%d wt=%d %s\n", result_.stats.given, gid,
                     given.weight, format_clause(given.clause).c_str());

      std::deque<Pending> pending;
      generate(gid, pending);
      if (!process(pending)) return finish(StopReason::proofs_found);
      if (time_up_) return finish(StopReason::max_seconds);
    }
  }

 private:
  const ProblemSpec& spec_;
  Settings st_;
  std::vector<std::unique_ptr<ClauseRec>> recs_;
  std::set<std::pair<int, int>> sos_queue_;  // (weight, id)
  std::set<int> sos_ids_;
  std::vector<int> usable_;
  struct UnitEntry {
    int id;
    std::string head0;  // top symbol of the first argument, "" for variable
  };
  std::map<std::pair<bool, std::string>, std::vector<UnitEntry>> unit_index_;
  std::vector<int> nonunit_active_;
  std::unordered_set<std::string> seen_texts_;  // canonical text of kept clauses
  std::vector<Demodulator> demods_;
  std::vector<int> demod_ids_;
  std::vector<int> hot_ids_;
  struct GoalState {
    PassiveGoal goal;
    bool hit = false;
  };
  std::vector<GoalState> passive_;
  RunResult result_;
  std::chrono::steady_clock::time_point start_;
  bool time_up_ = false;
  long hyper_budget_ = 0;
  bool trace_ = std::getenv("TARSKI_TRACE_GIVEN") != nullptr;

  ClauseRec& rec(int id) { return *recs_[static_cast<size_t>(id) - 1]; }
  const ClauseRec& rec(int id) const { return *recs_[static_cast<size_t>(id) - 1]; }

  // Indexes a kept clause for forward/backward subsumption lookups.
  void index_active(int id) {
    const ClauseRec& r = rec(id);
    seen_texts_.insert(format_clause(canonicalize_variables(r.clause)));
    if (r.clause.is_unit()) {
      const Literal& l = r.clause.lits[0];
      std::string head0;
      if (!l.args.empty() && !l.args[0].is_variable()) head0 = l.args[0].head;
      unit_index_[{l.positive, l.pred}].push_back({id, std::move(head0)});
    } else {
      nonunit_active_.push_back(id);
    }
  }

  double elapsed_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  bool time_exceeded() {
    if (time_up_) return true;
    if (st_.max_seconds && elapsed_seconds() >= *st_.max_seconds) time_up_ = true;
    return time_up_;
  }

  int add_clause(Clause c, Origin origin, std::string rule, std::vector<int> parents,
                 std::vector<int> demods, int weight) {
    ClauseRec r;
    r.id = static_cast<int>(recs_.size()) + 1;
    r.origin = origin;
    r.rule = std::move(rule);
    r.parents = std::move(parents);
    r.demods = std::move(demods);
    r.weight = weight;
    r.mask = clause_mask(c);
    for (const Literal& l : c.lits) {
      if (l.positive) {
        r.pos_pred_mask |= pred_bit(l);
        if (l.is_equality()) r.has_pos_eq = true;
      } else {
        r.neg_pred_mask |= pred_bit(l);
        r.has_negative = true;
      }
    }
    r.positive_only = !r.has_negative && !c.empty();
    r.clause = std::move(c);
    recs_.push_back(std::make_unique<ClauseRec>(std::move(r)));
    return recs_.back()->id;
  }

  void init() {
    for (const Clause& c : spec_.usable) {
      int id = add_clause(c, Origin::input_usable, origin_name(Origin::input_usable), {}, {},
                          clause_weight(c, spec_.hints, st_));
      usable_.push_back(id);
      index_active(id);
    }
    for (const Clause& c : spec_.sos) {
      int id = add_clause(c, Origin::input_sos, origin_name(Origin::input_sos), {}, {},
                          clause_weight(c, spec_.hints, st_));
      ClauseRec& r = rec(id);
      r.in_sos = true;
      sos_queue_.insert({r.weight, id});
      sos_ids_.insert(id);
      index_active(id);
    }
    for (const Demodulator& d : spec_.demodulators) {
      int id = add_clause(d.equation, Origin::input_demodulator,
                          origin_name(Origin::input_demodulator), {}, {},
                          clause_weight(d.equation, spec_.hints, st_));
      demods_.push_back(d);
      demod_ids_.push_back(id);
    }
    for (const Clause& c : spec_.hot)
      hot_ids_.push_back(add_clause(c, Origin::input_hot, origin_name(Origin::input_hot), {}, {},
                                    clause_weight(c, spec_.hints, st_)));
    for (const PassiveGoal& g : spec_.passive) passive_.push_back({g, false});
  }

  int pick_given(long counter) const {
    long period = static_cast<long>(st_.pick_given_ratio) + 1;
    if (counter % period == 0) return *sos_ids_.begin();
    return sos_queue_.begin()->second;
  }

  // Candidate positives for hyperresolution slots, indexed by predicate and
  // renamed lazily per slot. Shared across every nucleus of one given-clause
  // iteration.
  struct HyperContext {
    struct Cand {
      int id;
      size_t lit;
    };
    std::map<std::string, std::vector<Cand>> by_pred;
    std::map<std::pair<size_t, int>, Clause> renamed;  // (slot, id) -> variant
    std::string suffix = "_h";
  };

  void generate(int gid, std::deque<Pending>& out) {
    const ClauseRec& given = rec(gid);
    std::vector<int> partners;
    partners.reserve(usable_.size());
    for (int id : usable_)
      if (rec(id).active) partners.push_back(id);

    if (st_.rules.binary || st_.rules.unit) {
      // With binary resolution on, unit resolution would only duplicate a
      // subset of its conclusions, so it runs alone only when binary is off.
      bool as_unit = !st_.rules.binary;
      for (int p : partners) {
        const ClauseRec& pr = rec(p);
        if (as_unit && !given.clause.is_unit() && !pr.clause.is_unit()) continue;
        if (!((given.pos_pred_mask & pr.neg_pred_mask) |
              (given.neg_pred_mask & pr.pos_pred_mask)))
          continue;
        auto rs = as_unit ? unit_resolve(given.clause, pr.clause)
                          : binary_resolve(given.clause, pr.clause);
        for (InferenceResult& r : rs)
          out.push_back({std::move(r.conclusion), as_unit ? rules::kUnit : rules::kBinary,
                         {gid, p}});
      }
    }
    if (st_.rules.hyper) generate_hyper(gid, partners, out);
    if (st_.rules.paramodulation) {
      for (int p : partners) {
        const ClauseRec& pr = rec(p);
        if (given.has_pos_eq)
          for (InferenceResult& r : paramodulate(given.clause, pr.clause))
            out.push_back({std::move(r.conclusion), rules::kPara, {gid, p}});
        if (p != gid && pr.has_pos_eq)
          for (InferenceResult& r : paramodulate(pr.clause, given.clause))
            out.push_back({std::move(r.conclusion), rules::kPara, {p, gid}});
      }
    }
  }

  void generate_hyper(int gid, const std::vector<int>& partners, std::deque<Pending>& out) {
    hyper_budget_ = 0;
    const ClauseRec& given = rec(gid);

    HyperContext ctx;
    for (int p : partners) {
      const ClauseRec& pr = rec(p);
      if (!pr.positive_only) continue;
      for (size_t li = 0; li < pr.clause.lits.size(); ++li)
        ctx.by_pred[pr.clause.lits[li].pred].push_back({p, li});
    }
    if (ctx.by_pred.empty()) return;

    // Fix the renaming suffix against every partner up front; kept clauses
    // are canonicalized, so this loops only on adversarial input names.
    while ([&] {
      for (int p : partners)
        for (const std::string& v : variables_of(rec(p).clause))
          if (v.find(ctx.suffix) != std::string::npos) return true;
      return false;
    }())
      ctx.suffix += 'h';

    if (given.has_negative) hyper_assignments(ctx, gid, -1, out);
    if (given.positive_only) {
      for (int n : partners)
        if (n != gid && rec(n).has_negative) hyper_assignments(ctx, n, gid, out);
    }
  }

  const Clause& renamed_satellite(HyperContext& ctx, size_t slot, int id) {
    auto key = std::make_pair(slot, id);
    auto it = ctx.renamed.find(key);
    if (it != ctx.renamed.end()) return it->second;
    Substitution ren;
    for (const std::string& v : variables_of(rec(id).clause))
      ren.bind_raw(v, Term(v + ctx.suffix + std::to_string(slot)));
    return ctx.renamed.emplace(key, ren.apply(rec(id).clause)).first->second;
  }

  // Enumerates one satellite per negative nucleus literal, pruning with the
  // accumulated unifier; emits via hyper_resolve so replay is exact. The
  // emitted conclusion depends only on the satellite tuple, so tuples are
  // deduplicated across literal choices.
  void hyper_assignments(HyperContext& ctx, int nucleus_id, int require_id,
                         std::deque<Pending>& out) {
    const Clause& nucleus = rec(nucleus_id).clause;
    std::vector<size_t> neg_idx;
    for (size_t i = 0; i < nucleus.lits.size(); ++i)
      if (!nucleus.lits[i].positive) neg_idx.push_back(i);
    if (neg_idx.empty()) return;
    for (size_t i : neg_idx)
      if (!ctx.by_pred.count(nucleus.lits[i].pred)) return;  // some slot cannot close

    std::set<std::vector<int>> emitted;
    std::vector<int> chosen;
    std::function<void(size_t, const Substitution&)> walk = [&](size_t slot,
                                                                const Substitution& sigma) {
      if (hyper_budget_ > kHyperBudgetPerGiven) return;
      if (slot == neg_idx.size()) {
        if (require_id >= 0 && std::find(chosen.begin(), chosen.end(), require_id) == chosen.end())
          return;
        if (!emitted.insert(chosen).second) return;
        std::vector<Clause> sats;
        sats.reserve(chosen.size());
        for (int id : chosen) sats.push_back(rec(id).clause);
        if (auto r = hyper_resolve(nucleus, sats)) {
          std::vector<int> parents;
          parents.push_back(nucleus_id);
          parents.insert(parents.end(), chosen.begin(), chosen.end());
          out.push_back({std::move(r->conclusion), rules::kHyper, std::move(parents)});
        }
        return;
      }
      Literal need = sigma.apply(nucleus.lits[neg_idx[slot]]);
      // When the required satellite can no longer be chosen it must fill one
      // of the remaining slots; force it once the last slot comes up.
      bool must_use_required =
          require_id >= 0 && slot + 1 == neg_idx.size() &&
          std::find(chosen.begin(), chosen.end(), require_id) == chosen.end();
      for (const HyperContext::Cand& cand : ctx.by_pred[need.pred]) {
        if (must_use_required && cand.id != require_id) continue;
        if (++hyper_budget_ > kHyperBudgetPerGiven) return;
        const Clause& sat = renamed_satellite(ctx, slot, cand.id);
        const Literal& pl = sat.lits[cand.lit];
        if (!atoms_compatible(need, pl)) continue;
        Substitution attempt = sigma;
        if (!unify_atoms(need, pl, attempt)) continue;
        chosen.push_back(cand.id);
        walk(slot + 1, attempt);
        chosen.pop_back();
      }
    };
    walk(0, Substitution{});
  }

  bool forward_subsumed(const Clause& c, uint64_t mask) const {
    // Unit subsumers via the per-literal index.
    for (const Literal& l : c.lits) {
      auto it = unit_index_.find({l.positive, l.pred});
      if (it == unit_index_.end()) continue;
      bool target_head_fixed = !l.args.empty() && !l.args[0].is_variable();
      for (const UnitEntry& e : it->second) {
        if (!rec(e.id).active) continue;
        if (!e.head0.empty() && (!target_head_fixed || e.head0 != l.args[0].head)) continue;
        if (unit_subsumes_literal(rec(e.id).clause.lits[0], l)) return true;
      }
    }
    for (int id : nonunit_active_) {
      const ClauseRec& d = rec(id);
      if (!d.active) continue;
      if (d.clause.size() > c.size()) continue;
      if ((d.mask & mask) != d.mask) continue;
      if (subsumes(d.clause, c)) return true;
    }
    return false;
  }

  void retire(int id) {
    ClauseRec& r = rec(id);
    if (!r.active) return;
    r.active = false;
    if (r.in_sos) {
      sos_queue_.erase({r.weight, id});
      sos_ids_.erase(id);
      r.in_sos = false;
    }
  }

  void back_subsume(int new_id) {
    const ClauseRec& n = rec(new_id);
    if (n.clause.is_unit()) {
      const Literal& l = n.clause.lits[0];
      auto it = unit_index_.find({l.positive, l.pred});
      if (it != unit_index_.end()) {
        for (const UnitEntry& e : it->second) {
          if (e.id == new_id) continue;
          ClauseRec& d = rec(e.id);
          if (!d.active || d.origin != Origin::derived) continue;
          if (unit_subsumes_literal(l, d.clause.lits[0])) {
            retire(e.id);
            ++result_.stats.back_subsumed;
          }
        }
      }
    }
    for (int id : nonunit_active_) {
      ClauseRec& d = rec(id);
      if (id == new_id || !d.active || d.origin != Origin::derived) continue;
      if (n.clause.size() > d.clause.size()) continue;
      if ((n.mask & d.mask) != n.mask) continue;
      if (subsumes(n.clause, d.clause)) {
        retire(id);
        ++result_.stats.back_subsumed;
      }
    }
  }

  void emit_proof(int final_id, int goal) {
    Proof pf;
    pf.problem = spec_.name;
    pf.settings_digest = st_.digest();
    pf.target_goal = goal;
    std::set<int> closure;
    std::vector<int> todo{final_id};
    while (!todo.empty()) {
      int id = todo.back();
      todo.pop_back();
      if (!closure.insert(id).second) continue;
      const ClauseRec& r = rec(id);
      for (int p : r.parents) todo.push_back(p);
      for (int d : r.demods) todo.push_back(d);
    }
    for (int id : closure) {  // std::set iterates in increasing id order
      const ClauseRec& r = rec(id);
      pf.steps.push_back({r.id, r.clause, r.rule, r.parents, r.demods});
    }
    result_.proofs.push_back(std::move(pf));
  }

  // Returns false once max_proofs is reached.
  bool process(std::deque<Pending>& pending) {
    long processed = 0;
    while (!pending.empty()) {
      Pending p = std::move(pending.front());
      pending.pop_front();
      ++result_.stats.generated;
      if (++processed % 512 == 0 && time_exceeded()) return true;

      Clause c;
      std::vector<size_t> fired;
      try {
        c = demodulate(p.raw, demods_, st_.demod_step_limit, &fired);
      } catch (const RewriteLimitExceeded&) {
        ++result_.stats.rewrite_limit_discards;
        continue;
      }
      c = canonicalize_variables(c);

      int w = clause_weight(c, spec_.hints, st_);
      uint64_t mask = clause_mask(c);
      if (!c.empty()) {
        if (w > st_.max_weight) {
          ++result_.stats.discarded_weight;
          continue;
        }
        if (st_.max_distinct_vars && distinct_variable_count(c) > *st_.max_distinct_vars) {
          ++result_.stats.discarded_vars;
          continue;
        }
        if (is_tautology(c)) {
          ++result_.stats.discarded_taut;
          continue;
        }
        // An exact duplicate of a kept clause is always forward-subsumed:
        // the earlier copy is either still active or was retired by a
        // subsumer that is.
        if (seen_texts_.count(format_clause(c))) {
          ++result_.stats.discarded_subsumed;
          continue;
        }
        if (forward_subsumed(c, mask)) {
          ++result_.stats.discarded_subsumed;
          continue;
        }
      }

      std::vector<int> demod_ids;
      for (size_t di : fired) demod_ids.push_back(demod_ids_[di]);
      int id = add_clause(std::move(c), Origin::derived, p.rule, std::move(p.parents),
                          std::move(demod_ids), w);
      ClauseRec& r = rec(id);
      ++result_.stats.kept;

      if (r.clause.empty()) {
        emit_proof(id, 0);
        if (static_cast<int>(result_.proofs.size()) >= st_.max_proofs) return false;
        continue;
      }

      index_active(id);
      r.in_sos = true;
      sos_queue_.insert({r.weight, id});
      sos_ids_.insert(id);
      back_subsume(id);

      for (GoalState& g : passive_) {
        if (g.hit) continue;
        if (!check_passive(r.clause, {g.goal}).empty()) {
          g.hit = true;
          emit_proof(id, g.goal.goal);
          if (static_cast<int>(result_.proofs.size()) >= st_.max_proofs) return false;
        }
      }

      for (int h : hot_ids_) {
        const Clause& hot = rec(h).clause;
        if (st_.rules.unit)
          for (InferenceResult& ir : unit_resolve(hot, r.clause))
            pending.push_back({std::move(ir.conclusion), rules::kUnit, {h, id}});
        if (st_.rules.paramodulation) {
          for (InferenceResult& ir : paramodulate(hot, r.clause))
            pending.push_back({std::move(ir.conclusion), rules::kPara, {h, id}});
          for (InferenceResult& ir : paramodulate(r.clause, hot))
            pending.push_back({std::move(ir.conclusion), rules::kPara, {id, h}});
        }
      }
      if (st_.rules.factoring)
        for (InferenceResult& ir : factor(r.clause))
          pending.push_back({std::move(ir.conclusion), rules::kFactor, {id}});
    }
    return true;
  }

  RunResult finish(StopReason reason) {
    result_.reason = reason;
    result_.wall_seconds = elapsed_seconds();
    return std::move(result_);
  }
};

void accumulate(RunStats& into, const RunStats& from) {
  into.generated += from.generated;
  into.kept += from.kept;
  into.given += from.given;
  into.discarded_weight += from.discarded_weight;
  into.discarded_vars += from.discarded_vars;
  into.discarded_taut += from.discarded_taut;
  into.discarded_subsumed += from.discarded_subsumed;
  into.back_subsumed += from.back_subsumed;
  into.rewrite_limit_discards += from.rewrite_limit_discards;
}

RunResult saturate_level_rounds(const ProblemSpec& p) {
  RunResult agg;
  auto start = std::chrono::steady_clock::now();
  for (int w = 1; w <= p.settings.max_weight; ++w) {
    ProblemSpec round = p;
    round.settings.level_saturation = false;
    round.settings.max_weight = w;
    if (p.settings.max_seconds) {
      double used = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      int remaining = *p.settings.max_seconds - static_cast<int>(used);
      if (remaining <= 0) {
        agg.reason = StopReason::max_seconds;
        break;
      }
      round.settings.max_seconds = remaining;
    }
    RunResult r = saturate(round);
    accumulate(agg.stats, r.stats);
    agg.reason = r.reason;
    if (!r.proofs.empty()) {
      agg.proofs = std::move(r.proofs);
      break;
    }
  }
  agg.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return agg;
}

}  // namespace

RunResult saturate(const ProblemSpec& p) {
  if (p.settings.level_saturation) return saturate_level_rounds(p);
  return Engine(p).run();
}

}  // namespace tarski
