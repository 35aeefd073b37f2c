#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tarski/master_list.hpp"
#include "tarski/parse.hpp"
#include "tarski/proof_io.hpp"
#include "tarski/saturation.hpp"

using namespace tarski;

namespace {

Clause cl(const char* text) { return parse_clause(text); }

std::vector<Clause> problem_inputs(const ProblemSpec& p) {
  std::vector<Clause> all = p.usable;
  all.insert(all.end(), p.sos.begin(), p.sos.end());
  for (const Demodulator& d : p.demodulators) all.push_back(d.equation);
  all.insert(all.end(), p.hot.begin(), p.hot.end());
  return all;
}

Settings test_settings() {
  Settings s;
  s.max_seconds = 60;
  return s;
}

}  // namespace

TEST_CASE("clause_weight: symbol counting and hint overrides") {
  Settings s;
  CHECK(clause_weight(cl("-E(a,b,a,b)."), {}, s) == 5);
  CHECK(clause_weight(cl("q = ip(c,s,a,t,r)."), {}, s) == 8);

  Settings hinted;
  hinted.hint_mode = HintMode::subsumed_by_hint;
  hinted.bsub_hint_wt = -1;
  std::vector<Clause> hints{cl("T(a,c,d).")};
  CHECK(clause_weight(cl("T(a,c,d)."), hints, hinted) == -1);
  CHECK(clause_weight(cl("T(a,c,q)."), hints, hinted) == 4);

  Settings fsub;
  fsub.hint_mode = HintMode::subsumes_hint;
  fsub.fsub_hint_wt = -2;
  CHECK(clause_weight(cl("T(x,y,z)."), hints, fsub) == -2);  // subsumes the hint
  Settings fsub_off;
  fsub_off.hint_mode = HintMode::subsumes_hint;
  CHECK(clause_weight(cl("T(x,y,z)."), hints, fsub_off) == 4);  // fsub weight off
}

TEST_CASE("select_given: ratio schedule and tie-breaks") {
  Settings s;  // ratio 4
  std::vector<SosEntry> sos{{9, 1}, {3, 2}, {3, 5}, {7, 4}};
  // Selections 1-4 pick the lightest (ties by lowest id), selection 5 the oldest.
  CHECK(select_given(sos, 1, s) == 2);
  CHECK(select_given(sos, 4, s) == 2);
  CHECK(select_given(sos, 5, s) == 1);
  CHECK(select_given(sos, 10, s) == 1);

  Settings r1;
  r1.pick_given_ratio = 1;
  CHECK(select_given(sos, 1, r1) == 2);
  CHECK(select_given(sos, 2, r1) == 1);
  CHECK(select_given(sos, 3, r1) == 2);

  std::vector<SosEntry> flat{{4, 3}, {4, 7}, {4, 2}};
  CHECK(select_given(flat, 1, s) == 2);  // all weights equal: FIFO
}

TEST_CASE("keep_decision: weight, hint rescue, distinct variables") {
  KeepState state;
  state.settings = Settings{};

  Clause heavy = cl("E(ext(a,b,c,d),ext(a,b,c,d),ext(a,b,c,d),ext(a,b,c,d)).");  // weight 21
  CHECK(keep_decision(heavy, state).code == KeepCode::weight);

  KeepState hinted = state;
  hinted.settings.hint_mode = HintMode::subsumed_by_hint;
  hinted.hints = {heavy};
  auto out = keep_decision(heavy, hinted);
  CHECK(out.code == KeepCode::keep);
  CHECK(out.weight == -1);

  KeepState vars = state;
  vars.settings.max_distinct_vars = 4;
  CHECK(keep_decision(cl("E(x,y,z,w) | P(u)."), vars).code == KeepCode::vars);
  CHECK(keep_decision(cl("E(x,y,z,w) | P(x)."), vars).code == KeepCode::keep);

  CHECK(keep_decision(cl("P(a) | -P(a)."), state).code == KeepCode::tautology);
  CHECK(keep_decision(cl("a = a | P(b)."), state).code == KeepCode::tautology);

  KeepState active = state;
  active.active = {cl("P(x).")};
  CHECK(keep_decision(cl("P(a) | Q(a)."), active).code == KeepCode::subsumed);
  CHECK(keep_decision(cl("R(a)."), active).code == KeepCode::keep);
}

TEST_CASE("check_passive: unit conflicts only") {
  std::vector<PassiveGoal> passive{{7, cl("-T(a,c1,p).")}, {9, cl("-E(a,b,a,b).")}};
  CHECK(check_passive(cl("T(a,c1,p)."), passive) == std::vector<int>{7});
  CHECK(check_passive(cl("T(a,c1,p) | T(b,c1,p)."), passive).empty());
  CHECK(check_passive(cl("T(q,q,q)."), passive).empty());
  CHECK(check_passive(cl("E(x,y,x,y)."), passive) == std::vector<int>{9});
}

TEST_CASE("saturate: Satz 2.1 is proved quickly with a short proof") {
  BuildOptions opt;
  opt.settings = test_settings();
  ProblemSpec p = build_problem(starter_corpus(), "Satz2.1", opt);
  RunResult r = saturate(p);
  REQUIRE(r.main_proved());
  CHECK(r.reason == StopReason::proofs_found);
  CHECK(r.proofs[0].length() <= 5);
  auto v = verify_proof(r.proofs[0], problem_inputs(p));
  CHECK_MESSAGE(v.ok, v.message);
}

TEST_CASE("saturate: empty sos exhausts immediately") {
  ProblemSpec p;
  p.name = "empty";
  p.usable = {cl("P(a).")};
  RunResult r = saturate(p);
  CHECK(r.reason == StopReason::sos_empty);
  CHECK_FALSE(r.main_proved());
  CHECK(r.stats.given == 0);
}

TEST_CASE("saturate: max_given bounds the run") {
  BuildOptions opt;
  opt.settings = test_settings();
  ProblemSpec p = build_problem(starter_corpus(), "Satz3.17", opt);
  p.settings.max_given = 3;
  p.sos = {p.sos[0], p.sos[1], p.sos[2], p.sos[3]};  // drop the diagram: no quick proof
  RunResult r = saturate(p);
  CHECK(r.reason == StopReason::max_given);
  CHECK(r.stats.given == 3);
}

TEST_CASE("saturate: determinism of proofs and statistics") {
  BuildOptions opt;
  opt.settings = test_settings();
  ProblemSpec p = build_problem(starter_corpus(), "Satz2.2", opt);
  RunResult a = saturate(p);
  RunResult b = saturate(p);
  REQUIRE(a.main_proved());
  REQUIRE(b.main_proved());
  CHECK(a.stats == b.stats);
  REQUIRE(a.proofs.size() == b.proofs.size());
  for (size_t i = 0; i < a.proofs.size(); ++i)
    CHECK(format_proof(a.proofs[i]) == format_proof(b.proofs[i]));
}

TEST_CASE("saturate: hot list applies immediately to newly derived clauses") {
  ProblemSpec p;
  p.name = "hot";
  p.settings.max_seconds = 10;
  p.sos = {cl("P(a).")};
  p.usable = {cl("-P(x) | A(x)."), cl("-B(a).")};
  p.hot = {cl("-A(x) | B(x).")};
  RunResult r = saturate(p);
  REQUIRE(r.main_proved());
  // B(a) comes from the hot clause against the freshly kept A(a).
  bool hot_step = false;
  for (const ProofStep& s : r.proofs[0].steps)
    if (s.rule == "input-hot") hot_step = true;
  CHECK(hot_step);
  auto v = verify_proof(r.proofs[0], problem_inputs(p));
  CHECK_MESSAGE(v.ok, v.message);
}

TEST_CASE("saturate: demodulators rewrite derived clauses in the loop") {
  ProblemSpec p;
  p.name = "demod";
  p.settings.max_seconds = 10;
  p.sos = {cl("A(s(p,s(p,b))).")};
  p.usable = {cl("-A(x) | B(x)."), cl("-B(b).")};
  p.demodulators = {make_demodulator(cl("s(p,s(p,x)) = x."))};
  RunResult r = saturate(p);
  REQUIRE(r.main_proved());
  // The proof must mention the demodulator as a step dependency.
  bool saw_demod_step = false;
  for (const ProofStep& s : r.proofs[0].steps)
    if (!s.demods.empty()) saw_demod_step = true;
  CHECK(saw_demod_step);
  auto v = verify_proof(r.proofs[0], problem_inputs(p));
  CHECK_MESSAGE(v.ok, v.message);
}

TEST_CASE("saturate: passive goals emit intermediate proofs without halting") {
  ProblemSpec p;
  p.name = "passive";
  p.settings.max_seconds = 10;
  p.settings.max_proofs = 3;
  p.sos = {cl("P(a).")};
  p.usable = {cl("-P(x) | Q(x)."), cl("-Q(x) | R(x)."), cl("-R(a).")};
  p.passive = {{1, cl("-Q(a).")}, {2, cl("-R(a).")}};
  RunResult r = saturate(p);
  REQUIRE(r.main_proved());
  std::set<int> goals;
  for (const Proof& pf : r.proofs) goals.insert(pf.target_goal);
  CHECK(goals == std::set<int>{0, 1, 2});
  for (const Proof& pf : r.proofs) {
    auto v = verify_proof(pf, problem_inputs(p));
    CHECK_MESSAGE(v.ok, v.message);
  }
}

TEST_CASE("saturate: max_proofs stops the run at the limit") {
  ProblemSpec p;
  p.name = "maxproofs";
  p.settings.max_seconds = 10;
  p.settings.max_proofs = 1;
  p.sos = {cl("P(a).")};
  p.usable = {cl("-P(x) | Q(x)."), cl("-Q(a)."), cl("-P(a).")};
  p.passive = {{1, cl("-Q(a).")}};
  RunResult r = saturate(p);
  CHECK(r.proofs.size() == 1);
  CHECK(r.reason == StopReason::proofs_found);
}

TEST_CASE("saturate: kept weights equal clause_weight recomputed post hoc") {
  BuildOptions opt;
  opt.settings = test_settings();
  ProblemSpec p = build_problem(starter_corpus(), "Satz2.1", opt);
  RunResult r = saturate(p);
  REQUIRE(r.main_proved());
  // Monotonicity probe: every derived proof step stays keepable at a higher
  // max_weight.
  Settings higher = p.settings;
  higher.max_weight += 8;
  for (const Proof& pf : r.proofs)
    for (const ProofStep& s : pf.steps) {
      if (s.is_input()) continue;
      KeepState st;
      st.settings = higher;
      CHECK(keep_decision(s.clause, st).code == KeepCode::keep);
    }
}

TEST_CASE("level saturation finds small proofs round by round") {
  ProblemSpec p;
  p.name = "levels";
  p.settings.max_seconds = 10;
  p.settings.level_saturation = true;
  p.sos = {cl("-P(a).")};
  p.usable = {cl("P(a).")};
  RunResult r = saturate(p);
  CHECK(r.main_proved());
}

TEST_CASE("proof files round trip and failing mutations are caught") {
  BuildOptions opt;
  opt.settings = test_settings();
  ProblemSpec p = build_problem(starter_corpus(), "Satz2.1", opt);
  RunResult r = saturate(p);
  REQUIRE(r.main_proved());
  const Proof& pf = r.proofs[0];

  Proof reparsed = parse_proof(format_proof(pf));
  CHECK(format_proof(reparsed) == format_proof(pf));
  CHECK(verify_proof(reparsed, problem_inputs(p)).ok);

  // Sign flip on a derived step fails at that step.
  for (size_t i = 0; i < pf.steps.size(); ++i) {
    if (pf.steps[i].is_input() || pf.steps[i].clause.empty()) continue;
    Proof mutated = pf;
    mutated.steps[i].clause.lits[0].positive = !mutated.steps[i].clause.lits[0].positive;
    VerifyResult v = verify_proof(mutated, problem_inputs(p));
    CHECK_FALSE(v.ok);
    CHECK(v.failing_step == pf.steps[i].id);
  }

  // Swapping parent references between two derived steps breaks replay.
  std::vector<size_t> derived;
  for (size_t i = 0; i < pf.steps.size(); ++i)
    if (!pf.steps[i].is_input()) derived.push_back(i);
  if (derived.size() >= 2) {
    Proof mutated = pf;
    std::swap(mutated.steps[derived[0]].parents[0], mutated.steps[derived[1]].parents[0]);
    CHECK_FALSE(verify_proof(mutated, problem_inputs(p)).ok);
  }
}
