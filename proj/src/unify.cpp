#include "tarski/unify.hpp"

namespace tarski {

bool unify_terms(const Term& s, const Term& t, Substitution& sigma) {
  Term a = sigma.apply(s);
  Term b = sigma.apply(t);
  if (a == b) return true;
  if (a.is_variable()) {
    if (occurs_in(a.head, b)) return false;
    sigma.bind(a.head, b);
    return true;
  }
  if (b.is_variable()) {
    if (occurs_in(b.head, a)) return false;
    sigma.bind(b.head, a);
    return true;
  }
  if (a.head != b.head || a.args.size() != b.args.size()) return false;
  for (size_t i = 0; i < a.args.size(); ++i)
    if (!unify_terms(a.args[i], b.args[i], sigma)) return false;
  return true;
}

bool unify_atoms(const Literal& a, const Literal& b, Substitution& sigma) {
  if (a.pred != b.pred || a.args.size() != b.args.size()) return false;
  for (size_t i = 0; i < a.args.size(); ++i)
    if (!unify_terms(a.args[i], b.args[i], sigma)) return false;
  return true;
}

std::optional<Substitution> unify(const Term& s, const Term& t) {
  Substitution sigma;
  if (!unify_terms(s, t, sigma)) return std::nullopt;
  return sigma;
}

std::optional<Substitution> unify(const Literal& a, const Literal& b) {
  Substitution sigma;
  if (!unify_atoms(a, b, sigma)) return std::nullopt;
  return sigma;
}

bool match_terms(const Term& pattern, const Term& target, Substitution& sigma) {
  if (pattern.is_variable()) {
    if (const Term* bound = sigma.lookup(pattern.head)) return *bound == target;
    sigma.bind_raw(pattern.head, target);
    return true;
  }
  if (target.is_variable()) return false;
  if (pattern.head != target.head || pattern.args.size() != target.args.size()) return false;
  for (size_t i = 0; i < pattern.args.size(); ++i)
    if (!match_terms(pattern.args[i], target.args[i], sigma)) return false;
  return true;
}

bool match_atoms(const Literal& pattern, const Literal& target, Substitution& sigma) {
  if (pattern.pred != target.pred || pattern.args.size() != target.args.size()) return false;
  for (size_t i = 0; i < pattern.args.size(); ++i)
    if (!match_terms(pattern.args[i], target.args[i], sigma)) return false;
  return true;
}

std::optional<Substitution> match_onto(const Term& pattern, const Term& target) {
  Substitution sigma;
  if (!match_terms(pattern, target, sigma)) return std::nullopt;
  return sigma;
}

std::optional<Substitution> match_onto(const Literal& pattern, const Literal& target) {
  if (pattern.positive != target.positive) return std::nullopt;
  Substitution sigma;
  if (!match_atoms(pattern, target, sigma)) return std::nullopt;
  return sigma;
}

std::optional<Substitution> match_onto(const Clause& pattern, const Clause& target) {
  if (pattern.size() != target.size()) return std::nullopt;
  Substitution sigma;
  for (size_t i = 0; i < pattern.lits.size(); ++i) {
    const Literal& p = pattern.lits[i];
    const Literal& t = target.lits[i];
    if (p.positive != t.positive || !match_atoms(p, t, sigma)) return std::nullopt;
  }
  return sigma;
}

namespace {

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  for (int i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!avoid.count(candidate)) return candidate;
  }
}

}  // namespace

Clause rename_apart(const Clause& c, const std::set<std::string>& taken) {
  std::set<std::string> own = variables_of(c);
  std::set<std::string> avoid = taken;
  avoid.insert(own.begin(), own.end());
  Substitution renaming;
  for (const std::string& v : own) {
    if (!taken.count(v)) continue;
    std::string fresh = fresh_name(v, avoid);
    avoid.insert(fresh);
    renaming.bind(v, Term(fresh));
  }
  return renaming.empty() ? c : renaming.apply(c);
}

Clause rename_for_inference(const Clause& a, const Clause& b) {
  return rename_apart(b, variables_of(a));
}

}  // namespace tarski
