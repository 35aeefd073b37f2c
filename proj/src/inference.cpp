#include "tarski/inference.hpp"

#include <algorithm>

#include "tarski/parse.hpp"
#include "tarski/unify.hpp"

namespace tarski {

namespace {

Clause remainder(const Clause& c, size_t skip) {
  Clause out;
  out.lits.reserve(c.lits.size() - 1);
  for (size_t i = 0; i < c.lits.size(); ++i)
    if (i != skip) out.lits.push_back(c.lits[i]);
  return out;
}

void append_applied(Clause& out, const Clause& c, const Substitution& sigma) {
  for (const Literal& l : c.lits) out.lits.push_back(sigma.apply(l));
}

}  // namespace

Demodulator make_demodulator(const Clause& equation) {
  if (!equation.is_unit() || !equation.lits[0].positive || !equation.lits[0].is_equality())
    throw std::invalid_argument("demodulator must be one positive equality: " +
                                format_clause(equation));
  const Term& lhs = equation.lits[0].args[0];
  const Term& rhs = equation.lits[0].args[1];
  if (lhs.is_variable())
    throw std::invalid_argument("demodulator left side is a bare variable: " +
                                format_clause(equation));
  std::set<std::string> lhs_vars, rhs_vars;
  collect_variables(lhs, lhs_vars);
  collect_variables(rhs, rhs_vars);
  for (const std::string& v : rhs_vars)
    if (!lhs_vars.count(v))
      throw std::invalid_argument("demodulator right side has unbound variable '" + v +
                                  "': " + format_clause(equation));
  return Demodulator{equation};
}

std::vector<InferenceResult> binary_resolve(const Clause& c1, const Clause& c2) {
  std::vector<InferenceResult> out;
  Clause r2 = rename_for_inference(c1, c2);
  for (size_t i = 0; i < c1.lits.size(); ++i) {
    for (size_t j = 0; j < r2.lits.size(); ++j) {
      if (c1.lits[i].positive == r2.lits[j].positive) continue;
      Substitution sigma;
      if (!unify_atoms(c1.lits[i], r2.lits[j], sigma)) continue;
      Clause concl;
      append_applied(concl, remainder(c1, i), sigma);
      append_applied(concl, remainder(r2, j), sigma);
      out.push_back({std::move(concl), rules::kBinary, std::move(sigma)});
    }
  }
  return out;
}

std::optional<InferenceResult> hyper_resolve(const Clause& nucleus,
                                             const std::vector<Clause>& satellites) {
  std::vector<size_t> neg_idx;
  for (size_t i = 0; i < nucleus.lits.size(); ++i)
    if (!nucleus.lits[i].positive) neg_idx.push_back(i);
  if (neg_idx.empty() || satellites.size() != neg_idx.size()) return std::nullopt;

  for (const Clause& sat : satellites)
    for (const Literal& l : sat.lits)
      if (!l.positive) return std::nullopt;

  // Rename every satellite apart from the nucleus and from each other.
  std::set<std::string> seen = variables_of(nucleus);
  std::vector<Clause> sats;
  sats.reserve(satellites.size());
  for (const Clause& sat : satellites) {
    Clause r = rename_apart(sat, seen);
    std::set<std::string> vs = variables_of(r);
    seen.insert(vs.begin(), vs.end());
    sats.push_back(std::move(r));
  }

  // Depth-first choice of the clashed literal within each satellite.
  std::vector<size_t> choice(sats.size(), 0);
  Substitution sigma;
  auto close = [&](auto&& self, size_t slot, Substitution s) -> std::optional<Substitution> {
    if (slot == neg_idx.size()) return s;
    const Literal& neg = nucleus.lits[neg_idx[slot]];
    for (size_t k = 0; k < sats[slot].lits.size(); ++k) {
      Substitution attempt = s;
      if (!unify_atoms(neg, sats[slot].lits[k], attempt)) continue;
      choice[slot] = k;
      if (auto done = self(self, slot + 1, std::move(attempt))) return done;
    }
    return std::nullopt;
  };
  auto solved = close(close, 0, Substitution{});
  if (!solved) return std::nullopt;
  sigma = std::move(*solved);

  Clause concl;
  for (const Literal& l : nucleus.lits)
    if (l.positive) concl.lits.push_back(sigma.apply(l));
  for (size_t slot = 0; slot < sats.size(); ++slot)
    for (size_t k = 0; k < sats[slot].lits.size(); ++k)
      if (k != choice[slot]) concl.lits.push_back(sigma.apply(sats[slot].lits[k]));
  return InferenceResult{std::move(concl), rules::kHyper, std::move(sigma)};
}

std::vector<InferenceResult> unit_resolve(const Clause& c1, const Clause& c2) {
  if (!c1.is_unit() && !c2.is_unit()) return {};
  std::vector<InferenceResult> out = binary_resolve(c1, c2);
  for (InferenceResult& r : out) r.rule = rules::kUnit;
  return out;
}

namespace {

// Pre-order, left-to-right positions of non-variable subterms.
void paramod_positions(const Term& t, std::vector<std::vector<size_t>>& out,
                       std::vector<size_t>& path) {
  if (t.is_variable()) return;
  out.push_back(path);
  for (size_t i = 0; i < t.args.size(); ++i) {
    path.push_back(i);
    paramod_positions(t.args[i], out, path);
    path.pop_back();
  }
}

const Term& subterm_at(const Term& t, const std::vector<size_t>& path) {
  const Term* cur = &t;
  for (size_t i : path) cur = &cur->args[i];
  return *cur;
}

Term replace_at(const Term& t, const std::vector<size_t>& path, size_t depth,
                const Term& replacement) {
  if (depth == path.size()) return replacement;
  Term out = t;
  out.args[path[depth]] = replace_at(t.args[path[depth]], path, depth + 1, replacement);
  return out;
}

}  // namespace

std::vector<InferenceResult> paramodulate(const Clause& from, const Clause& into) {
  std::vector<InferenceResult> out;
  Clause rinto = rename_for_inference(from, into);
  for (size_t fi = 0; fi < from.lits.size(); ++fi) {
    const Literal& eq = from.lits[fi];
    if (!eq.positive || !eq.is_equality()) continue;
    int orientations = eq.args[0] == eq.args[1] ? 1 : 2;
    for (int o = 0; o < orientations; ++o) {
      const Term& s = eq.args[o];
      const Term& t = eq.args[1 - o];
      for (size_t gj = 0; gj < rinto.lits.size(); ++gj) {
        for (size_t ai = 0; ai < rinto.lits[gj].args.size(); ++ai) {
          std::vector<std::vector<size_t>> positions;
          std::vector<size_t> path;
          paramod_positions(rinto.lits[gj].args[ai], positions, path);
          for (const auto& pos : positions) {
            const Term& u = subterm_at(rinto.lits[gj].args[ai], pos);
            Substitution sigma;
            if (!unify_terms(s, u, sigma)) continue;
            Clause concl;
            concl.lits.reserve(rinto.lits.size() + from.lits.size() - 1);
            for (size_t k = 0; k < rinto.lits.size(); ++k) {
              Literal l = rinto.lits[k];
              if (k == gj) l.args[ai] = replace_at(l.args[ai], pos, 0, t);
              concl.lits.push_back(sigma.apply(l));
            }
            append_applied(concl, remainder(from, fi), sigma);
            out.push_back({std::move(concl), rules::kPara, std::move(sigma)});
          }
        }
      }
    }
  }
  return out;
}

std::vector<InferenceResult> factor(const Clause& c) {
  std::vector<InferenceResult> out;
  for (size_t i = 0; i < c.lits.size(); ++i) {
    for (size_t j = i + 1; j < c.lits.size(); ++j) {
      if (c.lits[i].positive != c.lits[j].positive) continue;
      Substitution sigma;
      if (!unify_atoms(c.lits[i], c.lits[j], sigma)) continue;
      Clause concl = sigma.apply(remainder(c, j));
      out.push_back({std::move(concl), rules::kFactor, std::move(sigma)});
    }
  }
  return out;
}

namespace {

// Allocation-free one-way matcher with an undo trail; bindings point into
// the pattern and target clauses, which outlive every call.
struct TrailMatcher {
  std::vector<std::pair<const std::string*, const Term*>> bind;

  const Term* lookup(const std::string& v) const {
    for (auto it = bind.rbegin(); it != bind.rend(); ++it)
      if (*it->first == v) return it->second;
    return nullptr;
  }

  bool match_term(const Term& p, const Term& t) {
    if (p.is_variable()) {
      if (const Term* b = lookup(p.head)) return *b == t;
      bind.emplace_back(&p.head, &t);
      return true;
    }
    if (t.is_variable()) return false;
    if (p.head != t.head || p.args.size() != t.args.size()) return false;
    for (size_t i = 0; i < p.args.size(); ++i)
      if (!match_term(p.args[i], t.args[i])) return false;
    return true;
  }

  bool match_literal(const Literal& p, const Literal& t) {
    if (p.positive != t.positive || p.pred != t.pred || p.args.size() != t.args.size())
      return false;
    for (size_t i = 0; i < p.args.size(); ++i)
      if (!match_term(p.args[i], t.args[i])) return false;
    return true;
  }
};

bool subsumes_from(const Clause& general, const Clause& specific, size_t i,
                   std::vector<bool>& used, TrailMatcher& m) {
  if (i == general.lits.size()) return true;
  for (size_t j = 0; j < specific.lits.size(); ++j) {
    if (used[j]) continue;
    size_t mark = m.bind.size();
    if (m.match_literal(general.lits[i], specific.lits[j])) {
      used[j] = true;
      if (subsumes_from(general, specific, i + 1, used, m)) return true;
      used[j] = false;
    }
    m.bind.resize(mark);
  }
  return false;
}

}  // namespace

bool subsumes(const Clause& general, const Clause& specific) {
  if (general.size() > specific.size()) return false;
  std::vector<bool> used(specific.lits.size(), false);
  TrailMatcher m;
  return subsumes_from(general, specific, 0, used, m);
}

bool unit_subsumes_literal(const Literal& unit, const Literal& target) {
  TrailMatcher m;
  return m.match_literal(unit, target);
}

bool variant(const Clause& a, const Clause& b) {
  return a.size() == b.size() && subsumes(a, b) && subsumes(b, a);
}

namespace {

// Innermost-leftmost: first match in post-order wins. Returns true and fills
// the rewrite if any demodulator applies within t.
bool rewrite_innermost(const Term& t, const std::vector<Demodulator>& demods, Term& out,
                       size_t& which) {
  for (size_t i = 0; i < t.args.size(); ++i) {
    Term sub;
    if (rewrite_innermost(t.args[i], demods, sub, which)) {
      out = t;
      out.args[i] = std::move(sub);
      return true;
    }
  }
  if (t.is_variable()) return false;
  for (size_t d = 0; d < demods.size(); ++d) {
    Substitution sigma;
    if (!match_terms(demods[d].lhs(), t, sigma)) continue;
    out = sigma.apply(demods[d].rhs());
    which = d;
    return true;
  }
  return false;
}

}  // namespace

Clause demodulate(const Clause& c, const std::vector<Demodulator>& demods, int step_limit,
                  std::vector<size_t>* used) {
  if (demods.empty()) return c;
  Clause cur = c;
  int steps = 0;
  // Rewrites cannot re-enable positions in earlier arguments, so one pass
  // with per-argument fixpoints reaches the clause fixpoint.
  for (Literal& l : cur.lits) {
    for (Term& arg : l.args) {
      Term rewritten;
      size_t which = 0;
      while (rewrite_innermost(arg, demods, rewritten, which)) {
        if (++steps > step_limit)
          throw RewriteLimitExceeded("demodulation exceeded " + std::to_string(step_limit) +
                                     " rewrites on " + format_clause(c));
        arg = std::move(rewritten);
        if (used && std::find(used->begin(), used->end(), which) == used->end())
          used->push_back(which);
      }
    }
  }
  return cur;
}

}  // namespace tarski
