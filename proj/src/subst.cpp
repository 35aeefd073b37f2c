#include "tarski/subst.hpp"

namespace tarski {

namespace {

Term replace_var(const Term& t, const std::string& var, const Term& value) {
  if (t.is_variable()) return t.head == var ? value : t;
  Term out(t.head);
  out.args.reserve(t.args.size());
  for (const Term& a : t.args) out.args.push_back(replace_var(a, var, value));
  return out;
}

}  // namespace

void Substitution::bind(const std::string& var, const Term& t) {
  for (auto& [k, range] : bindings_) range = replace_var(range, var, t);
  bindings_[var] = t;
}

Term Substitution::apply(const Term& t) const {
  if (t.is_variable()) {
    const Term* bound = lookup(t.head);
    return bound ? *bound : t;
  }
  Term out(t.head);
  out.args.reserve(t.args.size());
  for (const Term& a : t.args) out.args.push_back(apply(a));
  return out;
}

Literal Substitution::apply(const Literal& l) const {
  Literal out;
  out.positive = l.positive;
  out.pred = l.pred;
  out.args.reserve(l.args.size());
  for (const Term& a : l.args) out.args.push_back(apply(a));
  return out;
}

Clause Substitution::apply(const Clause& c) const {
  Clause out;
  out.lits.reserve(c.lits.size());
  for (const Literal& l : c.lits) out.lits.push_back(apply(l));
  return out;
}

}  // namespace tarski
