#ifndef TARSKI_SUBST_HPP
#define TARSKI_SUBST_HPP

#include <map>
#include <string>

#include "tarski/term.hpp"

namespace tarski {

// Finite variable-to-term map, kept normalized: no bound variable occurs in
// any binding's range, so application is idempotent.
class Substitution {
 public:
  bool empty() const { return bindings_.empty(); }
  size_t size() const { return bindings_.size(); }

  const Term* lookup(const std::string& var) const {
    auto it = bindings_.find(var);
    return it == bindings_.end() ? nullptr : &it->second;
  }

  // Binds var to t (t must already be fully applied under this substitution)
  // and rewrites existing ranges so the normal form is preserved.
  void bind(const std::string& var, const Term& t);

  // Binding without range rewriting, for one-way matching where target
  // variables are constants and must never be touched.
  void bind_raw(const std::string& var, const Term& t) { bindings_[var] = t; }

  Term apply(const Term& t) const;
  Literal apply(const Literal& l) const;
  Clause apply(const Clause& c) const;

  const std::map<std::string, Term>& bindings() const { return bindings_; }

 private:
  std::map<std::string, Term> bindings_;
};

}  // namespace tarski

#endif
