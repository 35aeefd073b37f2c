#ifndef TARSKI_TESTS_TESTGEN_HPP
#define TARSKI_TESTS_TESTGEN_HPP

#include <random>
#include <string>
#include <vector>

#include "tarski/term.hpp"

namespace tarski::testgen {

// Deterministic random clauses over a fixed arity-consistent signature.
class Gen {
 public:
  explicit Gen(uint32_t seed) : rng_(seed) {}

  Term term(int depth = 2) {
    if (depth <= 0 || pick(3) == 0) {
      static const char* leaves[] = {"x", "y", "z", "u", "a", "b", "c", "d"};
      return Term(leaves[pick(8)]);
    }
    switch (pick(3)) {
      case 0: return Term("f", {term(depth - 1)});
      case 1: return Term("g", {term(depth - 1), term(depth - 1)});
      default: return Term("h", {term(depth - 1), term(depth - 1), term(depth - 1)});
    }
  }

  Literal literal() {
    bool positive = pick(2) == 0;
    switch (pick(4)) {
      case 0: return Literal(positive, "P", {term()});
      case 1: return Literal(positive, "Q", {term(), term()});
      case 2: return Literal(positive, "T", {term(), term(), term()});
      default: return Literal(positive, "=", {term(), term()});
    }
  }

  Clause clause(int max_lits = 4) {
    Clause c;
    int n = 1 + static_cast<int>(pick(static_cast<uint32_t>(max_lits)));
    for (int i = 0; i < n; ++i) c.lits.push_back(literal());
    return c;
  }

  uint32_t pick(uint32_t n) { return std::uniform_int_distribution<uint32_t>(0, n - 1)(rng_); }

 private:
  std::mt19937 rng_;
};

}  // namespace tarski::testgen

#endif
