#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "tarski/inference.hpp"
#include "tarski/parse.hpp"
#include "tarski/unify.hpp"
#include "testgen.hpp"

using namespace tarski;

namespace {

Clause cl(const char* text) { return parse_clause(text); }

bool contains_variant(const std::vector<InferenceResult>& rs, const Clause& c) {
  for (const InferenceResult& r : rs)
    if (variant(r.conclusion, c)) return true;
  return false;
}

}  // namespace

TEST_CASE("binary_resolve: unit against unit refutes the first theorem goal") {
  auto rs = binary_resolve(cl("E(xa,xb,xa,xb)."), cl("-E(a,b,a,b)."));
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].conclusion.empty());
}

TEST_CASE("binary_resolve: modus ponens shape") {
  auto rs = binary_resolve(cl("-A(x) | B(x)."), cl("A(c)."));
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].conclusion == cl("B(c)."));
}

TEST_CASE("binary_resolve: every complementary pair yields a result") {
  auto rs = binary_resolve(cl("P(x) | P(y)."), cl("-P(a)."));
  REQUIRE(rs.size() == 2);
  CHECK(variant(rs[0].conclusion, cl("P(y).")));
  CHECK(variant(rs[1].conclusion, cl("P(x).")));
}

TEST_CASE("hyper_resolve: inner Pasch nucleus with two satellites") {
  Clause nucleus = cl("-T(x1,x2,x3) | -T(x4,x5,x3) | T(x2,ip(x1,x2,x3,x4,x5),x4).");
  auto r = hyper_resolve(nucleus, {cl("T(a,s,c)."), cl("T(b,t,c).")});
  REQUIRE(r.has_value());
  CHECK(r->conclusion == cl("T(s,ip(a,s,c,b,t),b)."));
}

TEST_CASE("hyper_resolve: nucleus without negative literals fails") {
  CHECK_FALSE(hyper_resolve(cl("T(a,b,c)."), {}).has_value());
  CHECK_FALSE(hyper_resolve(cl("T(a,b,c) | E(a,b,c,d)."), {cl("T(a,b,c).")}).has_value());
}

TEST_CASE("hyper_resolve: identity for equidistance") {
  auto r = hyper_resolve(cl("-E(x,y,z,z) | x = y."), {cl("E(a,b,c,c).")});
  REQUIRE(r.has_value());
  CHECK(r->conclusion == cl("a = b."));
}

TEST_CASE("hyper_resolve: satellites must be all-positive") {
  CHECK_FALSE(hyper_resolve(cl("-P(x) | Q(x)."), {cl("P(a) | -R(a).")}).has_value());
}

TEST_CASE("unit_resolve: unit conflict gives the empty clause") {
  auto rs = unit_resolve(cl("a != b."), cl("a = b."));
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].conclusion.empty());
}

TEST_CASE("unit_resolve: outer-transitivity shape against a unit") {
  auto rs = unit_resolve(cl("-T(a,b,c) | -T(b,c,d) | T(a,b,d)."), cl("T(a,b,c)."));
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].conclusion == cl("-T(b,c,d) | T(a,b,d)."));
}

TEST_CASE("unit_resolve: two non-units produce nothing") {
  CHECK(unit_resolve(cl("P(a) | Q(a)."), cl("-P(a) | R(a).")).empty());
}

TEST_CASE("paramodulate: reflection involution rewrites under the predicate") {
  auto rs = paramodulate(cl("s(p,s(p,x)) = x."), cl("-T(a,s(p,s(p,b)),c)."));
  CHECK(contains_variant(rs, cl("-T(a,b,c).")));
}

TEST_CASE("paramodulate: from a = a produces only variants of the target") {
  Clause target = cl("-T(a,q,a).");
  auto rs = paramodulate(cl("a = a."), target);
  CHECK(!rs.empty());
  for (const InferenceResult& r : rs) CHECK(variant(r.conclusion, target));
}

TEST_CASE("paramodulate: diagram equation in both directions") {
  Clause eq = cl("e = ip(c,b1,a1,a,p).");
  auto rs = paramodulate(eq, cl("-T(e,q,c)."));
  CHECK(contains_variant(rs, cl("-T(ip(c,b1,a1,a,p),q,c).")));
  auto back = paramodulate(eq, cl("-T(ip(c,b1,a1,a,p),q,c)."));
  CHECK(contains_variant(back, cl("-T(e,q,c).")));
}

TEST_CASE("paramodulate: never into variables") {
  // The only non-variable subterm of P(x) is none; no conclusions.
  CHECK(paramodulate(cl("a = b."), cl("P(x).")).empty());
}

TEST_CASE("factor") {
  auto rs = factor(cl("P(x) | P(a)."));
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].conclusion == cl("P(a)."));

  CHECK(factor(cl("P(x) | -P(a).")).empty());

  auto rs2 = factor(cl("T(x,y,c) | T(a,y,c) | Q(y)."));
  REQUIRE(rs2.size() == 1);
  CHECK(rs2[0].conclusion == cl("T(a,y,c) | Q(y)."));
}

TEST_CASE("subsumes: spec examples") {
  CHECK(subsumes(cl("E(xa,xb,xa,xb)."), cl("E(a,b,a,b).")));
  CHECK_FALSE(subsumes(cl("E(a,b,a,b)."), cl("E(xa,xb,xa,xb).")));
  CHECK(subsumes(cl("P(x) | Q(x)."), cl("P(a) | Q(a) | R(a).")));
  // Length guard: set-based theta-subsumption would accept this one.
  CHECK_FALSE(subsumes(cl("P(x) | P(y)."), cl("P(a).")));
}

TEST_CASE("subsumes: reflexive, transitive, antisymmetric up to variants") {
  testgen::Gen gen(5);
  std::vector<Clause> pool;
  for (int i = 0; i < 60; ++i) pool.push_back(gen.clause(3));
  for (const Clause& c : pool) CHECK(subsumes(c, c));
  for (size_t i = 0; i < pool.size(); i += 3)
    for (size_t j = 0; j < pool.size(); j += 3)
      for (size_t k = 0; k < pool.size(); k += 3)
        if (subsumes(pool[i], pool[j]) && subsumes(pool[j], pool[k]))
          CHECK(subsumes(pool[i], pool[k]));
  // A clause subsumes its instances of equal length.
  for (const Clause& c : pool) {
    Substitution inst;
    for (const std::string& v : variables_of(c)) inst.bind(v, Term("a"));
    CHECK(subsumes(c, inst.apply(c)));
  }
}

TEST_CASE("variant: mutual subsumption of renamings") {
  Clause c = cl("T(x,y,c) | -E(x,y,x,y).");
  Clause r = rename_apart(c, variables_of(c));
  CHECK(variant(c, r));
  CHECK_FALSE(variant(c, cl("T(x,x,c) | -E(x,x,x,x).")));
}

TEST_CASE("demodulate: spec examples") {
  std::vector<Demodulator> involution{make_demodulator(cl("s(p,s(p,x)) = x."))};
  CHECK(demodulate(cl("-T(a,s(p,s(p,b)),c)."), involution) == cl("-T(a,b,c)."));

  CHECK(demodulate(cl("P(f(a))."), {}) == cl("P(f(a))."));

  std::vector<Demodulator> ff{make_demodulator(cl("f(f(x)) = x."))};
  CHECK(demodulate(cl("P(f(f(f(a))))."), ff) == cl("P(f(a))."));
}

TEST_CASE("demodulate: records which demodulators fired") {
  std::vector<Demodulator> ds{make_demodulator(cl("g(x,b) = x.")),
                              make_demodulator(cl("f(f(x)) = x."))};
  std::vector<size_t> used;
  Clause out = demodulate(cl("P(f(f(g(a,b))))."), ds, 1000, &used);
  CHECK(out == cl("P(a)."));
  CHECK(used == std::vector<size_t>{0, 1});
}

TEST_CASE("demodulate: non-terminating set hits the rewrite bound") {
  std::vector<Demodulator> bad{make_demodulator(cl("f(x) = f(f(x))."))};
  CHECK_THROWS_AS(demodulate(cl("P(f(a))."), bad, 100), RewriteLimitExceeded);
}

TEST_CASE("demodulate: no-op without shared symbols") {
  std::vector<Demodulator> ds{make_demodulator(cl("f(f(x)) = x."))};
  testgen::Gen gen(17);
  for (int i = 0; i < 500; ++i) {
    Clause c = gen.clause(3);
    bool mentions_f = false;
    for (const Literal& l : c.lits)
      for (const Term& a : l.args) {
        std::function<void(const Term&)> walk = [&](const Term& t) {
          if (t.head == "f") mentions_f = true;
          for (const Term& s : t.args) walk(s);
        };
        walk(a);
      }
    if (!mentions_f) CHECK(demodulate(c, ds) == c);
  }
}

TEST_CASE("make_demodulator rejects bad shapes") {
  CHECK_THROWS_AS(make_demodulator(cl("P(a).")), std::invalid_argument);
  CHECK_THROWS_AS(make_demodulator(cl("a != b.")), std::invalid_argument);
  CHECK_THROWS_AS(make_demodulator(cl("a = b | P(a).")), std::invalid_argument);
  CHECK_THROWS_AS(make_demodulator(cl("f(x) = g(x,y).")), std::invalid_argument);
  CHECK_THROWS_AS(make_demodulator(cl("x = f(x).")), std::invalid_argument);
}

// Ground soundness oracle: every conclusion of every rule is propositionally
// entailed by its parents (paramodulation is checked separately with the
// equality-aware oracle).
TEST_CASE("soundness on ground problems via truth tables") {
  testgen::Gen gen(31);
  auto ground_literal = [&]() {
    static const char* consts[] = {"a", "b", "c"};
    bool pos = gen.pick(2) == 0;
    if (gen.pick(2) == 0) return Literal(pos, "P", {Term(consts[gen.pick(3)])});
    return Literal(pos, "Q", {Term(consts[gen.pick(3)]), Term(consts[gen.pick(3)])});
  };
  auto ground_clause = [&]() {
    Clause c;
    int n = 1 + static_cast<int>(gen.pick(3));
    for (int i = 0; i < n; ++i) c.lits.push_back(ground_literal());
    return c;
  };
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    Clause c1 = ground_clause();
    Clause c2 = ground_clause();
    for (const InferenceResult& r : binary_resolve(c1, c2)) {
      CHECK(oracle::entails({c1, c2}, r.conclusion));
      ++checked;
    }
    for (const InferenceResult& r : unit_resolve(c1, c2)) {
      CHECK(oracle::entails({c1, c2}, r.conclusion));
      ++checked;
    }
    for (const InferenceResult& r : factor(c1)) {
      CHECK(oracle::entails({c1}, r.conclusion));
      ++checked;
    }
    if (auto r = hyper_resolve(c1, {c2})) {
      CHECK(oracle::entails({c1, c2}, r->conclusion));
      ++checked;
    }
  }
  CHECK(checked > 80);
}

TEST_CASE("paramodulation soundness via the equality-aware oracle") {
  testgen::Gen gen(57);
  static const char* consts[] = {"a", "b", "c"};
  auto ground_lit = [&]() {
    bool pos = gen.pick(2) == 0;
    switch (gen.pick(3)) {
      case 0: return Literal(pos, "P", {Term(consts[gen.pick(3)])});
      case 1: return Literal(pos, "Q", {Term(consts[gen.pick(3)]), Term(consts[gen.pick(3)])});
      default: return Literal(pos, "=", {Term(consts[gen.pick(3)]), Term(consts[gen.pick(3)])});
    }
  };
  auto ground_clause = [&]() {
    Clause c;
    int n = 1 + static_cast<int>(gen.pick(2));
    for (int i = 0; i < n; ++i) c.lits.push_back(ground_lit());
    return c;
  };
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    Clause from = ground_clause();
    Clause into = ground_clause();
    for (const InferenceResult& r : paramodulate(from, into)) {
      CHECK(oracle::entails_with_equality({from, into}, r.conclusion));
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("binary resolution agrees with the propositional oracle on ground clauses") {
  testgen::Gen gen(71);
  static const char* consts[] = {"a", "b"};
  auto ground_clause = [&]() {
    Clause c;
    int n = 1 + static_cast<int>(gen.pick(3));
    for (int i = 0; i < n; ++i) {
      bool pos = gen.pick(2) == 0;
      c.lits.push_back(Literal(pos, "Q", {Term(consts[gen.pick(2)]), Term(consts[gen.pick(2)])}));
    }
    return c;
  };
  for (int i = 0; i < 500; ++i) {
    Clause c1 = ground_clause();
    Clause c2 = ground_clause();
    auto expected = oracle::prop_resolvents(c1, c2);
    auto got = binary_resolve(c1, c2);
    REQUIRE(got.size() == expected.size());
    for (size_t k = 0; k < got.size(); ++k) CHECK(got[k].conclusion == expected[k]);
  }
}

TEST_CASE("hyperresolution equals iterated binary resolution on axiom shapes") {
  // Inner transitivity shape.
  Clause a15 = cl("-T(x,y,w) | -T(y,z,w) | T(x,y,z).");
  auto hyper = hyper_resolve(a15, {cl("T(a,b,d)."), cl("T(b,c,d).")});
  REQUIRE(hyper.has_value());
  auto step1 = binary_resolve(a15, cl("T(a,b,d)."));
  REQUIRE(!step1.empty());
  auto step2 = binary_resolve(step1[0].conclusion, cl("T(b,c,d)."));
  REQUIRE(!step2.empty());
  CHECK(variant(step2[0].conclusion, hyper->conclusion));

  // Outer transitivity shape: the nucleus keeps its positive equality.
  Clause a16 = cl("-T(x,y,z) | -T(y,z,w) | y = z | T(x,y,w).");
  auto hyper2 = hyper_resolve(a16, {cl("T(a,b,c)."), cl("T(b,c,d).")});
  REQUIRE(hyper2.has_value());
  auto s1 = binary_resolve(a16, cl("T(a,b,c)."));
  REQUIRE(!s1.empty());
  auto s2 = binary_resolve(s1[0].conclusion, cl("T(b,c,d)."));
  REQUIRE(!s2.empty());
  CHECK(variant(s2[0].conclusion, hyper2->conclusion));
  CHECK(variant(hyper2->conclusion, cl("b = c | T(a,b,d).")));
}
