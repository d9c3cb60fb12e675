#include <doctest.h>

#include <functional>

#include "birel/semantics.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace birel;

namespace {

// Forcing clauses written as quantifier loops over world indices.
bool forces(const BirelationalModel& m, std::size_t w, const Formula& f) {
  const std::size_t n = m.size();
  switch (f.kind()) {
    case Formula::Kind::Var: return m.valuation(f.name()).test(w);
    case Formula::Kind::Bottom: return m.fallible.test(w);
    case Formula::Kind::And: return forces(m, w, f.lhs()) && forces(m, w, f.rhs());
    case Formula::Kind::Or: return forces(m, w, f.lhs()) || forces(m, w, f.rhs());
    case Formula::Kind::Implies:
      for (std::size_t u = 0; u < n; ++u)
        if (m.pre.test(w, u) && forces(m, u, f.lhs()) && !forces(m, u, f.rhs())) return false;
      return true;
    case Formula::Kind::Dia:
      for (std::size_t u = 0; u < n; ++u) {
        if (!m.pre.test(w, u)) continue;
        bool some = false;
        for (std::size_t v = 0; v < n; ++v) some = some || (m.mod.test(u, v) && forces(m, v, f.arg()));
        if (!some) return false;
      }
      return true;
    case Formula::Kind::Box:
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
          if (m.pre.test(w, u) && m.mod.test(u, v) && !forces(m, v, f.arg())) return false;
      return true;
  }
  return false;
}

bool holds_at(const BirelationalModel& m, const std::string& world, const char* formula) {
  return eval(m, parse(formula)).test(*m.find_world(world));
}

}  // namespace

TEST_CASE("eval agrees with the forcing clauses") {
  testing::Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    auto m = testing::random_bi_model(rng, testing::pick(rng, 1, 5));
    Formula f = testing::random_formula(rng, 4, testing::default_props());
    WorldSet s = eval(m, f);
    for (std::size_t w = 0; w < m.size(); ++w) CHECK(s.test(w) == forces(m, w, f));
  }
}

TEST_CASE("fallible worlds force everything") {
  testing::Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    auto m = testing::random_bi_model(rng, testing::pick(rng, 1, 5));
    Formula f = testing::random_formula(rng, 4, testing::default_props());
    CHECK(m.fallible.is_subset_of(eval(m, f)));
  }
}

TEST_CASE("separating fixtures falsify their axioms") {
  auto tl = testing::fixture("cs4_not_n.birel");
  CHECK(holds_at(tl, "i", "<>false"));
  CHECK_FALSE(holds_at(tl, "i", "~<>false"));

  auto fork = testing::fixture("fork_not_gd.birel");
  CHECK_FALSE(holds_at(fork, "r", "(p -> q) | (q -> p)"));

  auto bl = testing::fixture("gs4_not_cd.birel");
  CHECK(holds_at(bl, "a", "[](p | q)"));
  CHECK_FALSE(holds_at(bl, "a", "[]p"));
  CHECK_FALSE(holds_at(bl, "a", "<>q"));
  CHECK_FALSE(holds_at(bl, "a", "[](p | q) -> []p | <>q"));

  auto br = testing::fixture("s4i_not_fs2.birel");
  CHECK_FALSE(holds_at(br, "x", "<>p"));
  CHECK(holds_at(br, "x", "<>p -> []q"));
  CHECK_FALSE(holds_at(br, "x", "(<>p -> []q) -> [](p -> q)"));
}

TEST_CASE("box is not transitive without back-up") {
  auto m = testing::fixture("box_chain.birel");
  CHECK(holds_at(m, "x", "[]p"));
  CHECK_FALSE(holds_at(m, "x", "[][]p"));
}

TEST_CASE("model validity and local consequence") {
  auto fork = testing::fixture("fork_not_gd.birel");
  CHECK(model_validity(fork, parse("p -> p")));
  CHECK_FALSE(model_validity(fork, parse("p | ~p")));
  auto w = local_consequence(fork, {parse("q -> q")}, parse("p | ~p"));
  CHECK_FALSE(local_consequence(fork, {parse("p -> q"), parse("q -> p")}, parse("p")));
  REQUIRE(w);
  CHECK(fork.names[*w] == "r");
  CHECK_FALSE(local_consequence(fork, {parse("p")}, parse("p | q")));
}

TEST_CASE("classical shortcuts under confluence") {
  testing::Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    auto m = testing::random_bi_model(rng, testing::pick(rng, 1, 5));
    Formula f = testing::random_formula(rng, 4, testing::default_props());
    CHECK(classical_shortcut_check(m, f));
  }
}

TEST_CASE("evaluator rejects malformed models") {
  BirelationalModel m(2);
  m.pre = Relation::identity(2);
  m.mod = Relation::identity(2);
  m.pre.set(0, 1);
  m.val["p"] = singleton(2, 0);
  CHECK_THROWS_AS(Evaluator{m}, ModelError);
}
