#include <doctest.h>

#include "birel/formula.hpp"
#include "support.hpp"

using namespace birel;

TEST_CASE("parse: precedence and associativity") {
  CHECK(parse("p & q | r") == Formula::disj(Formula::conj(parse("p"), parse("q")), parse("r")));
  CHECK(parse("p -> q -> r") == Formula::implies(parse("p"), Formula::implies(parse("q"), parse("r"))));
  CHECK(parse("p & q & r") == Formula::conj(Formula::conj(parse("p"), parse("q")), parse("r")));
  CHECK(parse("~[]p") == Formula::neg(Formula::box(parse("p"))));
  CHECK(parse("<>p & q") == Formula::conj(Formula::dia(parse("p")), parse("q")));
  CHECK(parse("true") == Formula::implies(Formula::bottom(), Formula::bottom()));
  CHECK(parse("p <-> q") == Formula::iff(parse("p"), parse("q")));
  CHECK(parse("(p <-> q) -> r").is(Formula::Kind::Implies));
}

TEST_CASE("parse: errors carry columns") {
  auto column_of = [](const char* text) -> std::size_t {
    try {
      parse(text);
    } catch (const SyntaxError& e) {
      return e.column();
    }
    return 0;
  };
  CHECK(column_of("p &") == 4);
  CHECK(column_of("p $ q") == 3);
  CHECK(column_of("(p") == 3);
  CHECK(column_of("p <-> q <-> r") == 9);
  CHECK(column_of("p -> q <-> r") == 8);
  CHECK(column_of("p <-> q -> r") == 9);
  CHECK(column_of("P") == 1);
  CHECK(column_of("") == 1);
}

TEST_CASE("print round-trips") {
  for (const char* s : {"p", "false", "true", "~p", "[]<>p", "p & q -> r | s", "(p -> q) -> r",
                        "p & (q | r)", "~(p & q)", "[](p -> q) -> []p -> []q", "(p -> q) | (q -> p)"}) {
    Formula f = parse(s);
    CHECK(parse(print(f)) == f);
  }
  CHECK(print(parse("(p & q) & r")) == "p & q & r");
  CHECK(print(parse("p & (q & r)")) == "p & (q & r)");
  CHECK(print(parse("p -> (q -> r)")) == "p -> q -> r");
  CHECK(print(parse("~<>false")) == "~<>false");
}

TEST_CASE("print round-trips on random formulas") {
  testing::Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    Formula f = testing::random_formula(rng, 5, {"p", "q", "r"});
    CHECK(parse(print(f)) == f);
  }
}

TEST_CASE("subformula closure") {
  auto sigma = subformula_closure(parse("[]p -> p"));
  REQUIRE(sigma.size() == 3);
  CHECK(sigma[0] == parse("p"));
  CHECK(sigma[1] == parse("[]p"));
  CHECK(sigma[2] == parse("[]p -> p"));
  CHECK(is_subformula_closed(sigma));
  CHECK_FALSE(is_subformula_closed({parse("[]p")}));
  CHECK(subformula_closure(parse("~p")).size() == 3);  // p, false, p -> false
  CHECK(subformula_closure(std::vector<Formula>{parse("p"), parse("q & p")}).size() == 3);
}

TEST_CASE("substitute and match") {
  Formula k = parse("[](p -> q) -> ([]p -> []q)");
  Substitution s{{"p", parse("a & b")}, {"q", parse("<>c")}};
  Formula inst = substitute(k, s);
  CHECK(inst == parse("[](a & b -> <>c) -> ([](a & b) -> []<>c)"));
  auto m = match_schema(k, inst);
  REQUIRE(m);
  CHECK(m->at("p") == parse("a & b"));
  CHECK(m->at("q") == parse("<>c"));
  CHECK_FALSE(match_schema(parse("p -> p"), parse("a -> b")));
  CHECK(match_schema(parse("p -> p"), parse("[]a -> []a")));
}

TEST_CASE("big conjunction and disjunction") {
  CHECK(big_conj({}) == Formula::top());
  CHECK(big_disj({}) == Formula::bottom());
  CHECK(big_conj({parse("a"), parse("b"), parse("c")}) == parse("a & (b & c)"));
  CHECK(big_disj({parse("a"), parse("b")}) == parse("a | b"));
}

TEST_CASE("variables, size and depth") {
  Formula f = parse("[](q -> p) | r");
  CHECK(variables(f) == std::vector<std::string>{"p", "q", "r"});
  CHECK(f.size() == 6);
  CHECK(f.depth() == 3);
}
