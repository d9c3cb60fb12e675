#include <doctest.h>

#include "birel/errors.hpp"
#include "birel/fuzzy.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace birel;

namespace {

FuzzyModel one_world(Rational p) {
  FuzzyModel m(1);
  m.r[0][0] = 1;
  m.atoms["p"] = {p};
  return m;
}

}  // namespace

TEST_CASE("single graded world") {
  auto m = one_world(Rational(1, 2));
  CHECK(fuzzy_eval(m, parse("p | ~p"))[0] == Rational(1, 2));
  CHECK(fuzzy_eval(m, parse("~p"))[0] == Rational(0));
  CHECK(fuzzy_eval(m, parse("[]p"))[0] == Rational(1, 2));
  CHECK(fuzzy_eval(m, parse("<>p"))[0] == Rational(1, 2));
  CHECK(fuzzy_eval(m, parse("p -> p"))[0] == Rational(1));
}

TEST_CASE("goedel connectives") {
  FuzzyModel m(1);
  m.r[0][0] = 1;
  m.atoms["p"] = {Rational(3, 4)};
  m.atoms["q"] = {Rational(1, 4)};
  CHECK(fuzzy_eval(m, parse("p & q"))[0] == Rational(1, 4));
  CHECK(fuzzy_eval(m, parse("p | q"))[0] == Rational(3, 4));
  CHECK(fuzzy_eval(m, parse("p -> q"))[0] == Rational(1, 4));
  CHECK(fuzzy_eval(m, parse("q -> p"))[0] == Rational(1));
  CHECK(fuzzy_eval(m, parse("false"))[0] == Rational(0));
}

TEST_CASE("modal clauses on a graded edge") {
  auto m = load_fuzzy_model(testing::data_path("models/graded.fuzzy"));
  // u: R(u,u)=1, R(u,v)=1/2; p(u)=1/2, p(v)=3/4
  auto dia = fuzzy_eval(m, parse("<>p"));
  CHECK(dia[0] == Rational(1, 2));  // max(min(1,1/2), min(1/2,3/4))
  auto box = fuzzy_eval(m, parse("[]p"));
  CHECK(box[0] == Rational(1, 2));  // min(1 > 1/2 -> 1/2, 1/2 <= 3/4 -> 1)
  auto boxq = fuzzy_eval(m, parse("[]q"));
  CHECK(boxq[0] == Rational(0));  // q(u) = 0 and R(u,u) = 1
  CHECK(boxq[1] == Rational(1, 4));
}

TEST_CASE("GD is 1 on every sampled model") {
  testing::Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    auto m = testing::random_fuzzy_model(rng, testing::pick(rng, 1, 4), false);
    for (const auto& v : fuzzy_eval(m, parse("(p -> q) | (q -> p)"))) CHECK(v == Rational(1));
  }
}

TEST_CASE("frame check witnesses") {
  FuzzyModel m(3);
  m.r[0][0] = m.r[1][1] = m.r[2][2] = 1;
  auto rep = fuzzy_frame_check(m);
  CHECK(rep.reflexive);
  CHECK(rep.transitive);
  CHECK(rep.crisp);

  m.r[0][1] = Rational(1, 2);
  m.r[1][2] = Rational(3, 4);
  rep = fuzzy_frame_check(m);
  CHECK_FALSE(rep.transitive);
  CHECK(rep.transitive_witness == std::vector<std::size_t>{0, 1, 2});
  CHECK_FALSE(rep.crisp);
  CHECK(rep.crisp_witness == std::vector<std::size_t>{0, 1});

  m.r[2][2] = Rational(1, 3);
  rep = fuzzy_frame_check(m);
  CHECK_FALSE(rep.reflexive);
  CHECK(rep.reflexive_witness == std::vector<std::size_t>{2});
}

TEST_CASE("sampled models are reflexive and transitive") {
  testing::Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    auto rep = fuzzy_frame_check(testing::random_fuzzy_model(rng, testing::pick(rng, 1, 4), i % 2 == 0));
    CHECK(rep.reflexive);
    CHECK(rep.transitive);
  }
}

TEST_CASE("local consequence") {
  auto m = one_world(Rational(1, 2));
  auto w = fuzzy_local_consequence(m, {}, parse("p | ~p"));
  REQUIRE(w);
  CHECK(*w == 0);
  CHECK_FALSE(fuzzy_local_consequence(m, {parse("p")}, parse("q")));  // premise below 1
}

TEST_CASE("fuzzy format") {
  CHECK_THROWS_AS(parse_fuzzy_model("fuzzy v1\nworld a\nr a a 3/2\n"), FormatError);
  CHECK_THROWS_AS(parse_fuzzy_model("fuzzy v1\nworld a\nr a b 1\n"), FormatError);
  CHECK_THROWS_AS(parse_fuzzy_model("fuzzy v1\nworld a\nr a a 1/0\n"), FormatError);
  CHECK_THROWS_AS(parse_fuzzy_model("fuzzy v1\nworld a\nr a a 1\nr a a 1/2\n"), FormatError);
  auto m = parse_fuzzy_model("fuzzy v1\nworld a\nr a a 2/4\nval p a 1\n");
  CHECK(m.r[0][0] == Rational(1, 2));
  auto back = parse_fuzzy_model(write_fuzzy_model(m));
  CHECK(back.r == m.r);
  CHECK(back.atoms == m.atoms);
}

TEST_CASE("out of range values are rejected") {
  FuzzyModel m(1);
  m.r[0][0] = 2;
  CHECK_THROWS_AS(fuzzy_eval(m, parse("p")), ModelError);
}
