#include <doctest.h>

#include "birel/model.hpp"
#include "birel/model_io.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace birel;

namespace {

// Closure and composition checked against explicit matrix loops.
Relation naive_compose(const Relation& r, const Relation& s) {
  Relation out(r.size());
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t b = 0; b < r.size(); ++b)
      for (std::size_t c = 0; c < r.size(); ++c)
        if (r.test(a, b) && s.test(b, c)) out.set(a, c);
  return out;
}

Relation naive_rt_closure(Relation r) {
  for (std::size_t i = 0; i < r.size(); ++i) r.set(i, i);
  for (bool changed = true; changed;) {
    changed = false;
    Relation next = r | naive_compose(r, r);
    if (!(next == r)) {
      r = next;
      changed = true;
    }
  }
  return r;
}

}  // namespace

TEST_CASE("relation algebra agrees with matrix loops") {
  testing::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = testing::pick(rng, 1, 7);
    Relation r = testing::random_relation(rng, n, 0.3), s = testing::random_relation(rng, n, 0.3);
    CHECK(compose(r, s) == naive_compose(r, s));
    Relation c = reflexive_transitive_closure(r);
    CHECK(c == naive_rt_closure(r));
    CHECK(is_preorder(c));
  }
  CHECK_THROWS_AS(compose(Relation(2), Relation(3)), SizeMismatch);
}

TEST_CASE("well_formed reports violations with witnesses") {
  BirelationalModel m(2);
  m.pre = Relation::identity(2);
  m.mod = Relation::identity(2);
  m.pre.set(0, 1);
  m.val["p"] = singleton(2, 0);
  auto rep = well_formed(m);
  CHECK_FALSE(rep.ok());
  CHECK(rep.frame_ok());
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].code == "val-up-closed");
  CHECK(rep.violations[0].witness == std::vector<std::size_t>{0, 1});

  BirelationalModel bad(2);
  bad.pre = Relation::identity(2);
  bad.pre.set(0, 0, false);
  bad.mod = Relation::identity(2);
  auto r2 = well_formed(bad);
  CHECK_FALSE(r2.frame_ok());
  CHECK_THROWS_AS(classify(bad), PreconditionError);
}

TEST_CASE("mod not a preorder drops the grade") {
  BirelationalModel m(2);
  m.pre = Relation::identity(2);
  m.mod.set(0, 1);
  auto rep = well_formed(m);
  CHECK(rep.ok());
  CHECK(rep.grade == ModelGrade::Birelational);
  CHECK_FALSE(rep.notes.empty());
}

TEST_CASE("fixture classification") {
  auto top_left = testing::fixture("cs4_not_n.birel");
  auto cls = classify(top_left);
  CHECK(cls.count(FrameClass::CS4));
  CHECK_FALSE(cls.count(FrameClass::IS4));
  CHECK_FALSE(cls.count(FrameClass::S4I));

  auto fork = testing::fixture("fork_not_gd.birel");
  cls = classify(fork);
  CHECK(cls.count(FrameClass::IS4));
  CHECK(cls.count(FrameClass::S4I));
  CHECK_FALSE(cls.count(FrameClass::GS4));

  auto bl = testing::fixture("gs4_not_cd.birel");
  auto props = frame_properties(bl);
  CHECK(classify(bl).count(FrameClass::GS4));
  CHECK_FALSE(props.forth_down.holds);
  CHECK(props.forth_down.witness == std::vector<std::size_t>{0, 1, 2});

  auto br = testing::fixture("s4i_not_fs2.birel");
  props = frame_properties(br);
  CHECK(classify(br).count(FrameClass::S4I));
  CHECK_FALSE(props.back_up.holds);
  CHECK(props.back_up.witness == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("back-up witness on the box chain example") {
  auto m = testing::fixture("box_chain.birel");
  auto v = back_up_violation(m.pre, m.mod);
  REQUIRE(v);
  CHECK(*v == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("linearity and convexity witnesses") {
  Relation pre = reflexive_transitive_closure(Relation(3, {{0, 1}, {0, 2}}));
  auto up = upward_linear_violation(pre);
  REQUIRE(up);
  CHECK(*up == std::vector<std::size_t>{0, 1, 2});
  CHECK_FALSE(downward_linear_violation(pre));

  Relation chain = reflexive_transitive_closure(Relation(3, {{0, 1}, {1, 2}}));
  Relation r(3, {{0, 0}, {0, 2}});
  auto pc = pointwise_convex_violation(chain, r);
  REQUIRE(pc);
  CHECK(*pc == std::vector<std::size_t>{0, 0, 1, 2});
}

TEST_CASE("model file round trip") {
  testing::Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    auto m = testing::random_bi_model(rng, testing::pick(rng, 1, 5));
    auto back = parse_model(write_model(m));
    CHECK(back.names == m.names);
    CHECK(back.pre == m.pre);
    CHECK(back.mod == m.mod);
    CHECK(back.fallible == m.fallible);
    CHECK(back.val == m.val);
    CHECK(classify(back) == classify(m));
  }
}

TEST_CASE("model format errors report lines") {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_model(text);
    } catch (const FormatError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("birel v2\n") == 1);
  CHECK(line_of("birel v1\nworld a\npre a b\n") == 3);
  CHECK(line_of("birel v1\nworld a\nworld a\n") == 3);
  CHECK(line_of("birel v1\nworld a\nval P a\n") == 3);
  CHECK(line_of("birel v1\nworld a\nfoo\n") == 3);
  CHECK(line_of("birel v1\n# c\nworld a\nclose pre\nclose mod\n") == 0);
}

TEST_CASE("missing valuation defaults to the fallible set") {
  auto m = parse_model("birel v1\nworld a\nworld b\nfallible b\nclose pre\nclose mod\n");
  CHECK(m.valuation("p") == singleton(2, 1));
}

TEST_CASE("parse_logic") {
  CHECK(parse_logic("gs4c") == Logic::GS4c);
  CHECK(parse_logic("GS4^c") == Logic::GS4c);
  CHECK(parse_logic("Is4") == Logic::IS4);
  CHECK_FALSE(parse_logic("k4"));
}
