#include <doctest.h>

#include <functional>

#include "birel/bisim.hpp"
#include "birel/semantics.hpp"
#include "birel/transform.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace birel;

namespace {

// Longest strict chain by exhaustive path search.
std::size_t brute_depth(const Relation& pre, std::size_t w) {
  std::size_t best = 0;
  for (std::size_t v = 0; v < pre.size(); ++v)
    if (pre.test(w, v) && !pre.test(v, w)) best = std::max(best, 1 + brute_depth(pre, v));
  return best;
}

BigNat tower_value(std::size_t height, BigNat base) {
  for (std::size_t i = 0; i < height; ++i) base = boost::multiprecision::pow(BigNat(2), static_cast<unsigned>(base));
  return base;
}

}  // namespace

TEST_CASE("convex closure") {
  testing::Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = testing::pick(rng, 1, 6);
    Relation pre = reflexive_transitive_closure(testing::random_relation(rng, n, 0.3));
    Relation r = testing::random_relation(rng, n, 0.3);
    Relation c = convex_closure(pre, r);
    CHECK_FALSE(pointwise_convex_violation(pre, c));
    CHECK(convex_closure(pre, c) == c);
    CHECK((c | r) == c);
  }
  for (int i = 0; i < 200; ++i) {
    std::size_t n = testing::pick(rng, 1, 6);
    Relation pre = reflexive_transitive_closure(testing::random_relation(rng, n, 0.3));
    Relation r = testing::confluent_closure(pre, testing::random_relation(rng, n, 0.2), {true, false, true});
    CHECK(is_transitive(convex_closure(pre, r)));
  }
}

TEST_CASE("convex closure keeps GS4c truth") {
  testing::Rng rng(42);
  for (int i = 0; i < 150; ++i) {
    auto m = testing::random_gs4_model(rng, testing::pick(rng, 1, 6), true);
    REQUIRE(in_class(m, FrameClass::GS4c));
    auto c = m;
    c.mod = convex_closure(m.pre, m.mod);
    Formula f = testing::random_formula(rng, 4, testing::default_props());
    CHECK(eval(m, f) == eval(c, f));
  }
}

TEST_CASE("linearize_gs4") {
  testing::Rng rng(43);
  for (int i = 0; i < 150; ++i) {
    auto m = testing::random_gs4_model(rng, testing::pick(rng, 1, 6));
    auto lin = linearize_gs4(m);
    CHECK(lin.model.size() == m.pre.edge_count());
    auto props = frame_properties(lin.model);
    CHECK(props.downward_linear.holds);
    CHECK(in_class(lin.model, FrameClass::GS4));
    for (const auto& f : subformula_closure(testing::random_formula(rng, 4, testing::default_props()))) {
      WorldSet a = eval(m, f), b = eval(lin.model, f);
      for (std::size_t k = 0; k < lin.index.size(); ++k) CHECK(b.test(k) == a.test(lin.index[k].second));
    }
  }
  auto bl = testing::fixture("gs4_not_cd.birel");
  auto lin = linearize_gs4(bl);
  auto truth = eval(lin.model, parse("[](p | q) -> []p | <>q"));
  CHECK_FALSE(truth.test(lin.lookup.at({0, 0})));
  CHECK_THROWS_AS(linearize_gs4(testing::fixture("fork_not_gd.birel")), PreconditionError);
}

TEST_CASE("linearize on a chain copies principal up-sets") {
  BirelationalModel m(3);
  m.pre = reflexive_transitive_closure(Relation(3, {{0, 1}, {1, 2}}));
  m.mod = Relation::identity(3);
  auto lin = linearize_gs4c(m);
  CHECK(lin.model.size() == 6);
  CHECK(lin.model.mod == Relation::identity(6));
}

TEST_CASE("linearize_gs4c") {
  testing::Rng rng(44);
  for (int i = 0; i < 150; ++i) {
    auto m = testing::random_gs4_model(rng, testing::pick(rng, 1, 6), true);
    m.mod = convex_closure(m.pre, m.mod);
    REQUIRE(in_class(m, FrameClass::GS4c));
    auto lin = linearize_gs4c(m);
    auto props = frame_properties(lin.model);
    CHECK(props.forth_down.holds);
    CHECK(props.downward_linear.holds);
    CHECK(in_class(lin.model, FrameClass::GS4c));
    for (const auto& f : subformula_closure(testing::random_formula(rng, 4, testing::default_props()))) {
      WorldSet a = eval(m, f), b = eval(lin.model, f);
      for (std::size_t k = 0; k < lin.index.size(); ++k) CHECK(b.test(k) == a.test(lin.index[k].second));
    }
  }
}

TEST_CASE("depth") {
  BirelationalModel cluster(3);
  cluster.pre = Relation::full(3);
  cluster.mod = Relation::identity(3);
  CHECK(depth(cluster).model == 0);

  BirelationalModel chain(3);
  chain.pre = reflexive_transitive_closure(Relation(3, {{0, 1}, {1, 2}}));
  chain.mod = Relation::identity(3);
  CHECK(depth(chain).model == 2);
  CHECK(depth(chain).per_world == std::vector<std::size_t>{2, 1, 0});

  testing::Rng rng(45);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = testing::pick(rng, 1, 6);
    BirelationalModel m(n);
    m.pre = reflexive_transitive_closure(testing::random_relation(rng, n, 0.3));
    m.mod = Relation::identity(n);
    auto d = depth(m);
    for (std::size_t w = 0; w < n; ++w) CHECK(d.per_world[w] == brute_depth(m.pre, w));
  }
}

TEST_CASE("superexp") {
  CHECK(superexp(1, 1) == 2);
  CHECK(superexp(1, 2) == 4);
  CHECK(superexp(3, 0) == 3);
  CHECK(superexp(2, 3) == 65536);
  CHECK_THROWS_AS(superexp(5, 3), CapExceeded);
  CHECK_THROWS_AS(superexp(40, 1, 32), CapExceeded);
  CHECK(superexp(31, 1, 32) == BigNat(1) << 31);
}

TEST_CASE("tower comparison agrees with materialised values") {
  for (std::size_t h1 = 0; h1 <= 3; ++h1)
    for (std::size_t h2 = 0; h2 <= 3; ++h2)
      for (unsigned b1 = 0; b1 <= 4; ++b1)
        for (unsigned b2 = 0; b2 <= 4; ++b2) {
          BigNat x = tower_value(h1, b1), y = tower_value(h2, b2);
          int expect = x < y ? -1 : x > y ? 1 : 0;
          CHECK(compare({h1, b1}, {h2, b2}, 64) == expect);
          CHECK(compare({h1, b1}, {h2, b2}) == expect);
        }
}

TEST_CASE("quotient size bound") {
  CHECK(quotient_size_bound(0) == 2);
  CHECK(quotient_size_bound(1) == 16);
  CHECK(quotient_size_bound(2) == 384);
}
