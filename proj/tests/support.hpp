#pragma once

#include <random>
#include <string>
#include <vector>

#include "birel/formula.hpp"
#include "birel/fuzzy.hpp"
#include "birel/model.hpp"

namespace birel::testing {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

inline Relation random_relation(Rng& rng, std::size_t n, double p) {
  Relation r(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && chance(rng, p)) r.set(a, b);
  return r;
}

// Each world has at most one immediate successor, so up-sets are chains.
// Occasionally two worlds are fused into a cluster.
inline Relation random_upward_linear(Rng& rng, std::size_t n) {
  Relation r = Relation::identity(n);
  for (std::size_t i = 1; i < n; ++i)
    if (chance(rng, 0.7)) r.set(i, pick(rng, 0, i - 1));
  if (n >= 2 && chance(rng, 0.2)) {
    std::size_t a = pick(rng, 1, n - 1);
    std::size_t b = pick(rng, 0, a - 1);
    if (r.test(a, b)) r.set(b, a);
  }
  return reflexive_transitive_closure(r);
}

struct Confluence {
  bool forth_up = false;
  bool back_up = false;
  bool forth_down = false;
};

// Smallest preorder containing r that has the requested confluences.
inline Relation confluent_closure(const Relation& pre, Relation r, Confluence c) {
  const std::size_t n = pre.size();
  for (bool changed = true; changed;) {
    changed = false;
    r = reflexive_transitive_closure(r);
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t v = 0; v < n; ++v) {
        if (!r.test(w, v)) continue;
        for (std::size_t x = 0; x < n; ++x) {
          // forth-up: w <= x, w r v  => some v' >= v with x r v'; add x r v.
          if (c.forth_up && pre.test(w, x) && !r.successors(x).intersects(pre.successors(v))) {
            r.set(x, v);
            changed = true;
          }
          // back-up: w r v <= x => some w' >= w with w' r x; add w r x.
          if (c.back_up && pre.test(v, x)) {
            bool ok = false;
            for_each_member(pre.successors(w), [&](std::size_t wp) { ok = ok || r.test(wp, x); });
            if (!ok) {
              r.set(w, x);
              changed = true;
            }
          }
          // forth-down: x <= w r v => some x r x' <= v; add x r v.
          if (c.forth_down && pre.test(x, w)) {
            bool ok = false;
            for_each_member(r.successors(x), [&](std::size_t xp) { ok = ok || pre.test(xp, v); });
            if (!ok) {
              r.set(x, v);
              changed = true;
            }
          }
        }
      }
  }
  return r;
}

inline void random_valuation(Rng& rng, BirelationalModel& m, const std::vector<std::string>& props) {
  const std::size_t n = m.size();
  for (const auto& p : props) {
    WorldSet s(n);
    for (std::size_t w = 0; w < n; ++w)
      if (chance(rng, 0.35)) s.set(w);
    m.val[p] = up_closure(m.pre, s) | m.fallible;
  }
}

inline const std::vector<std::string>& default_props() {
  static const std::vector<std::string> props{"p", "q", "r"};
  return props;
}

// Bi-intuitionistic model; confluences chosen at random.
inline BirelationalModel random_bi_model(Rng& rng, std::size_t n, bool allow_fallible = true) {
  BirelationalModel m(n);
  m.pre = chance(rng, 0.3) ? random_upward_linear(rng, n) : reflexive_transitive_closure(random_relation(rng, n, 0.25));
  Confluence c{chance(rng, 0.5), chance(rng, 0.5), chance(rng, 0.3)};
  m.mod = confluent_closure(m.pre, random_relation(rng, n, 0.2), c);
  if (allow_fallible && chance(rng, 0.3)) {
    WorldSet f(n);
    f.set(pick(rng, 0, n - 1));
    m.fallible = up_closure(m.pre | m.mod, f);
  }
  random_valuation(rng, m, default_props());
  return m;
}

inline BirelationalModel random_gs4_model(Rng& rng, std::size_t n, bool forth_down = false) {
  BirelationalModel m(n);
  m.pre = random_upward_linear(rng, n);
  m.mod = confluent_closure(m.pre, random_relation(rng, n, 0.2), {true, true, forth_down});
  random_valuation(rng, m, default_props());
  return m;
}

inline Formula random_formula(Rng& rng, std::size_t depth, const std::vector<std::string>& props) {
  if (depth == 0 || chance(rng, 0.2)) {
    if (chance(rng, 0.1)) return Formula::bottom();
    return Formula::var(props[pick(rng, 0, props.size() - 1)]);
  }
  switch (pick(rng, 0, 4)) {
    case 0: return Formula::conj(random_formula(rng, depth - 1, props), random_formula(rng, depth - 1, props));
    case 1: return Formula::disj(random_formula(rng, depth - 1, props), random_formula(rng, depth - 1, props));
    case 2: return Formula::implies(random_formula(rng, depth - 1, props), random_formula(rng, depth - 1, props));
    case 3: return Formula::dia(random_formula(rng, depth - 1, props));
    default: return Formula::box(random_formula(rng, depth - 1, props));
  }
}

// Subformula closure of a random formula, at most max_size elements.
inline std::vector<Formula> random_sigma(Rng& rng, std::size_t max_size,
                                         const std::vector<std::string>& props = default_props()) {
  while (true) {
    auto sigma = subformula_closure(random_formula(rng, 4, props));
    if (sigma.size() <= max_size) return sigma;
  }
}

inline Rational random_unit(Rng& rng) {
  static const Rational values[] = {Rational(0),    Rational(1, 4), Rational(1, 3), Rational(1, 2),
                                    Rational(2, 3), Rational(3, 4), Rational(1)};
  return values[pick(rng, 0, 6)];
}

// Reflexive, max-min transitive fuzzy model.
inline FuzzyModel random_fuzzy_model(Rng& rng, std::size_t n, bool crisp) {
  FuzzyModel m(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      m.r[a][b] = a == b ? Rational(1) : crisp ? Rational(chance(rng, 0.3) ? 1 : 0) : random_unit(rng);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w) {
          Rational via = std::min(m.r[u][v], m.r[v][w]);
          if (m.r[u][w] < via) {
            m.r[u][w] = via;
            changed = true;
          }
        }
  }
  for (const auto& p : default_props()) {
    std::vector<Rational> vals(n);
    for (auto& x : vals) x = random_unit(rng);
    m.atoms[p] = vals;
  }
  return m;
}

}  // namespace birel::testing
