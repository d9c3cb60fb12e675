#include "birel/transform.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace birel {

Relation convex_closure(const Relation& pre, const Relation& r) {
  if (pre.size() != r.size()) throw SizeMismatch("convex_closure: size mismatch");
  const Relation below = pre.transpose();
  Relation out(r.size());
  for (std::size_t u = 0; u < r.size(); ++u)
    out.successors(u) = pre.image(r.successors(u)) & below.image(r.successors(u));
  return out;
}

namespace {

Linearized linearize(const BirelationalModel& m, bool both) {
  Linearized out;
  const std::size_t n = m.size();
  for (std::size_t v = 0; v < n; ++v)
    for_each_member(m.pre.successors(v), [&](std::size_t w) {
      out.lookup[{v, w}] = out.index.size();
      out.index.emplace_back(v, w);
    });
  const std::size_t k = out.index.size();
  BirelationalModel& lm = out.model;
  lm = BirelationalModel(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto [v, w] = out.index[i];
    lm.names[i] = m.names[v] + "." + m.names[w];
    if (m.fallible.test(w)) lm.fallible.set(i);
  }
  for (std::size_t i = 0; i < k; ++i) {
    auto [v1, w1] = out.index[i];
    for (std::size_t j = 0; j < k; ++j) {
      auto [v2, w2] = out.index[j];
      if (v1 == v2 && m.pre.test(w1, w2)) lm.pre.set(i, j);
      if (m.mod.test(w1, w2) && (!both || m.mod.test(v1, v2))) lm.mod.set(i, j);
    }
  }
  for (const auto& [p, s] : m.val) {
    WorldSet t(k);
    for (std::size_t i = 0; i < k; ++i)
      if (s.test(out.index[i].second)) t.set(i);
    lm.val[p] = t;
  }
  return out;
}

}  // namespace

Linearized linearize_gs4(const BirelationalModel& m) {
  if (!in_class(m, FrameClass::GS4)) throw PreconditionError("linearize_gs4: model is not a GS4 model");
  return linearize(m, false);
}

Linearized linearize_gs4c(const BirelationalModel& m) {
  if (!in_class(m, FrameClass::GS4c))
    throw PreconditionError("linearize_gs4c: model is not a GS4c model");
  if (auto v = pointwise_convex_violation(m.pre, m.mod))
    throw PreconditionError("linearize_gs4c: model is not pointwise convex (apply convex_closure)");
  return linearize(m, true);
}

Depth depth(const BirelationalModel& m) {
  if (!is_preorder(m.pre)) throw PreconditionError("depth: pre is not a preorder");
  const std::size_t n = m.size();
  Depth d;
  d.per_world.assign(n, 0);
  // Clusters are the pre-equivalence classes; memoised longest path over them.
  std::vector<std::optional<std::size_t>> memo(n);
  std::function<std::size_t(std::size_t)> go = [&](std::size_t w) -> std::size_t {
    if (memo[w]) return *memo[w];
    std::size_t best = 0;
    for_each_member(m.pre.successors(w), [&](std::size_t v) {
      if (!m.pre.test(v, w)) best = std::max(best, go(v) + 1);
    });
    memo[w] = best;
    return best;
  };
  for (std::size_t w = 0; w < n; ++w) {
    d.per_world[w] = go(w);
    d.model = std::max(d.model, d.per_world[w]);
  }
  return d;
}

namespace {

std::size_t bits(const BigNat& x) { return x == 0 ? 0 : static_cast<std::size_t>(msb(x)) + 1; }

BigNat exp2(const BigNat& e) { return BigNat(1) << static_cast<std::size_t>(e); }

// Materialise levels while the result stays within cap_bits.
Tower normalise(Tower t, std::size_t cap_bits) {
  while (t.height > 0 && t.base < cap_bits) {
    t.base = exp2(t.base);
    --t.height;
  }
  return t;
}

bool materialised(const Tower& t) { return t.height == 0; }

}  // namespace

BigNat superexp(const BigNat& m, std::size_t k, std::size_t cap_bits) {
  BigNat x = m;
  for (std::size_t i = 0; i < k; ++i) {
    if (x >= cap_bits) throw CapExceeded("superexp: result exceeds " + std::to_string(cap_bits) + " bits");
    x = exp2(x);
  }
  return x;
}

int compare(const Tower& x0, const Tower& y0, std::size_t cap_bits) {
  Tower x = normalise(x0, cap_bits), y = normalise(y0, cap_bits);
  if (materialised(x) && materialised(y)) return x.base < y.base ? -1 : x.base > y.base ? 1 : 0;
  if (x.height >= 1 && y.height >= 1)
    return compare({x.height - 1, x.base}, {y.height - 1, y.base}, cap_bits);
  // Exactly one side is materialised; 2^e against an integer y.
  bool flip = materialised(x);
  const Tower& t = flip ? y : x;
  const BigNat& v = flip ? x.base : y.base;
  int r;
  if (v == 0) {
    r = 1;
  } else {
    std::size_t l = bits(v) - 1;  // 2^l <= v < 2^(l+1)
    int c = compare({t.height - 1, t.base}, {0, BigNat(l)}, cap_bits);
    if (c < 0) r = -1;
    else if (c > 0) r = 1;
    else r = v == exp2(BigNat(l)) ? 0 : -1;
  }
  return flip ? -r : r;
}

bool superexp_step_inequality(std::size_t m, std::size_t n, std::size_t k, std::size_t cap_bits) {
  if (k == 0 || n == 0) throw PreconditionError("superexp_step_inequality: need k >= 1 and n >= 1");
  // Both sides are powers of two; compare exponents m + 2^{(n-1)m}_{k-1} and 2^{nm}_{k-1}.
  Tower lhs = normalise({k - 1, BigNat((n - 1) * m)}, cap_bits);
  Tower rhs = normalise({k - 1, BigNat(n * m)}, cap_bits);
  const BigNat c = m;
  if (materialised(lhs) && materialised(rhs)) return c + lhs.base <= rhs.base;
  if (materialised(rhs)) return false;  // lhs alone already exceeds rhs
  if (materialised(lhs)) return true;   // rhs has more than cap_bits bits
  // c + 2^E <= 2^F with 2^E > c holds iff E < F.
  return compare({lhs.height - 1, lhs.base}, {rhs.height - 1, rhs.base}, cap_bits) < 0;
}

BigNat quotient_size_bound(std::size_t s) { return BigNat(s + 1) << (s * (s + 1) + 1); }

}  // namespace birel
