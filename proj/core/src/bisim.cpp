#include "birel/bisim.hpp"

#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "birel/semantics.hpp"

namespace birel {

bool operator<(const SigmaLabel& a, const SigmaLabel& b) {
  return std::tie(a.fallible, a.plus, a.dia) < std::tie(b.fallible, b.plus, b.dia);
}

Equivalence::Equivalence(const std::vector<std::size_t>& keys) : class_of_(keys.size()) {
  std::map<std::size_t, std::size_t> ids;
  for (std::size_t w = 0; w < keys.size(); ++w) {
    auto [it, fresh] = ids.try_emplace(keys[w], ids.size());
    class_of_[w] = it->second;
  }
  num_classes_ = ids.size();
}

Equivalence Equivalence::identity(std::size_t n) {
  std::vector<std::size_t> keys(n);
  for (std::size_t i = 0; i < n; ++i) keys[i] = i;
  return Equivalence(keys);
}

Equivalence Equivalence::from_relation(const Relation& r) {
  if (!is_preorder(r) || !(r == r.transpose()))
    throw PreconditionError("relation is not an equivalence");
  std::vector<std::size_t> keys(r.size());
  for (std::size_t w = 0; w < r.size(); ++w) keys[w] = r.successors(w).find_first();
  return Equivalence(keys);
}

std::vector<std::size_t> Equivalence::members(std::size_t c) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < size(); ++w)
    if (class_of_[w] == c) out.push_back(w);
  return out;
}

Relation Equivalence::as_relation() const {
  Relation r(size());
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (class_of_[a] == class_of_[b]) r.set(a, b);
  return r;
}

std::vector<SigmaLabel> compute_labels(const BirelationalModel& m, const std::vector<Formula>& sigma) {
  if (!is_subformula_closed(sigma)) throw PreconditionError("sigma is not subformula-closed");
  Evaluator ev(m);
  const std::size_t n = m.size();
  std::vector<SigmaLabel> labels(n);
  for (std::size_t w = 0; w < n; ++w) {
    labels[w].plus.resize(sigma.size());
    labels[w].dia.resize(sigma.size());
    labels[w].fallible = m.fallible.test(w);
  }
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const WorldSet& truth = ev.eval(sigma[i]);
    for (std::size_t w = 0; w < n; ++w) {
      if (truth.test(w)) labels[w].plus.set(i);
      if (!m.mod.successors(w).intersects(truth)) labels[w].dia.set(i);
    }
  }
  return labels;
}

namespace {

// Every x' >= x has some z-partner above y.
bool forth_up_ok(const Relation& pre, const Relation& z, std::size_t x, std::size_t y) {
  const WorldSet& above_y = pre.successors(y);
  bool ok = true;
  for_each_member(pre.successors(x), [&](std::size_t xp) {
    if (ok && !z.successors(xp).intersects(above_y)) ok = false;
  });
  return ok;
}

// Every x <= y has some z-partner below y'.
bool forth_down_ok(const Relation& below, const Relation& z, std::size_t y, std::size_t yp) {
  const WorldSet& below_yp = below.successors(yp);
  bool ok = true;
  for_each_member(below.successors(y), [&](std::size_t x) {
    if (ok && !z.successors(x).intersects(below_yp)) ok = false;
  });
  return ok;
}

}  // namespace

Equivalence greatest_bisimulation(const BirelationalModel& m, const std::vector<Formula>& sigma,
                                  bool strong) {
  const auto labels = compute_labels(m, sigma);
  const std::size_t n = m.size();
  const Relation below = m.pre.transpose();
  Relation z(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      if (labels[a] == labels[b]) {
        z.set(a, b);
        z.set(b, a);
      }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!z.test(a, b)) continue;
        bool keep = forth_up_ok(m.pre, z, a, b) && forth_up_ok(m.pre, z, b, a);
        if (keep && strong) keep = forth_down_ok(below, z, a, b) && forth_down_ok(below, z, b, a);
        if (!keep) {
          z.set(a, b, false);
          z.set(b, a, false);
          changed = true;
        }
      }
  }
  return Equivalence::from_relation(z);
}

BisimCheck check_bisimulation(const BirelationalModel& m, const std::vector<Formula>& sigma,
                              const Relation& z, bool strong) {
  if (z.size() != m.size()) throw SizeMismatch("check_bisimulation: relation size differs from model");
  const auto labels = compute_labels(m, sigma);
  for (auto [a, b] : z.edges())
    if (!(labels[a] == labels[b])) return {false, "label", {a, b}};
  if (auto v = forth_up_violation(m.pre, z)) return {false, "forth-up", *v};
  if (auto v = back_up_violation(m.pre, z)) return {false, "back-up", *v};
  if (strong) {
    if (auto v = forth_down_violation(m.pre, z)) return {false, "forth-down", *v};
    if (auto v = forth_down_violation(m.pre, z.transpose())) return {false, "forth-down-converse", *v};
  }
  return {};
}

Quotient quotient(const BirelationalModel& m, const Equivalence& e, const std::vector<Formula>& sigma) {
  if (e.size() != m.size()) throw PreconditionError("quotient: equivalence size differs from model");
  if (auto c = check_bisimulation(m, sigma, e.as_relation(), false); !c) {
    std::ostringstream msg;
    msg << "quotient: not a sigma-bisimulation (" << c.reason << " at";
    for (auto w : c.witness) msg << ' ' << m.names[w];
    msg << ')';
    throw PreconditionError(msg.str());
  }
  const std::size_t k = e.num_classes();
  Quotient q{BirelationalModel(k), e.classes()};
  auto& out = q.model;
  for (std::size_t c = 0; c < k; ++c) {
    std::string name;
    for (auto w : e.members(c)) name += (name.empty() ? "" : "_") + m.names[w];
    out.names[c] = name;
  }
  Relation mod0(k);
  for (std::size_t a = 0; a < m.size(); ++a) {
    if (m.fallible.test(a)) out.fallible.set(e.class_of(a));
    for_each_member(m.pre.successors(a), [&](std::size_t b) { out.pre.set(e.class_of(a), e.class_of(b)); });
    for_each_member(m.mod.successors(a), [&](std::size_t b) { mod0.set(e.class_of(a), e.class_of(b)); });
  }
  out.mod = transitive_closure(mod0);
  for (const auto& [p, s] : m.val) {
    WorldSet t(k);
    for_each_member(s, [&](std::size_t w) { t.set(e.class_of(w)); });
    out.val[p] = t;
  }
  return q;
}

Equivalence linear_strong_equivalence(const BirelationalModel& m, const std::vector<Formula>& sigma) {
  auto describe = [&](const char* what, const std::vector<std::size_t>& w) {
    std::ostringstream msg;
    msg << "linear_strong_equivalence: pre is not " << what << " (witness";
    for (auto i : w) msg << ' ' << m.names[i];
    msg << ')';
    return msg.str();
  };
  if (auto v = upward_linear_violation(m.pre)) throw PreconditionError(describe("upward linear", *v));
  if (auto v = downward_linear_violation(m.pre)) throw PreconditionError(describe("downward linear", *v));
  const auto labels = compute_labels(m, sigma);
  using Key = std::pair<SigmaLabel, std::set<SigmaLabel>>;
  std::map<Key, std::size_t> ids;
  std::vector<std::size_t> keys(m.size());
  for (std::size_t w = 0; w < m.size(); ++w) {
    std::set<SigmaLabel> around;
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m.pre.test(w, v) || m.pre.test(v, w)) around.insert(labels[v]);
    auto [it, fresh] = ids.try_emplace({labels[w], std::move(around)}, ids.size());
    keys[w] = it->second;
  }
  return Equivalence(keys);
}

}  // namespace birel
