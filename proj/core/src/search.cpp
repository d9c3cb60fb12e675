#include "birel/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "birel/semantics.hpp"

namespace birel {

std::size_t exhaustive_cap() {
  if (const char* env = std::getenv("BIRELLAB_CAP_WORLDS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultExhaustiveCap;
}

std::size_t sampled_cap() { return kDefaultSampledCap; }

std::string to_string(SearchResult::Status s) {
  switch (s) {
    case SearchResult::Status::Found: return "FOUND";
    case SearchResult::Status::NoneUpToBound: return "NONE-UP-TO-BOUND";
    case SearchResult::Status::NoneFound: return "NONE-FOUND";
  }
  return "?";
}

namespace {

using Mask = std::uint64_t;

Relation from_mask(std::size_t n, Mask mask) {
  Relation r(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mask >> (a * n + b) & 1U) r.set(a, b);
  return r;
}

Mask to_mask(const Relation& r) {
  Mask mask = 0;
  const std::size_t n = r.size();
  for (std::size_t a = 0; a < n; ++a)
    for_each_member(r.successors(a), [&](std::size_t b) { mask |= Mask{1} << (a * n + b); });
  return mask;
}

WorldSet set_from_mask(std::size_t n, Mask mask) {
  WorldSet s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1U) s.set(i);
  return s;
}

struct ClassNeeds {
  bool mod_preorder = true;
  bool forth_up = false;
  bool back_up = false;
  bool forth_down = false;
  bool upward_linear = false;
  bool infallible = false;
};

ClassNeeds needs(FrameClass c) {
  ClassNeeds k;
  switch (c) {
    case FrameClass::Birelational: k.mod_preorder = false; break;
    case FrameClass::BiIntuitionistic: break;
    case FrameClass::CS4: k.back_up = true; break;
    case FrameClass::IS4: k.back_up = k.forth_up = k.infallible = true; break;
    case FrameClass::S4I: k.forth_up = k.forth_down = k.infallible = true; break;
    case FrameClass::GS4: k.back_up = k.forth_up = k.infallible = k.upward_linear = true; break;
    case FrameClass::GS4c:
      k.back_up = k.forth_up = k.infallible = k.upward_linear = k.forth_down = true;
      break;
  }
  return k;
}

bool mod_ok(const ClassNeeds& k, const Relation& pre, const Relation& mod) {
  if (k.forth_up && forth_up_violation(pre, mod)) return false;
  if (k.back_up && back_up_violation(pre, mod)) return false;
  if (k.forth_down && forth_down_violation(pre, mod)) return false;
  return true;
}

std::size_t max_exhaustive_worlds() { return 8; }

void check_exhaustive(std::size_t n) {
  std::size_t cap = std::min(exhaustive_cap(), max_exhaustive_worlds());
  if (n > cap)
    throw CapExceeded("exhaustive enumeration limited to " + std::to_string(cap) + " worlds, asked for " +
                      std::to_string(n));
}

const std::vector<Relation>& mod_candidates(std::size_t n, bool preorders_only) {
  if (preorders_only) return enumerate_preorders(n);
  static std::mutex mu;
  static std::map<std::size_t, std::vector<Relation>> cache;
  std::lock_guard lock(mu);
  auto& v = cache[n];
  if (v.empty())
    for (Mask mask = 0; mask < (Mask{1} << (n * n)); ++mask) v.push_back(from_mask(n, mask));
  return v;
}

// Frames with a fixed pre, in mod-then-fallible order.
bool frames_over(std::size_t n, const Relation& pre, const ClassNeeds& k, bool fallible_allowed,
                 const std::function<bool(const Frame&)>& visit) {
  Frame f(n);
  f.pre = pre;
  for (const Relation& mod : mod_candidates(n, k.mod_preorder)) {
    if (!mod_ok(k, pre, mod)) continue;
    f.mod = mod;
    const Relation both = pre | mod;
    const Mask top = (fallible_allowed && !k.infallible) ? (Mask{1} << n) : 1;
    for (Mask fm = 0; fm < top; ++fm) {
      WorldSet s = set_from_mask(n, fm);
      if (!is_up_closed(both, s)) continue;
      f.fallible = s;
      if (!visit(f)) return false;
    }
  }
  return true;
}

bool pre_ok(const ClassNeeds& k, const Relation& pre) {
  return !k.upward_linear || !upward_linear_violation(pre);
}

}  // namespace

const std::vector<Relation>& enumerate_preorders(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<Relation>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n > max_exhaustive_worlds()) throw CapExceeded("preorder enumeration limited to 8 worlds");
  // Close every set of off-diagonal edges and keep distinct results.
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) off.emplace_back(a, b);
  std::set<Mask> seen;
  for (Mask pick = 0; pick < (Mask{1} << off.size()); ++pick) {
    Relation r = Relation::identity(n);
    for (std::size_t i = 0; i < off.size(); ++i)
      if (pick >> i & 1U) r.set(off[i].first, off[i].second);
    seen.insert(to_mask(transitive_closure(r)));
  }
  std::vector<Relation> out;
  for (Mask m : seen) out.push_back(from_mask(n, m));
  return cache.emplace(n, std::move(out)).first->second;
}

void enumerate_frames(std::size_t n, FrameClass c, bool fallible_allowed,
                      const std::function<bool(const Frame&)>& visit) {
  check_exhaustive(n);
  const ClassNeeds k = needs(c);
  for (const Relation& pre : enumerate_preorders(n))
    if (pre_ok(k, pre) && !frames_over(n, pre, k, fallible_allowed, visit)) return;
}

std::vector<Frame> enumerate_frames(std::size_t n, FrameClass c, bool fallible_allowed) {
  std::vector<Frame> out;
  enumerate_frames(n, c, fallible_allowed, [&](const Frame& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

void enumerate_valuations(const Frame& frame, const std::vector<std::string>& props,
                          const std::function<bool(const BirelationalModel&)>& visit) {
  const std::size_t n = frame.size();
  std::vector<WorldSet> candidates;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    WorldSet s = set_from_mask(n, m);
    if (frame.fallible.is_subset_of(s) && is_up_closed(frame.pre, s)) candidates.push_back(s);
  }
  BirelationalModel model = frame;
  model.val.clear();
  std::vector<std::size_t> pick(props.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < props.size(); ++i) model.val[props[i]] = candidates[pick[i]];
    if (!visit(model)) return;
    std::size_t i = props.size();
    while (i > 0 && ++pick[i - 1] == candidates.size()) pick[--i] = 0;
    if (i == 0) return;
  }
}

std::vector<BirelationalModel> enumerate_valuations(const Frame& frame, const std::vector<std::string>& props) {
  std::vector<BirelationalModel> out;
  enumerate_valuations(frame, props, [&](const BirelationalModel& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

namespace {

using Probe = std::function<std::optional<std::size_t>(Evaluator&)>;

struct Hit {
  BirelationalModel model;
  std::size_t world;
};

// First hit over all frames with this pre, in enumeration order.
std::optional<Hit> search_pre(std::size_t n, const Relation& pre, const ClassNeeds& k,
                              const std::vector<std::string>& props, const Probe& probe,
                              std::atomic<std::size_t>& checked) {
  std::optional<Hit> hit;
  frames_over(n, pre, k, true, [&](const Frame& f) {
    enumerate_valuations(f, props, [&](const BirelationalModel& m) {
      ++checked;
      Evaluator ev(m, false);
      if (auto w = probe(ev)) hit = Hit{m, *w};
      return !hit;
    });
    return !hit;
  });
  return hit;
}

SearchResult exhaustive(const std::vector<std::string>& props, FrameClass c, std::size_t max_n,
                        const SearchOptions& opts, const Probe& probe) {
  check_exhaustive(max_n);
  SearchResult res;
  res.max_worlds = max_n;
  res.options = opts;
  const ClassNeeds k = needs(c);
  std::atomic<std::size_t> checked{0};
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto& all = enumerate_preorders(n);
    std::vector<const Relation*> pres;
    for (const auto& pre : all)
      if (pre_ok(k, pre)) pres.push_back(&pre);
    std::vector<std::optional<Hit>> hits(pres.size());
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    auto work = [&](std::size_t start, std::size_t step) {
      for (std::size_t i = start; i < pres.size(); i += step) {
        if (i > best.load()) return;
        hits[i] = search_pre(n, *pres[i], k, props, probe, checked);
        if (hits[i]) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    };
    const unsigned jobs = std::max(1U, opts.jobs);
    if (jobs == 1) {
      work(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
      for (auto& th : pool) th.join();
    }
    if (best.load() != std::numeric_limits<std::size_t>::max()) {
      auto& h = *hits[best.load()];
      res.status = SearchResult::Status::Found;
      res.model = std::move(h.model);
      res.world = h.world;
      break;
    }
  }
  res.models_checked = checked.load();
  return res;
}

SearchResult sampled(const std::vector<std::string>& props, FrameClass c, std::size_t max_n,
                     const SearchOptions& opts, const Probe& probe) {
  if (max_n > sampled_cap())
    throw CapExceeded("sampled search limited to " + std::to_string(sampled_cap()) + " worlds, asked for " +
                      std::to_string(max_n));
  SearchResult res;
  res.max_worlds = max_n;
  res.options = opts;
  res.status = SearchResult::Status::NoneFound;
  if (max_n == 0) return res;
  const ClassNeeds k = needs(c);
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::size_t> size_dist(1, max_n);
  std::bernoulli_distribution edge(0.3), coin(0.5);
  auto random_relation = [&](std::size_t n) {
    Relation r(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a != b && edge(rng)) r.set(a, b);
    return r;
  };
  auto random_set = [&](std::size_t n) {
    WorldSet s(n);
    for (std::size_t i = 0; i < n; ++i)
      if (coin(rng)) s.set(i);
    return s;
  };
  for (std::size_t s = 0; s < opts.samples; ++s) {
    const std::size_t n = size_dist(rng);
    BirelationalModel m(n);
    m.pre = reflexive_transitive_closure(random_relation(n));
    m.mod = k.mod_preorder ? reflexive_transitive_closure(random_relation(n)) : random_relation(n);
    if (!k.infallible && coin(rng)) {
      WorldSet f(n);
      f.set(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
      m.fallible = up_closure(m.pre | m.mod, f);
    }
    if (!pre_ok(k, m.pre) || !mod_ok(k, m.pre, m.mod)) continue;
    for (const auto& p : props) m.val[p] = up_closure(m.pre, random_set(n)) | m.fallible;
    ++res.models_checked;
    Evaluator ev(m, false);
    if (auto w = probe(ev)) {
      res.status = SearchResult::Status::Found;
      res.model = m;
      res.world = *w;
      return res;
    }
  }
  return res;
}

SearchResult run(const std::vector<Formula>& formulas, FrameClass c, std::size_t max_n,
                 const SearchOptions& opts, const Probe& probe) {
  std::set<std::string> vars;
  for (const auto& f : formulas)
    for (const auto& v : variables(f)) vars.insert(v);
  std::vector<std::string> props(vars.begin(), vars.end());
  if (opts.mode == SearchOptions::Mode::Sampled) return sampled(props, c, max_n, opts, probe);
  return exhaustive(props, c, max_n, opts, probe);
}

std::optional<std::size_t> first_in(const WorldSet& s) {
  auto i = s.find_first();
  if (i == WorldSet::npos) return std::nullopt;
  return i;
}

}  // namespace

SearchResult find_countermodel(const Formula& f, FrameClass c, std::size_t max_worlds,
                               const SearchOptions& opts) {
  return run({f}, c, max_worlds, opts, [&](Evaluator& ev) { return first_in(~ev.eval(f)); });
}

SearchResult find_satisfying(const Formula& f, FrameClass c, std::size_t max_worlds, const SearchOptions& opts) {
  return run({f}, c, max_worlds, opts, [&](Evaluator& ev) {
    return first_in(ev.eval(f) - ev.model().fallible);
  });
}

SearchResult check_entailment_bounded(const std::vector<Formula>& premises, const Formula& f, FrameClass c,
                                      std::size_t max_worlds, const SearchOptions& opts) {
  std::vector<Formula> all = premises;
  all.push_back(f);
  return run(all, c, max_worlds, opts, [&](Evaluator& ev) {
    WorldSet s = ~ev.eval(f) - ev.model().fallible;
    for (const auto& g : premises) s &= ev.eval(g);
    return first_in(s);
  });
}

std::vector<std::pair<BirelationalModel, std::size_t>> all_countermodels(const Formula& f, FrameClass c,
                                                                      std::size_t n) {
  check_exhaustive(n);
  std::vector<std::pair<BirelationalModel, std::size_t>> out;
  const auto props = variables(f);
  enumerate_frames(n, c, true, [&](const Frame& fr) {
    enumerate_valuations(fr, props, [&](const BirelationalModel& m) {
      Evaluator ev(m, false);
      if (auto w = first_in(~ev.eval(f))) out.emplace_back(m, *w);
      return true;
    });
    return true;
  });
  return out;
}

BigNat complete_bound(const Formula& f) { return quotient_size_bound(subformula_closure(f).size()); }

bool isomorphic(const BirelationalModel& a, const BirelationalModel& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return false;
  std::set<std::string> props;
  for (const auto& [p, s] : a.val) props.insert(p);
  for (const auto& [p, s] : b.val) props.insert(p);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      if (a.fallible.test(x) != b.fallible.test(perm[x])) ok = false;
      for (std::size_t y = 0; y < n && ok; ++y)
        if (a.pre.test(x, y) != b.pre.test(perm[x], perm[y]) || a.mod.test(x, y) != b.mod.test(perm[x], perm[y]))
          ok = false;
    }
    for (auto it = props.begin(); it != props.end() && ok; ++it) {
      WorldSet va = a.valuation(*it), vb = b.valuation(*it);
      for (std::size_t x = 0; x < n && ok; ++x)
        if (va.test(x) != vb.test(perm[x])) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace birel
