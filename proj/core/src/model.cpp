#include "birel/model.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace birel {

std::string to_string(Logic l) {
  switch (l) {
    case Logic::CS4: return "CS4";
    case Logic::IS4: return "IS4";
    case Logic::S4I: return "S4I";
    case Logic::GS4: return "GS4";
    case Logic::GS4c: return "GS4c";
  }
  return "?";
}

std::string to_string(FrameClass c) {
  switch (c) {
    case FrameClass::CS4: return "CS4";
    case FrameClass::IS4: return "IS4";
    case FrameClass::S4I: return "S4I";
    case FrameClass::GS4: return "GS4";
    case FrameClass::GS4c: return "GS4c";
    case FrameClass::BiIntuitionistic: return "bi-intuitionistic";
    case FrameClass::Birelational: return "birelational";
  }
  return "?";
}

std::optional<Logic> parse_logic(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != '^') s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "cs4") return Logic::CS4;
  if (s == "is4") return Logic::IS4;
  if (s == "s4i") return Logic::S4I;
  if (s == "gs4") return Logic::GS4;
  if (s == "gs4c") return Logic::GS4c;
  return std::nullopt;
}

FrameClass frame_class_of(Logic l) {
  switch (l) {
    case Logic::CS4: return FrameClass::CS4;
    case Logic::IS4: return FrameClass::IS4;
    case Logic::S4I: return FrameClass::S4I;
    case Logic::GS4: return FrameClass::GS4;
    case Logic::GS4c: return FrameClass::GS4c;
  }
  return FrameClass::CS4;
}

BirelationalModel::BirelationalModel(std::size_t n) : fallible(n), pre(n), mod(n) {
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
}

WorldSet BirelationalModel::valuation(const std::string& prop) const {
  auto it = val.find(prop);
  return it == val.end() ? fallible : it->second;
}

std::optional<std::size_t> BirelationalModel::find_world(std::string_view name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

// --- well-formedness -------------------------------------------------------

namespace {

std::string tuple(const BirelationalModel& m, const std::vector<std::size_t>& ws) {
  std::string out = "(";
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) out += ',';
    out += m.names[ws[i]];
  }
  return out + ")";
}

void preorder_violations(const BirelationalModel& m, const Relation& r, const std::string& rel,
                         std::vector<Violation>& out) {
  for (std::size_t a = 0; a < r.size(); ++a)
    if (!r.test(a, a))
      out.push_back({rel + "-reflexive", rel + " not reflexive at " + m.names[a], {a}});
  for (std::size_t a = 0; a < r.size(); ++a) {
    WorldSet missing = r.image(r.successors(a)) - r.successors(a);
    auto c = missing.find_first();
    if (c == WorldSet::npos) continue;
    for_each_member(r.successors(a), [&](std::size_t b) {
      if (c != WorldSet::npos && r.test(b, c)) {
        std::vector<std::size_t> w{a, b, c};
        out.push_back({rel + "-transitive", rel + " not transitive, witness " + tuple(m, w), w});
        c = WorldSet::npos;
      }
    });
  }
}

void closure_violations(const BirelationalModel& m, const Relation& r, const WorldSet& s,
                        const std::string& code, const std::string& what,
                        std::vector<Violation>& out) {
  for_each_member(s, [&](std::size_t a) {
    WorldSet escape = r.successors(a) - s;
    auto b = escape.find_first();
    if (b == WorldSet::npos) return;
    std::vector<std::size_t> w{a, b};
    out.push_back({code, what + ", witness " + tuple(m, w), w});
  });
}

}  // namespace

bool WellFormedReport::frame_ok() const noexcept {
  return std::all_of(violations.begin(), violations.end(),
                     [](const Violation& v) { return v.code.rfind("val-", 0) == 0; });
}

WellFormedReport well_formed(const BirelationalModel& m) {
  WellFormedReport rep;
  const std::size_t n = m.size();
  bool shape_ok = m.fallible.size() == n && m.pre.size() == n && m.mod.size() == n;
  for (std::size_t i = 0; shape_ok && i < n; ++i)
    shape_ok = m.pre.successors(i).size() == n && m.mod.successors(i).size() == n;
  for (const auto& [p, s] : m.val) shape_ok = shape_ok && s.size() == n;
  if (!shape_ok) {
    rep.violations.push_back({"structure", "relation, fallible or valuation sizes differ from world count", {}});
    return rep;
  }

  preorder_violations(m, m.pre, "pre", rep.violations);
  closure_violations(m, m.pre, m.fallible, "fallible-pre", "fallible not up-closed under pre",
                     rep.violations);
  closure_violations(m, m.mod, m.fallible, "fallible-mod", "fallible not closed under mod",
                     rep.violations);
  for (const auto& [p, s] : m.val) {
    closure_violations(m, m.pre, s, "val-up-closed", "val(" + p + ") not up-closed",
                       rep.violations);
    WorldSet lacking = m.fallible - s;
    for_each_member(lacking, [&](std::size_t f) {
      rep.violations.push_back(
          {"val-fallible", "val(" + p + ") misses fallible world " + m.names[f], {f}});
    });
  }

  std::vector<Violation> mod_issues;
  preorder_violations(m, m.mod, "mod", mod_issues);
  rep.notes = std::move(mod_issues);

  if (!rep.ok()) {
    rep.grade = ModelGrade::Invalid;
  } else {
    rep.grade = rep.notes.empty() ? ModelGrade::BiIntuitionistic : ModelGrade::Birelational;
  }
  return rep;
}

void require_bi_intuitionistic(const BirelationalModel& m) {
  auto rep = well_formed(m);
  if (rep.grade == ModelGrade::BiIntuitionistic) return;
  std::ostringstream msg;
  msg << "malformed model:";
  for (const auto& v : rep.violations) msg << "\n  " << v.message;
  for (const auto& v : rep.notes) msg << "\n  " << v.message;
  throw ModelError(msg.str());
}

// --- confluence and linearity ------------------------------------------------

std::optional<std::vector<std::size_t>> forth_up_violation(const Relation& pre, const Relation& r) {
  for (std::size_t w = 0; w < r.size(); ++w)
    for (auto v = r.successors(w).find_first(); v != WorldSet::npos; v = r.successors(w).find_next(v))
      for (auto w2 = pre.successors(w).find_first(); w2 != WorldSet::npos;
           w2 = pre.successors(w).find_next(w2))
        if (!r.successors(w2).intersects(pre.successors(v))) return std::vector{w, w2, v};
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> back_up_violation(const Relation& pre, const Relation& r) {
  const Relation rt = r.transpose();
  for (std::size_t w = 0; w < r.size(); ++w)
    for (auto v = r.successors(w).find_first(); v != WorldSet::npos; v = r.successors(w).find_next(v))
      for (auto v2 = pre.successors(v).find_first(); v2 != WorldSet::npos;
           v2 = pre.successors(v).find_next(v2))
        if (!pre.successors(w).intersects(rt.successors(v2))) return std::vector{w, v, v2};
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> forth_down_violation(const Relation& pre, const Relation& r) {
  const Relation pret = pre.transpose();
  for (std::size_t w = 0; w < r.size(); ++w)
    for (auto v = pre.successors(w).find_first(); v != WorldSet::npos;
         v = pre.successors(w).find_next(v))
      for (auto v2 = r.successors(v).find_first(); v2 != WorldSet::npos;
           v2 = r.successors(v).find_next(v2))
        if (!r.successors(w).intersects(pret.successors(v2))) return std::vector{w, v, v2};
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> pointwise_convex_violation(const Relation& pre,
                                                                   const Relation& r) {
  const Relation pret = pre.transpose();
  for (std::size_t u = 0; u < r.size(); ++u) {
    const WorldSet& succ = r.successors(u);
    WorldSet between = pre.image(succ) & pret.image(succ);
    WorldSet bad = between - succ;
    auto w = bad.find_first();
    if (w == WorldSet::npos) continue;
    auto v1 = (pret.successors(w) & succ).find_first();
    auto v2 = (pre.successors(w) & succ).find_first();
    return std::vector{u, v1, w, v2};
  }
  return std::nullopt;
}

namespace {

std::optional<std::vector<std::size_t>> linear_violation(const Relation& rel) {
  for (std::size_t w = 0; w < rel.size(); ++w) {
    const WorldSet& s = rel.successors(w);
    for (auto u = s.find_first(); u != WorldSet::npos; u = s.find_next(u))
      for (auto v = s.find_next(u); v != WorldSet::npos; v = s.find_next(v))
        if (!rel.test(u, v) && !rel.test(v, u)) return std::vector{w, u, v};
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<std::size_t>> upward_linear_violation(const Relation& pre) {
  return linear_violation(pre);
}

std::optional<std::vector<std::size_t>> downward_linear_violation(const Relation& pre) {
  // u, v below w are incomparable in pre iff they are incomparable in its converse.
  return linear_violation(pre.transpose());
}

namespace {

PropertyCheck from(std::optional<std::vector<std::size_t>> v) {
  if (!v) return {};
  return {false, std::move(*v)};
}

PropertyCheck preorder_check(const Relation& r) {
  for (std::size_t a = 0; a < r.size(); ++a)
    if (!r.test(a, a)) return {false, {a}};
  for (std::size_t a = 0; a < r.size(); ++a)
    for (auto b = r.successors(a).find_first(); b != WorldSet::npos; b = r.successors(a).find_next(b)) {
      WorldSet missing = r.successors(b) - r.successors(a);
      if (auto c = missing.find_first(); c != WorldSet::npos) return {false, {a, b, c}};
    }
  return {};
}

}  // namespace

FrameProperties frame_properties(const BirelationalModel& m) {
  if (m.pre.size() != m.size() || m.mod.size() != m.size() || m.fallible.size() != m.size())
    throw ModelError("frame_properties: relation sizes differ from world count");
  FrameProperties p;
  p.pre_preorder = preorder_check(m.pre);
  p.mod_preorder = preorder_check(m.mod);
  p.forth_up = from(forth_up_violation(m.pre, m.mod));
  p.back_up = from(back_up_violation(m.pre, m.mod));
  p.forth_down = from(forth_down_violation(m.pre, m.mod));
  p.upward_linear = from(upward_linear_violation(m.pre));
  p.downward_linear = from(downward_linear_violation(m.pre));
  p.pointwise_convex = from(pointwise_convex_violation(m.pre, m.mod));
  if (auto f = m.fallible.find_first(); f != WorldSet::npos) p.infallible = {false, {f}};
  return p;
}

std::set<FrameClass> classes_from(const FrameProperties& p) {
  std::set<FrameClass> out;
  if (!p.pre_preorder) return out;
  out.insert(FrameClass::Birelational);
  if (!p.mod_preorder) return out;
  out.insert(FrameClass::BiIntuitionistic);
  const bool cs4 = p.back_up.holds;
  const bool is4 = cs4 && p.forth_up && p.infallible;
  const bool s4i = p.forth_up && p.forth_down && p.infallible;
  const bool gs4 = is4 && p.upward_linear;
  const bool gs4c = gs4 && p.forth_down;
  if (cs4) out.insert(FrameClass::CS4);
  if (is4) out.insert(FrameClass::IS4);
  if (s4i) out.insert(FrameClass::S4I);
  if (gs4) out.insert(FrameClass::GS4);
  if (gs4c) out.insert(FrameClass::GS4c);
  return out;
}

std::set<FrameClass> classify(const BirelationalModel& m) {
  auto rep = well_formed(m);
  std::vector<std::string> problems;
  for (const auto& v : rep.violations)
    if (v.code.rfind("val-", 0) != 0) problems.push_back(v.message);
  if (!problems.empty()) {
    std::string msg = "not a frame:";
    for (const auto& s : problems) msg += "\n  " + s;
    throw PreconditionError(msg);
  }
  return classes_from(frame_properties(m));
}

bool in_class(const BirelationalModel& m, FrameClass c) {
  try {
    return classify(m).contains(c);
  } catch (const PreconditionError&) {
    return false;
  }
}

}  // namespace birel
