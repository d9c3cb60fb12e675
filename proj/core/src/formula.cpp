#include "birel/formula.hpp"

#include <algorithm>
#include <unordered_set>

namespace birel {

struct Formula::Node {
  Kind kind;
  std::string name;
  std::optional<Formula> lhs;
  std::optional<Formula> rhs;
  std::size_t size;
  std::size_t depth;
  std::size_t hash;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::make(Kind kind, std::string name, std::optional<Formula> lhs,
                      std::optional<Formula> rhs) {
  std::size_t size = 1;
  std::size_t depth = 0;
  std::size_t h = mix(0, static_cast<std::size_t>(kind));
  if (kind == Kind::Var) h = mix(h, std::hash<std::string>{}(name));
  for (const auto* child : {&lhs, &rhs}) {
    if (!child->has_value()) continue;
    size += (*child)->size();
    depth = std::max(depth, (*child)->depth() + 1);
    h = mix(h, (*child)->hash());
  }
  return Formula(std::make_shared<const Node>(
      Node{kind, std::move(name), std::move(lhs), std::move(rhs), size, depth, h}));
}

Formula Formula::var(std::string name) { return make(Kind::Var, std::move(name), {}, {}); }

Formula Formula::bottom() {
  static const Formula b = make(Kind::Bottom, {}, {}, {});
  return b;
}

Formula Formula::conj(Formula l, Formula r) { return make(Kind::And, {}, std::move(l), std::move(r)); }
Formula Formula::disj(Formula l, Formula r) { return make(Kind::Or, {}, std::move(l), std::move(r)); }
Formula Formula::implies(Formula l, Formula r) {
  return make(Kind::Implies, {}, std::move(l), std::move(r));
}
Formula Formula::dia(Formula a) { return make(Kind::Dia, {}, std::move(a), {}); }
Formula Formula::box(Formula a) { return make(Kind::Box, {}, std::move(a), {}); }

Formula Formula::top() { return implies(bottom(), bottom()); }
Formula Formula::neg(Formula a) { return implies(std::move(a), bottom()); }
Formula Formula::iff(Formula l, Formula r) { return conj(implies(l, r), implies(r, l)); }

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

bool Formula::is_binary() const noexcept {
  auto k = kind();
  return k == Kind::And || k == Kind::Or || k == Kind::Implies;
}

bool Formula::is_modal() const noexcept { return kind() == Kind::Dia || kind() == Kind::Box; }

const std::string& Formula::name() const {
  if (kind() != Kind::Var) throw std::logic_error("Formula::name on non-variable");
  return node_->name;
}

const Formula& Formula::lhs() const {
  if (!is_binary()) throw std::logic_error("Formula::lhs on non-binary node");
  return *node_->lhs;
}

const Formula& Formula::rhs() const {
  if (!is_binary()) throw std::logic_error("Formula::rhs on non-binary node");
  return *node_->rhs;
}

const Formula& Formula::arg() const {
  if (!is_modal()) throw std::logic_error("Formula::arg on non-modal node");
  return *node_->lhs;
}

std::size_t Formula::size() const noexcept { return node_->size; }
std::size_t Formula::depth() const noexcept { return node_->depth; }
std::size_t Formula::hash() const noexcept { return node_->hash; }

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.kind() != b.kind()) return false;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Formula::Kind::Var:
      return a.node_->name.compare(b.node_->name) <=> 0;
    case Formula::Kind::Bottom:
      return std::strong_ordering::equal;
    case Formula::Kind::Dia:
    case Formula::Kind::Box:
      return *a.node_->lhs <=> *b.node_->lhs;
    default:
      if (auto c = *a.node_->lhs <=> *b.node_->lhs; c != 0) return c;
      return *a.node_->rhs <=> *b.node_->rhs;
  }
}

namespace {

void collect(const Formula& f, std::unordered_set<Formula, FormulaHash>& seen,
             std::vector<Formula>& out) {
  if (seen.contains(f)) return;
  if (f.is_binary()) {
    collect(f.lhs(), seen, out);
    collect(f.rhs(), seen, out);
  } else if (f.is_modal()) {
    collect(f.arg(), seen, out);
  }
  seen.insert(f);
  out.push_back(f);
}

}  // namespace

std::vector<Formula> subformula_closure(const Formula& f) {
  return subformula_closure(std::vector<Formula>{f});
}

std::vector<Formula> subformula_closure(const std::vector<Formula>& roots) {
  std::unordered_set<Formula, FormulaHash> seen;
  std::vector<Formula> out;
  for (const auto& r : roots) collect(r, seen, out);
  return out;
}

bool is_subformula_closed(const std::vector<Formula>& sigma) {
  std::unordered_set<Formula, FormulaHash> members(sigma.begin(), sigma.end());
  for (const auto& f : sigma) {
    if (f.is_binary() && (!members.contains(f.lhs()) || !members.contains(f.rhs())))
      return false;
    if (f.is_modal() && !members.contains(f.arg())) return false;
  }
  return true;
}

std::vector<std::string> variables(const Formula& f) {
  std::set<std::string> names;
  for (const auto& g : subformula_closure(f))
    if (g.is(Formula::Kind::Var)) names.insert(g.name());
  return {names.begin(), names.end()};
}

Formula substitute(const Formula& schema, const Substitution& sigma) {
  if (sigma.empty()) return schema;
  switch (schema.kind()) {
    case Formula::Kind::Var: {
      auto it = sigma.find(schema.name());
      return it == sigma.end() ? schema : it->second;
    }
    case Formula::Kind::Bottom:
      return schema;
    case Formula::Kind::And:
      return Formula::conj(substitute(schema.lhs(), sigma), substitute(schema.rhs(), sigma));
    case Formula::Kind::Or:
      return Formula::disj(substitute(schema.lhs(), sigma), substitute(schema.rhs(), sigma));
    case Formula::Kind::Implies:
      return Formula::implies(substitute(schema.lhs(), sigma), substitute(schema.rhs(), sigma));
    case Formula::Kind::Dia:
      return Formula::dia(substitute(schema.arg(), sigma));
    case Formula::Kind::Box:
      return Formula::box(substitute(schema.arg(), sigma));
  }
  return schema;
}

namespace {

bool match_into(const Formula& schema, const Formula& cand, Substitution& sigma) {
  if (schema.is(Formula::Kind::Var)) {
    auto [it, inserted] = sigma.try_emplace(schema.name(), cand);
    return inserted || it->second == cand;
  }
  if (schema.kind() != cand.kind()) return false;
  if (schema.is_binary())
    return match_into(schema.lhs(), cand.lhs(), sigma) && match_into(schema.rhs(), cand.rhs(), sigma);
  if (schema.is_modal()) return match_into(schema.arg(), cand.arg(), sigma);
  return true;  // Bottom
}

}  // namespace

std::optional<Substitution> match_schema(const Formula& schema, const Formula& candidate) {
  Substitution sigma;
  if (!match_into(schema, candidate, sigma)) return std::nullopt;
  return sigma;
}

Formula big_conj(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::top();
  Formula acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = Formula::conj(*it, acc);
  return acc;
}

Formula big_disj(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::bottom();
  Formula acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = Formula::disj(*it, acc);
  return acc;
}

}  // namespace birel
