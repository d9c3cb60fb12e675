#include "birel/semantics.hpp"

namespace birel {

Evaluator::Evaluator(const BirelationalModel& m, bool validate) : m_(&m) {
  if (!validate) return;
  auto rep = well_formed(m);
  if (!rep.ok()) {
    std::string msg = "malformed model:";
    for (const auto& v : rep.violations) msg += "\n  " + v.message;
    throw ModelError(msg);
  }
}

WorldSet Evaluator::box_pre(const WorldSet& s) const {
  const std::size_t n = m_->size();
  WorldSet out(n);
  for (std::size_t w = 0; w < n; ++w)
    if (m_->pre.successors(w).is_subset_of(s)) out.set(w);
  return out;
}

const WorldSet& Evaluator::eval(const Formula& f) {
  if (auto it = cache_.find(f); it != cache_.end()) return it->second;
  WorldSet ext;
  switch (f.kind()) {
    case Formula::Kind::Var:
      ext = m_->valuation(f.name());
      break;
    case Formula::Kind::Bottom:
      ext = m_->fallible;
      break;
    case Formula::Kind::And:
      ext = eval(f.lhs()) & eval(f.rhs());
      break;
    case Formula::Kind::Or:
      ext = eval(f.lhs()) | eval(f.rhs());
      break;
    case Formula::Kind::Implies: {
      WorldSet ok = ~eval(f.lhs()) | eval(f.rhs());
      ext = box_pre(ok);
      break;
    }
    case Formula::Kind::Dia:
      ext = box_pre(m_->mod.preimage(eval(f.arg())));
      break;
    case Formula::Kind::Box: {
      WorldSet bad = m_->mod.preimage(~eval(f.arg()));
      ext = box_pre(~bad);
      break;
    }
  }
  return cache_.emplace(f, std::move(ext)).first->second;
}

WorldSet eval(const BirelationalModel& m, const Formula& f) { return Evaluator(m).eval(f); }

bool model_validity(const BirelationalModel& m, const Formula& f) { return eval(m, f).all(); }

std::optional<std::size_t> local_consequence(const BirelationalModel& m,
                                             const std::vector<Formula>& premises,
                                             const Formula& f) {
  Evaluator ev(m);
  WorldSet candidates = ~m.fallible;
  for (const auto& g : premises) candidates &= ev.eval(g);
  candidates -= ev.eval(f);
  auto w = candidates.find_first();
  if (w == WorldSet::npos) return std::nullopt;
  return w;
}

bool classical_shortcut_check(const BirelationalModel& m, const Formula& f) {
  Evaluator ev(m);
  const bool fu = !forth_up_violation(m.pre, m.mod);
  const bool fd = !forth_down_violation(m.pre, m.mod);
  for (const auto& g : subformula_closure(f)) {
    if (fu && g.is(Formula::Kind::Dia)) {
      if (ev.eval(g) != m.mod.preimage(ev.eval(g.arg()))) return false;
    }
    if (fd && g.is(Formula::Kind::Box)) {
      if (ev.eval(g) != ~m.mod.preimage(~ev.eval(g.arg()))) return false;
    }
  }
  return true;
}

}  // namespace birel
