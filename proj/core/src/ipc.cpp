// G4ip search. Sequents are sets of formulas; atoms are variables and
// modal formulas.

#include <map>
#include <set>
#include <utility>

#include "birel/proof.hpp"

namespace birel {

namespace {

using Kind = Formula::Kind;
using Context = std::set<Formula>;

bool atomic(const Formula& f) { return f.is(Kind::Var) || f.is_modal(); }

class Prover {
 public:
  bool prove(Context ctx, const Formula& goal) {
    auto key = std::make_pair(ctx, goal);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool r = search(std::move(ctx), goal);
    memo_.emplace(std::move(key), r);
    return r;
  }

 private:
  bool search(Context ctx, const Formula& goal) {
    // Invertible left rules until none applies.
    for (bool again = true; again;) {
      again = false;
      for (auto it = ctx.begin(); it != ctx.end(); ++it) {
        const Formula f = *it;
        switch (f.kind()) {
          case Kind::Bottom: return true;
          case Kind::And:
            ctx.erase(it);
            ctx.insert(f.lhs());
            ctx.insert(f.rhs());
            again = true;
            break;
          case Kind::Or: {
            ctx.erase(it);
            Context a = ctx, b = ctx;
            a.insert(f.lhs());
            b.insert(f.rhs());
            return prove(std::move(a), goal) && prove(std::move(b), goal);
          }
          case Kind::Implies: {
            const Formula& a = f.lhs();
            const Formula& b = f.rhs();
            if (a.is(Kind::Bottom)) {
              ctx.erase(it);
              again = true;
            } else if (atomic(a) && ctx.count(a)) {
              ctx.erase(it);
              ctx.insert(b);
              again = true;
            } else if (a.is(Kind::And)) {
              ctx.erase(it);
              ctx.insert(Formula::implies(a.lhs(), Formula::implies(a.rhs(), b)));
              again = true;
            } else if (a.is(Kind::Or)) {
              ctx.erase(it);
              ctx.insert(Formula::implies(a.lhs(), b));
              ctx.insert(Formula::implies(a.rhs(), b));
              again = true;
            }
            break;
          }
          default: break;
        }
        if (again) break;
      }
    }

    // Invertible right rules.
    switch (goal.kind()) {
      case Kind::And: return prove(ctx, goal.lhs()) && prove(ctx, goal.rhs());
      case Kind::Implies: {
        Context c = ctx;
        c.insert(goal.lhs());
        return prove(std::move(c), goal.rhs());
      }
      default: break;
    }
    if (atomic(goal) && ctx.count(goal)) return true;

    // Non-invertible choices.
    if (goal.is(Kind::Or) && (prove(ctx, goal.lhs()) || prove(ctx, goal.rhs()))) return true;
    for (const Formula& f : ctx) {
      if (!f.is(Kind::Implies) || !f.lhs().is(Kind::Implies)) continue;
      const Formula& c = f.lhs().lhs();
      const Formula& d = f.lhs().rhs();
      const Formula& b = f.rhs();
      Context rest = ctx;
      rest.erase(f);
      Context left = rest, right = rest;
      left.insert(Formula::implies(d, b));
      right.insert(b);
      if (prove(std::move(left), Formula::implies(c, d)) && prove(std::move(right), goal)) return true;
    }
    return false;
  }

  std::map<std::pair<Context, Formula>, bool> memo_;
};

}  // namespace

bool ipc_decide(const Formula& f) { return Prover().prove({}, f); }

}  // namespace birel
