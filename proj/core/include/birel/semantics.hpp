#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "birel/formula.hpp"
#include "birel/model.hpp"

namespace birel {

// Computes truth sets bottom-up, memoising every subformula it meets.
//
// The clauses are the birelational forcing clauses:
//   false   : the fallible worlds
//   a -> b  : w such that every pre-successor in a is in b
//   <>a     : w such that every pre-successor u has some mod-successor in a
//   []a     : w such that for all w pre u mod v, v is in a
class Evaluator {
 public:
  // Throws ModelError when the model is not well formed. Pass
  // validate=false only for models already known to be well formed.
  explicit Evaluator(const BirelationalModel& m, bool validate = true);

  const WorldSet& eval(const Formula& f);
  const BirelationalModel& model() const noexcept { return *m_; }

 private:
  // w such that pre(w) is a subset of s.
  WorldSet box_pre(const WorldSet& s) const;

  const BirelationalModel* m_;
  std::unordered_map<Formula, WorldSet, FormulaHash> cache_;
};

WorldSet eval(const BirelationalModel& m, const Formula& f);

// M |= f: f holds at every world, fallible ones included.
bool model_validity(const BirelationalModel& m, const Formula& f);

// A non-fallible world forcing every premise but not the conclusion.
std::optional<std::size_t> local_consequence(const BirelationalModel& m,
                                             const std::vector<Formula>& premises,
                                             const Formula& f);

// Checks the simplified modal clauses against the full ones on every modal
// subformula of f: <> against "some mod-successor" when m is forth-up
// confluent, [] against "every mod-successor" when m is forth-down confluent.
// Vacuously true when neither confluence holds.
bool classical_shortcut_check(const BirelationalModel& m, const Formula& f);

}  // namespace birel
