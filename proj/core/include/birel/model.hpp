#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "birel/errors.hpp"
#include "birel/relation.hpp"

namespace birel {

// The five logics and their frame classes.
enum class Logic { CS4, IS4, S4I, GS4, GS4c };

enum class FrameClass { CS4, IS4, S4I, GS4, GS4c, BiIntuitionistic, Birelational };

inline constexpr Logic kAllLogics[] = {Logic::CS4, Logic::IS4, Logic::S4I, Logic::GS4, Logic::GS4c};

std::string to_string(Logic l);
std::string to_string(FrameClass c);
// Accepts "cs4", "IS4", "gs4c", "GS4^c", ... (case-insensitive).
std::optional<Logic> parse_logic(std::string_view text);
FrameClass frame_class_of(Logic l);

// A finite birelational model (W, W_bot, pre, mod, V).
//
// `pre` is the intuitionistic preorder and `mod` the modal relation. Relations
// are stored exactly as given; nothing is closed or repaired implicitly.
// A variable without a `val` entry denotes the least admissible valuation,
// i.e. exactly the fallible worlds.
struct BirelationalModel {
  std::vector<std::string> names;
  WorldSet fallible;
  Relation pre;
  Relation mod;
  std::map<std::string, WorldSet> val;

  BirelationalModel() = default;
  explicit BirelationalModel(std::size_t n);

  std::size_t size() const noexcept { return names.size(); }
  WorldSet valuation(const std::string& prop) const;
  std::optional<std::size_t> find_world(std::string_view name) const;
};

// A frame is a model whose valuation is irrelevant.
using Frame = BirelationalModel;

// --- well-formedness -------------------------------------------------------

enum class ModelGrade { Invalid, Birelational, BiIntuitionistic };

struct Violation {
  std::string code;     // e.g. "pre-reflexive", "val-up-closed"
  std::string message;  // human readable, uses world names
  std::vector<std::size_t> witness;
};

struct WellFormedReport {
  ModelGrade grade = ModelGrade::Invalid;
  std::vector<Violation> violations;  // hard failures
  std::vector<Violation> notes;       // e.g. mod not a preorder (grade drops to birelational)

  bool ok() const noexcept { return violations.empty(); }
  bool frame_ok() const noexcept;  // no violation that concerns the frame itself
};

WellFormedReport well_formed(const BirelationalModel& m);

// Throws ModelError listing the violations unless m is a bi-intuitionistic model.
void require_bi_intuitionistic(const BirelationalModel& m);

// --- frame properties ------------------------------------------------------

struct PropertyCheck {
  bool holds = true;
  std::vector<std::size_t> witness;  // meaning depends on the property, see below

  explicit operator bool() const noexcept { return holds; }
};

// Witness layouts on failure:
//   pre_preorder / mod_preorder : (a) not reflexive, or (a, b, c) with a-b, b-c, not a-c
//   forth_up        : (w, w', v)   w <= w', w mod v, no v' >= v with w' mod v'
//   back_up         : (w, v, v')   w mod v <= v', no w' >= w with w' mod v'
//   forth_down      : (w, v, v')   w <= v mod v', no w' with w mod w' <= v'
//   upward_linear   : (w, u, v)    w <= u, w <= v, u and v incomparable
//   downward_linear : (w, u, v)    u <= w, v <= w, u and v incomparable
//   pointwise_convex: (u, v1, w, v2) u mod v1, u mod v2, v1 <= w <= v2, not u mod w
//   infallible      : (f)          a fallible world
struct FrameProperties {
  PropertyCheck pre_preorder;
  PropertyCheck mod_preorder;
  PropertyCheck forth_up;
  PropertyCheck back_up;
  PropertyCheck forth_down;
  PropertyCheck upward_linear;
  PropertyCheck downward_linear;
  PropertyCheck pointwise_convex;
  PropertyCheck infallible;
};

FrameProperties frame_properties(const BirelationalModel& m);

// Confluence of an arbitrary relation r with respect to the preorder `pre`.
// Each returns a witness tuple in the layout above, or nothing if r is confluent.
std::optional<std::vector<std::size_t>> forth_up_violation(const Relation& pre, const Relation& r);
std::optional<std::vector<std::size_t>> back_up_violation(const Relation& pre, const Relation& r);
std::optional<std::vector<std::size_t>> forth_down_violation(const Relation& pre, const Relation& r);
std::optional<std::vector<std::size_t>> pointwise_convex_violation(const Relation& pre,
                                                                   const Relation& r);
std::optional<std::vector<std::size_t>> upward_linear_violation(const Relation& pre);
std::optional<std::vector<std::size_t>> downward_linear_violation(const Relation& pre);

// Frame classes determined by a property record, for a frame whose fallible
// set is closed under both relations.
std::set<FrameClass> classes_from(const FrameProperties& props);

// Throws PreconditionError("not a frame: ...") when pre is not a preorder or
// the fallible set is not closed under both relations.
std::set<FrameClass> classify(const BirelationalModel& m);

bool in_class(const BirelationalModel& m, FrameClass c);

}  // namespace birel
