#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "birel/formula.hpp"
#include "birel/model.hpp"

namespace birel {

// Σ-label of a world. Bit i refers to sigma[i].
//   plus : formulas forced at w
//   dia  : formulas forced at no mod-successor of w
// `fallible` records whether w itself is fallible; bisimulations here never
// identify a fallible world with an infallible one.
struct SigmaLabel {
  boost::dynamic_bitset<> plus;
  boost::dynamic_bitset<> dia;
  bool fallible = false;

  friend bool operator==(const SigmaLabel&, const SigmaLabel&) = default;
  friend bool operator<(const SigmaLabel& a, const SigmaLabel& b);
};

// Partition of 0..n-1. Class ids are dense and numbered by smallest member.
class Equivalence {
 public:
  Equivalence() = default;
  // Renumbers arbitrary keys into canonical class ids.
  explicit Equivalence(const std::vector<std::size_t>& keys);
  static Equivalence identity(std::size_t n);
  // Throws PreconditionError unless r is an equivalence relation.
  static Equivalence from_relation(const Relation& r);

  std::size_t size() const noexcept { return class_of_.size(); }
  std::size_t num_classes() const noexcept { return num_classes_; }
  std::size_t class_of(std::size_t w) const { return class_of_[w]; }
  const std::vector<std::size_t>& classes() const noexcept { return class_of_; }
  std::vector<std::size_t> members(std::size_t c) const;
  Relation as_relation() const;

  friend bool operator==(const Equivalence&, const Equivalence&) = default;

 private:
  std::vector<std::size_t> class_of_;
  std::size_t num_classes_ = 0;
};

// Throws PreconditionError if sigma is not subformula-closed and ModelError
// if m is not a bi-intuitionistic model.
std::vector<SigmaLabel> compute_labels(const BirelationalModel& m, const std::vector<Formula>& sigma);

Equivalence greatest_bisimulation(const BirelationalModel& m, const std::vector<Formula>& sigma,
                                  bool strong);

struct BisimCheck {
  bool holds = true;
  std::string reason;                // "label", "forth-up", "back-up", "forth-down", "forth-down-converse"
  std::vector<std::size_t> witness;  // (a, b) for label; confluence tuple otherwise

  explicit operator bool() const noexcept { return holds; }
};

BisimCheck check_bisimulation(const BirelationalModel& m, const std::vector<Formula>& sigma,
                              const Relation& z, bool strong);

struct Quotient {
  BirelationalModel model;
  std::vector<std::size_t> projection;  // world -> class
};

// Throws PreconditionError unless e is a Σ-bisimulation on m.
Quotient quotient(const BirelationalModel& m, const Equivalence& e, const std::vector<Formula>& sigma);

// Equivalence by equal (label, labels of comparable worlds). Requires pre to be
// both upward and downward linear; throws PreconditionError with a witness otherwise.
Equivalence linear_strong_equivalence(const BirelationalModel& m, const std::vector<Formula>& sigma);

}  // namespace birel
