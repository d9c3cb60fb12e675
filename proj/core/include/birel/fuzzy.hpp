#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "birel/formula.hpp"

namespace birel {

// Compare against Rational operands only: with Boost 1.74 in C++20 the mixed
// rational/int comparison operators recurse without end.
using Rational = boost::rational<std::int64_t>;

// Parses "n/d" or an integer "n". Throws std::invalid_argument on bad input.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// Finite real-valued Kripke model with exact rational accessibility and
// atomic values, all in [0,1]. Absent entries are 0, including R(w,w).
struct FuzzyModel {
  std::vector<std::string> names;
  std::vector<std::vector<Rational>> r;                 // n x n
  std::map<std::string, std::vector<Rational>> atoms;  // prop -> per-world value

  FuzzyModel() = default;
  explicit FuzzyModel(std::size_t n);

  std::size_t size() const noexcept { return names.size(); }
  Rational atom(const std::string& prop, std::size_t w) const;
};

// Throws ModelError if a value lies outside [0,1] or the shape is wrong.
void validate(const FuzzyModel& m);

// Goedel valuation; one value per world.
std::vector<Rational> fuzzy_eval(const FuzzyModel& m, const Formula& f);

struct FuzzyFrameReport {
  bool reflexive = true;
  bool transitive = true;
  bool crisp = true;
  std::vector<std::size_t> reflexive_witness;   // (w) with R(w,w) < 1
  std::vector<std::size_t> transitive_witness;  // (u,v,w) with R(u,w) < min(R(u,v), R(v,w))
  std::vector<std::size_t> crisp_witness;       // (a,b) with R(a,b) not in {0,1}
};

FuzzyFrameReport fuzzy_frame_check(const FuzzyModel& m);

// A world where every premise takes value 1 and f does not.
std::optional<std::size_t> fuzzy_local_consequence(const FuzzyModel& m,
                                                   const std::vector<Formula>& premises,
                                                   const Formula& f);

// `fuzzy v1` format: world <name> / r <a> <b> <q> / val <prop> <name> <q>.
FuzzyModel parse_fuzzy_model(std::string_view text);
FuzzyModel load_fuzzy_model(const std::string& path);
std::string write_fuzzy_model(const FuzzyModel& m);

}  // namespace birel
