#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "birel/formula.hpp"
#include "birel/model.hpp"
#include "birel/transform.hpp"

namespace birel {

inline constexpr std::size_t kDefaultExhaustiveCap = 3;
inline constexpr std::size_t kDefaultSampledCap = 6;

// BIRELLAB_CAP_WORLDS if set to a positive integer, else the default.
std::size_t exhaustive_cap();
std::size_t sampled_cap();

// All preorders on n labelled points, each exactly once, ordered by the bit
// pattern of the adjacency matrix (identity first).
const std::vector<Relation>& enumerate_preorders(std::size_t n);

// Calls visit for every frame on n worlds in class c, in enumeration order:
// pre, then mod, then fallible set. Return false from visit to stop.
// Frames carry no valuation. Throws CapExceeded when n exceeds exhaustive_cap().
void enumerate_frames(std::size_t n, FrameClass c, bool fallible_allowed,
                      const std::function<bool(const Frame&)>& visit);
std::vector<Frame> enumerate_frames(std::size_t n, FrameClass c, bool fallible_allowed = true);

// Every assignment of a pre-up-closed superset of the fallible set to each prop.
// Sets are tried in increasing bit-pattern order, the last prop varying fastest.
void enumerate_valuations(const Frame& frame, const std::vector<std::string>& props,
                          const std::function<bool(const BirelationalModel&)>& visit);
std::vector<BirelationalModel> enumerate_valuations(const Frame& frame,
                                                    const std::vector<std::string>& props);

struct SearchOptions {
  enum class Mode { Exhaustive, Sampled };
  Mode mode = Mode::Exhaustive;
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

struct SearchResult {
  enum class Status { Found, NoneUpToBound, NoneFound };
  Status status = Status::NoneUpToBound;
  std::optional<BirelationalModel> model;
  std::size_t world = 0;
  std::size_t max_worlds = 0;
  SearchOptions options;
  std::size_t models_checked = 0;

  bool found() const noexcept { return status == Status::Found; }
};

std::string to_string(SearchResult::Status s);

// A model of class c with a world outside eval(f).
SearchResult find_countermodel(const Formula& f, FrameClass c, std::size_t max_worlds,
                               const SearchOptions& opts = {});
// A model of class c with an infallible world in eval(f).
SearchResult find_satisfying(const Formula& f, FrameClass c, std::size_t max_worlds,
                             const SearchOptions& opts = {});
// A model of class c with an infallible world forcing every premise but not f.
SearchResult check_entailment_bounded(const std::vector<Formula>& premises, const Formula& f,
                                      FrameClass c, std::size_t max_worlds,
                                      const SearchOptions& opts = {});

// Every countermodel on exactly n worlds, with its first falsifying world.
std::vector<std::pair<BirelationalModel, std::size_t>> all_countermodels(const Formula& f, FrameClass c,
                                                                      std::size_t n);

// (s+1) * 2^(s(s+1)+1) with s the size of the subformula closure of f.
BigNat complete_bound(const Formula& f);

// Brute-force isomorphism over all permutations; compares pre, mod, fallible
// and the valuation of every proposition named in either model.
bool isomorphic(const BirelationalModel& a, const BirelationalModel& b);

}  // namespace birel
