#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "birel/model.hpp"

namespace birel {

using BigNat = boost::multiprecision::cpp_int;

// R-bar(u, w) iff r(u, v1), r(u, v2) and v1 <= w <= v2 for some v1, v2.
Relation convex_closure(const Relation& pre, const Relation& r);

struct Linearized {
  BirelationalModel model;
  // New world (v, w) with v <= w; index[i] is the pair behind world i.
  std::vector<std::pair<std::size_t, std::size_t>> index;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> lookup;
};

// W' = {(v,w) : v <= w}, (v,w1) <=' (v,w2) iff w1 <= w2, mod' compares second
// coordinates only. Requires a GS4 model.
Linearized linearize_gs4(const BirelationalModel& m);

// As above, but mod'' requires both coordinates to be related. Requires a
// pointwise convex GS4c model.
Linearized linearize_gs4c(const BirelationalModel& m);

struct Depth {
  std::vector<std::size_t> per_world;
  std::size_t model = 0;
};

// Longest strict pre-chain from each world. Requires pre to be a preorder.
Depth depth(const BirelationalModel& m);

inline constexpr std::size_t kDefaultBitCap = std::size_t{1} << 20;

// 2^m_0 = m, 2^m_{k+1} = 2^(2^m_k). Throws CapExceeded when an intermediate
// value would need more than cap_bits bits.
BigNat superexp(const BigNat& m, std::size_t k, std::size_t cap_bits = kDefaultBitCap);

// exp2 applied `height` times to `base`; lets values like 2^16_4 be compared
// without being materialised.
struct Tower {
  std::size_t height = 0;
  BigNat base;
};

// Three-way comparison of the denoted values (-1, 0, 1).
int compare(const Tower& x, const Tower& y, std::size_t cap_bits = kDefaultBitCap);

// 2^m * 2^{(n-1)m}_k <= 2^{nm}_k for k >= 1.
bool superexp_step_inequality(std::size_t m, std::size_t n, std::size_t k,
                              std::size_t cap_bits = kDefaultBitCap);

// (s+1) * 2^(s(s+1)+1).
BigNat quotient_size_bound(std::size_t s);

}  // namespace birel
