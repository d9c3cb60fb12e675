#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace birel {

// A set of worlds of a finite model, indexed 0..n-1.
using WorldSet = boost::dynamic_bitset<unsigned long long>;

WorldSet empty_set(std::size_t n);
WorldSet full_set(std::size_t n);
WorldSet singleton(std::size_t n, std::size_t w);
std::vector<std::size_t> members(const WorldSet& s);

template <typename F>
void for_each_member(const WorldSet& s, F&& f) {
  for (auto i = s.find_first(); i != WorldSet::npos; i = s.find_next(i)) f(i);
}

// Binary relation on n worlds stored as one successor bitset per row.
// There is no hard world cap; rows grow with n.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : rows_(n, WorldSet(n)) {}
  Relation(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> edges);

  static Relation identity(std::size_t n);
  static Relation full(std::size_t n);

  std::size_t size() const noexcept { return rows_.size(); }

  bool test(std::size_t a, std::size_t b) const { return rows_[a].test(b); }
  void set(std::size_t a, std::size_t b, bool value = true) { rows_[a].set(b, value); }

  const WorldSet& successors(std::size_t a) const { return rows_[a]; }
  WorldSet& successors(std::size_t a) { return rows_[a]; }

  // Union of the successor sets of every member of s.
  WorldSet image(const WorldSet& s) const;
  // Worlds with at least one successor in s.
  WorldSet preimage(const WorldSet& s) const;

  Relation transpose() const;
  std::size_t edge_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  Relation& operator|=(const Relation& other);
  Relation& operator&=(const Relation& other);

  friend bool operator==(const Relation& a, const Relation& b) { return a.rows_ == b.rows_; }
  friend Relation operator|(Relation a, const Relation& b) { return a |= b; }
  friend Relation operator&(Relation a, const Relation& b) { return a &= b; }

 private:
  std::vector<WorldSet> rows_;
};

class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// x (r;s) y iff exists z: x r z and z s y.
Relation compose(const Relation& r, const Relation& s);
Relation transitive_closure(const Relation& r);
Relation reflexive_transitive_closure(const Relation& r);

bool is_reflexive(const Relation& r);
bool is_transitive(const Relation& r);
bool is_preorder(const Relation& r);

// Up-closure of s under r (s together with everything reachable by r*).
WorldSet up_closure(const Relation& r, const WorldSet& s);
bool is_up_closed(const Relation& r, const WorldSet& s);

}  // namespace birel
