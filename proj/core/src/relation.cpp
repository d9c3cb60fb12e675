#include "birel/relation.hpp"

#include <string>

namespace birel {

WorldSet empty_set(std::size_t n) { return WorldSet(n); }

WorldSet full_set(std::size_t n) {
  WorldSet s(n);
  s.set();
  return s;
}

WorldSet singleton(std::size_t n, std::size_t w) {
  WorldSet s(n);
  s.set(w);
  return s;
}

std::vector<std::size_t> members(const WorldSet& s) {
  std::vector<std::size_t> out;
  out.reserve(s.count());
  for_each_member(s, [&](std::size_t i) { out.push_back(i); });
  return out;
}

Relation::Relation(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> edges)
    : Relation(n) {
  for (auto [a, b] : edges) set(a, b);
}

Relation Relation::identity(std::size_t n) {
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) r.set(i, i);
  return r;
}

Relation Relation::full(std::size_t n) {
  Relation r(n);
  for (auto& row : r.rows_) row.set();
  return r;
}

WorldSet Relation::image(const WorldSet& s) const {
  WorldSet out(size());
  for_each_member(s, [&](std::size_t i) { out |= rows_[i]; });
  return out;
}

WorldSet Relation::preimage(const WorldSet& s) const {
  WorldSet out(size());
  for (std::size_t i = 0; i < size(); ++i)
    if (rows_[i].intersects(s)) out.set(i);
  return out;
}

Relation Relation::transpose() const {
  Relation t(size());
  for (std::size_t a = 0; a < size(); ++a)
    for_each_member(rows_[a], [&](std::size_t b) { t.set(b, a); });
  return t;
}

std::size_t Relation::edge_count() const {
  std::size_t c = 0;
  for (const auto& row : rows_) c += row.count();
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for_each_member(rows_[a], [&](std::size_t b) { out.emplace_back(a, b); });
  return out;
}

Relation& Relation::operator|=(const Relation& other) {
  if (other.size() != size()) throw SizeMismatch("relation union: size mismatch");
  for (std::size_t i = 0; i < size(); ++i) rows_[i] |= other.rows_[i];
  return *this;
}

Relation& Relation::operator&=(const Relation& other) {
  if (other.size() != size()) throw SizeMismatch("relation intersection: size mismatch");
  for (std::size_t i = 0; i < size(); ++i) rows_[i] &= other.rows_[i];
  return *this;
}

Relation compose(const Relation& r, const Relation& s) {
  if (r.size() != s.size())
    throw SizeMismatch("compose: sizes " + std::to_string(r.size()) + " and " +
                       std::to_string(s.size()) + " differ");
  Relation out(r.size());
  for (std::size_t x = 0; x < r.size(); ++x) out.successors(x) = s.image(r.successors(x));
  return out;
}

Relation transitive_closure(const Relation& r) {
  // Warshall over bitset rows.
  Relation out = r;
  const std::size_t n = r.size();
  for (std::size_t k = 0; k < n; ++k) {
    const WorldSet via = out.successors(k);
    for (std::size_t i = 0; i < n; ++i)
      if (out.test(i, k)) out.successors(i) |= via;
  }
  return out;
}

Relation reflexive_transitive_closure(const Relation& r) {
  return transitive_closure(r | Relation::identity(r.size()));
}

bool is_reflexive(const Relation& r) {
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!r.test(i, i)) return false;
  return true;
}

bool is_transitive(const Relation& r) {
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!r.image(r.successors(i)).is_subset_of(r.successors(i))) return false;
  return true;
}

bool is_preorder(const Relation& r) { return is_reflexive(r) && is_transitive(r); }

WorldSet up_closure(const Relation& r, const WorldSet& s) {
  WorldSet cur = s;
  while (true) {
    WorldSet nxt = cur | r.image(cur);
    if (nxt == cur) return cur;
    cur = std::move(nxt);
  }
}

bool is_up_closed(const Relation& r, const WorldSet& s) { return r.image(s).is_subset_of(s); }

}  // namespace birel
