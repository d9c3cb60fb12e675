#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace birel {

// Formulas of the intuitionistic modal language:
//
//   phi ::= p | false | phi & phi | phi | phi | phi -> phi | <>phi | []phi
//
// Negation, `true` and `<->` exist only as surface syntax and are desugared by
// the parser. A Formula is an immutable handle to a shared tree; copying is
// cheap and values may be shared freely between threads.
class Formula {
 public:
  enum class Kind : unsigned char { Var, Bottom, And, Or, Implies, Dia, Box };

  static Formula var(std::string name);
  static Formula bottom();
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula dia(Formula arg);
  static Formula box(Formula arg);

  // Derived forms, built the way the parser desugars them.
  static Formula top();                          // false -> false
  static Formula neg(Formula arg);               // arg -> false
  static Formula iff(Formula lhs, Formula rhs);  // (l -> r) & (r -> l)

  Kind kind() const noexcept;
  bool is(Kind k) const noexcept { return kind() == k; }
  bool is_binary() const noexcept;
  bool is_modal() const noexcept;

  // Only valid for Var.
  const std::string& name() const;
  // Binary connectives.
  const Formula& lhs() const;
  const Formula& rhs() const;
  // Dia / Box.
  const Formula& arg() const;

  // Number of AST nodes.
  std::size_t size() const noexcept;
  std::size_t depth() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Kind kind, std::string name, std::optional<Formula> lhs,
                      std::optional<Formula> rhs);

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

using Substitution = std::map<std::string, Formula>;

// Error raised by the formula parser; column is 1-based.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t column, const std::string& message);
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t column_;
  std::string detail_;
};

Formula parse(std::string_view text);

// Minimal-parenthesis printing; parse(print(f)) == f.
std::string print(const Formula& f);

// Smallest subformula-closed set containing f, in post-order of first
// occurrence (children before parents, duplicates dropped).
std::vector<Formula> subformula_closure(const Formula& f);
std::vector<Formula> subformula_closure(const std::vector<Formula>& roots);
bool is_subformula_closed(const std::vector<Formula>& sigma);

// Propositional variables, sorted by name.
std::vector<std::string> variables(const Formula& f);

// Simultaneous replacement of variables in dom(sigma).
Formula substitute(const Formula& schema, const Substitution& sigma);

// One-way matching: variables of the schema bind, the candidate is ground.
std::optional<Substitution> match_schema(const Formula& schema, const Formula& candidate);

// Right-folded conjunction/disjunction; the empty conjunction is `true`
// (false -> false) and the empty disjunction is `false`.
Formula big_conj(const std::vector<Formula>& fs);
Formula big_disj(const std::vector<Formula>& fs);

}  // namespace birel

template <>
struct std::hash<birel::Formula> {
  std::size_t operator()(const birel::Formula& f) const noexcept { return f.hash(); }
};
