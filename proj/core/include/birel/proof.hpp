#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "birel/formula.hpp"
#include "birel/model.hpp"

namespace birel {

enum class AxiomName { K_BOX, K_DIA, T_BOX, T_DIA, FOUR_BOX, FOUR_DIA, DP, FS2, CD, N, GD };

inline constexpr AxiomName kAllAxioms[] = {AxiomName::K_BOX, AxiomName::K_DIA, AxiomName::T_BOX,
                                           AxiomName::T_DIA, AxiomName::FOUR_BOX, AxiomName::FOUR_DIA,
                                           AxiomName::DP, AxiomName::FS2, AxiomName::CD,
                                           AxiomName::N, AxiomName::GD};

std::string to_string(AxiomName a);
std::optional<AxiomName> parse_axiom_name(std::string_view text);
const Formula& schema(AxiomName a);
std::set<AxiomName> logic_axioms(Logic l);

// Intuitionistic propositional validity, with maximal modal subformulas read
// as atoms. Contraction-free sequent search.
bool ipc_decide(const Formula& f);

struct ProofLine {
  enum class Rule { Axiom, Taut, MP, Nec };
  Formula formula = Formula::bottom();
  Rule rule = Rule::Taut;
  AxiomName axiom = AxiomName::K_BOX;  // Axiom only
  std::size_t first = 0;               // 1-based; MP implication line, Nec premise
  std::size_t second = 0;              // 1-based; MP antecedent line
};

struct Proof {
  Logic logic = Logic::CS4;
  std::vector<ProofLine> lines;
};

struct ProofCheck {
  bool accepted = true;
  std::size_t line = 0;  // 1-based, first failing line
  std::string reason;

  explicit operator bool() const noexcept { return accepted; }
};

ProofCheck check_proof(const Proof& pr);

// Accepts iff the proof checks and concludes big_conj(gamma) -> big_disj(delta).
ProofCheck check_entailment_certificate(const std::vector<Formula>& gamma, const std::vector<Formula>& delta,
                                        const Proof& pr);

// `proof v1` / `logic L` / `<index> <rule> [args] :: <formula>` lines.
Proof parse_proof(std::string_view text);
Proof load_proof(const std::string& path);
std::string write_proof(const Proof& pr);

}  // namespace birel
