#include "birel/proof.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "birel/errors.hpp"
#include "birel/model_io.hpp"

namespace birel {

namespace {

struct AxiomInfo {
  AxiomName name;
  const char* text;
  const char* schema;
};

const AxiomInfo kAxiomTable[] = {
    {AxiomName::K_BOX, "K_BOX", "[](p -> q) -> ([]p -> []q)"},
    {AxiomName::K_DIA, "K_DIA", "[](p -> q) -> (<>p -> <>q)"},
    {AxiomName::T_BOX, "T_BOX", "[]p -> p"},
    {AxiomName::T_DIA, "T_DIA", "p -> <>p"},
    {AxiomName::FOUR_BOX, "FOUR_BOX", "[]p -> [][]p"},
    {AxiomName::FOUR_DIA, "FOUR_DIA", "<><>p -> <>p"},
    {AxiomName::DP, "DP", "<>(p | q) -> <>p | <>q"},
    {AxiomName::FS2, "FS2", "(<>p -> []q) -> [](p -> q)"},
    {AxiomName::CD, "CD", "[](p | q) -> []p | <>q"},
    {AxiomName::N, "N", "~<>false"},
    {AxiomName::GD, "GD", "(p -> q) | (q -> p)"},
};

const AxiomInfo& info(AxiomName a) { return kAxiomTable[static_cast<std::size_t>(a)]; }

}  // namespace

std::string to_string(AxiomName a) { return info(a).text; }

std::optional<AxiomName> parse_axiom_name(std::string_view text) {
  for (const auto& row : kAxiomTable)
    if (text == row.text) return row.name;
  return std::nullopt;
}

const Formula& schema(AxiomName a) {
  static const std::vector<Formula> parsed = [] {
    std::vector<Formula> out;
    for (const auto& row : kAxiomTable) out.push_back(parse(row.schema));
    return out;
  }();
  return parsed[static_cast<std::size_t>(a)];
}

std::set<AxiomName> logic_axioms(Logic l) {
  std::set<AxiomName> s{AxiomName::K_BOX,    AxiomName::K_DIA, AxiomName::T_BOX,
                        AxiomName::T_DIA,    AxiomName::FOUR_BOX, AxiomName::FOUR_DIA};
  auto add = [&](std::initializer_list<AxiomName> xs) { s.insert(xs); };
  switch (l) {
    case Logic::CS4: break;
    case Logic::IS4: add({AxiomName::DP, AxiomName::N, AxiomName::FS2}); break;
    case Logic::S4I: add({AxiomName::DP, AxiomName::N, AxiomName::CD}); break;
    case Logic::GS4: add({AxiomName::DP, AxiomName::N, AxiomName::FS2, AxiomName::GD}); break;
    case Logic::GS4c: add({AxiomName::DP, AxiomName::N, AxiomName::FS2, AxiomName::GD, AxiomName::CD}); break;
  }
  return s;
}

ProofCheck check_proof(const Proof& pr) {
  const auto available = logic_axioms(pr.logic);
  auto reject = [](std::size_t line, std::string reason) { return ProofCheck{false, line, std::move(reason)}; };
  for (std::size_t k = 0; k < pr.lines.size(); ++k) {
    const ProofLine& ln = pr.lines[k];
    const std::size_t no = k + 1;
    auto earlier = [&](std::size_t ref) { return ref >= 1 && ref < no; };
    switch (ln.rule) {
      case ProofLine::Rule::Axiom:
        if (!available.count(ln.axiom))
          return reject(no, to_string(ln.axiom) + " not available in " + to_string(pr.logic));
        if (!match_schema(schema(ln.axiom), ln.formula))
          return reject(no, "not an instance of " + to_string(ln.axiom));
        break;
      case ProofLine::Rule::Taut:
        if (!ipc_decide(ln.formula)) return reject(no, "not an intuitionistic tautology");
        break;
      case ProofLine::Rule::MP: {
        if (!earlier(ln.first) || !earlier(ln.second))
          return reject(no, "mp must cite earlier lines");
        const Formula& imp = pr.lines[ln.first - 1].formula;
        const Formula& ante = pr.lines[ln.second - 1].formula;
        if (!imp.is(Formula::Kind::Implies))
          return reject(no, "line " + std::to_string(ln.first) + " is not an implication");
        if (!(imp.lhs() == ante))
          return reject(no, "line " + std::to_string(ln.second) + " is not the antecedent of line " +
                                std::to_string(ln.first));
        if (!(imp.rhs() == ln.formula))
          return reject(no, "formula is not the consequent of line " + std::to_string(ln.first));
        break;
      }
      case ProofLine::Rule::Nec:
        if (!earlier(ln.first)) return reject(no, "nec must cite an earlier line");
        if (!(Formula::box(pr.lines[ln.first - 1].formula) == ln.formula))
          return reject(no, "formula is not [] of line " + std::to_string(ln.first));
        break;
    }
  }
  return {};
}

ProofCheck check_entailment_certificate(const std::vector<Formula>& gamma, const std::vector<Formula>& delta,
                                        const Proof& pr) {
  ProofCheck c = check_proof(pr);
  if (!c) return c;
  if (pr.lines.empty()) return {false, 0, "empty proof"};
  const Formula want = Formula::implies(big_conj(gamma), big_disj(delta));
  const Formula& got = pr.lines.back().formula;
  if (!(got == want))
    return {false, pr.lines.size(), "conclusion " + print(got) + " does not match " + print(want)};
  return {};
}

Proof parse_proof(std::string_view text) {
  Proof pr;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  bool header = false, have_logic = false;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string body = raw, formula_text;
    if (auto sep = raw.find("::"); sep != std::string::npos) {
      body = raw.substr(0, sep);
      formula_text = raw.substr(sep + 2);
    }
    std::istringstream ls(body);
    std::vector<std::string> words;
    for (std::string w; ls >> w;) words.push_back(w);
    if (words.empty()) {
      if (formula_text.find_first_not_of(" \t\r") != std::string::npos)
        throw FormatError(lineno, "formula without a rule");
      continue;
    }
    if (!header) {
      if (words != std::vector<std::string>{"proof", "v1"}) throw FormatError(lineno, "expected header 'proof v1'");
      header = true;
      continue;
    }
    if (words[0] == "logic") {
      if (have_logic || words.size() != 2) throw FormatError(lineno, "usage: logic <name>, once");
      auto l = parse_logic(words[1]);
      if (!l) throw FormatError(lineno, "unknown logic '" + words[1] + "'");
      pr.logic = *l;
      have_logic = true;
      continue;
    }
    if (!have_logic) throw FormatError(lineno, "missing 'logic' line");
    auto number = [&](const std::string& s) -> std::size_t {
      if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw FormatError(lineno, "expected a line number, got '" + s + "'");
      return std::stoul(s);
    };
    ProofLine ln;
    if (number(words[0]) != pr.lines.size() + 1)
      throw FormatError(lineno, "expected line index " + std::to_string(pr.lines.size() + 1));
    if (words.size() < 2) throw FormatError(lineno, "missing rule");
    const std::string& rule = words[1];
    auto arity = [&](std::size_t k) {
      if (words.size() != 2 + k) throw FormatError(lineno, rule + " takes " + std::to_string(k) + " argument(s)");
    };
    if (rule == "axiom") {
      arity(1);
      auto a = parse_axiom_name(words[2]);
      if (!a) throw FormatError(lineno, "unknown axiom '" + words[2] + "'");
      ln.rule = ProofLine::Rule::Axiom;
      ln.axiom = *a;
    } else if (rule == "taut") {
      arity(0);
      ln.rule = ProofLine::Rule::Taut;
    } else if (rule == "mp") {
      arity(2);
      ln.rule = ProofLine::Rule::MP;
      ln.first = number(words[2]);
      ln.second = number(words[3]);
    } else if (rule == "nec") {
      arity(1);
      ln.rule = ProofLine::Rule::Nec;
      ln.first = number(words[2]);
    } else {
      throw FormatError(lineno, "unknown rule '" + rule + "'");
    }
    if (raw.find("::") == std::string::npos) throw FormatError(lineno, "missing ':: <formula>'");
    try {
      ln.formula = parse(formula_text);
    } catch (const SyntaxError& e) {
      throw FormatError(lineno, e.what());
    }
    pr.lines.push_back(std::move(ln));
  }
  if (!header) throw FormatError(lineno, "missing header 'proof v1'");
  if (!have_logic) throw FormatError(lineno, "missing 'logic' line");
  return pr;
}

Proof load_proof(const std::string& path) { return parse_proof(read_file(path)); }

std::string write_proof(const Proof& pr) {
  std::ostringstream out;
  out << "proof v1\nlogic " << to_string(pr.logic) << '\n';
  for (std::size_t k = 0; k < pr.lines.size(); ++k) {
    const auto& ln = pr.lines[k];
    out << k + 1 << ' ';
    switch (ln.rule) {
      case ProofLine::Rule::Axiom: out << "axiom " << to_string(ln.axiom); break;
      case ProofLine::Rule::Taut: out << "taut"; break;
      case ProofLine::Rule::MP: out << "mp " << ln.first << ' ' << ln.second; break;
      case ProofLine::Rule::Nec: out << "nec " << ln.first; break;
    }
    out << " :: " << print(ln.formula) << '\n';
  }
  return out.str();
}

}  // namespace birel
