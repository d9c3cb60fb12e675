// birellab: command-line front end.
//
// Exit codes: 0 answered, 1 countermodel / witness / rejection found,
// 2 input error, 3 cap exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "birel/bisim.hpp"
#include "birel/errors.hpp"
#include "birel/formula.hpp"
#include "birel/fuzzy.hpp"
#include "birel/model.hpp"
#include "birel/model_io.hpp"
#include "birel/proof.hpp"
#include "birel/search.hpp"
#include "birel/semantics.hpp"
#include "birel/transform.hpp"

using namespace birel;

namespace {

enum Exit { kAnswered = 0, kFound = 1, kInputError = 2, kCapExceeded = 3 };

// Reported as exit 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Formula read_formula(const std::string& text) {
  try {
    return parse(text);
  } catch (const SyntaxError& e) {
    throw InputError(e.what());
  }
}

Logic read_logic(const std::string& text) {
  auto l = parse_logic(text);
  if (!l) throw InputError("unknown logic '" + text + "'");
  return *l;
}

std::string tuple(const BirelationalModel& m, const std::vector<std::size_t>& ws) {
  std::string out;
  for (auto w : ws) out += (out.empty() ? "" : " ") + m.names[w];
  return "(" + out + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_parse(const std::string& text) {
  std::cout << print(read_formula(text)) << '\n';
  return kAnswered;
}

int cmd_check_model(const std::string& path) {
  BirelationalModel m = load_model(path);
  WellFormedReport rep = well_formed(m);
  const char* grade = rep.grade == ModelGrade::BiIntuitionistic ? "bi-intuitionistic"
                      : rep.grade == ModelGrade::Birelational  ? "birelational"
                                                               : "invalid";
  std::cout << "well-formed: " << yes_no(rep.ok()) << " (" << grade << ")\n";
  for (const auto& v : rep.violations) std::cout << "  violation " << v.code << ": " << v.message << '\n';
  for (const auto& v : rep.notes) std::cout << "  note " << v.code << ": " << v.message << '\n';
  if (!rep.frame_ok()) return kAnswered;
  FrameProperties p = frame_properties(m);
  auto line = [&](const char* name, const PropertyCheck& c) {
    std::cout << name << ": " << yes_no(c.holds);
    if (!c.holds) std::cout << ' ' << tuple(m, c.witness);
    std::cout << '\n';
  };
  line("pre_preorder", p.pre_preorder);
  line("mod_preorder", p.mod_preorder);
  line("forth_up", p.forth_up);
  line("back_up", p.back_up);
  line("forth_down", p.forth_down);
  line("upward_linear", p.upward_linear);
  line("downward_linear", p.downward_linear);
  line("pointwise_convex", p.pointwise_convex);
  line("infallible", p.infallible);
  std::cout << "classes:";
  for (FrameClass c : classify(m)) std::cout << ' ' << to_string(c);
  std::cout << '\n';
  return kAnswered;
}

int cmd_eval(const std::string& path, const std::string& text) {
  BirelationalModel m = load_model(path);
  Formula f = read_formula(text);
  WorldSet truth = eval(m, f);
  for (std::size_t w = 0; w < m.size(); ++w) std::cout << m.names[w] << ' ' << (truth.test(w) ? 1 : 0) << '\n';
  return kAnswered;
}

int cmd_fuzzy_eval(const std::string& path, const std::string& text) {
  FuzzyModel m = load_fuzzy_model(path);
  Formula f = read_formula(text);
  auto vals = fuzzy_eval(m, f);
  for (std::size_t w = 0; w < m.size(); ++w) std::cout << m.names[w] << ' ' << to_string(vals[w]) << '\n';
  return kAnswered;
}

int cmd_quotient(const std::string& path, const std::string& text, bool strong) {
  BirelationalModel m = load_model(path);
  auto sigma = subformula_closure(read_formula(text));
  Equivalence e = greatest_bisimulation(m, sigma, strong);
  Quotient q = quotient(m, e, sigma);
  std::cout << "# QUOTIENT classes=" << q.model.size() << " sigma=" << sigma.size()
            << (strong ? " strong" : "") << '\n';
  std::cout << write_model(q.model);
  for (std::size_t w = 0; w < m.size(); ++w)
    std::cout << "# map " << m.names[w] << " -> " << q.model.names[q.projection[w]] << '\n';
  return kAnswered;
}

int cmd_linearize(const std::string& path, const std::string& logic) {
  BirelationalModel m = load_model(path);
  Logic l = read_logic(logic);
  Linearized lin;
  bool convexified = false;
  if (l == Logic::GS4) {
    lin = linearize_gs4(m);
  } else if (l == Logic::GS4c) {
    if (pointwise_convex_violation(m.pre, m.mod)) {
      m.mod = convex_closure(m.pre, m.mod);
      convexified = true;
    }
    lin = linearize_gs4c(m);
  } else {
    throw InputError("linearize supports --logic gs4 or gs4c");
  }
  std::cout << "# LINEARIZED worlds=" << lin.model.size() << (convexified ? " convex-closed" : "") << '\n';
  std::cout << write_model(lin.model);
  for (std::size_t i = 0; i < lin.index.size(); ++i)
    std::cout << "# map " << lin.model.names[i] << " -> (" << m.names[lin.index[i].first] << ", "
              << m.names[lin.index[i].second] << ")\n";
  return kAnswered;
}

struct SearchFlags {
  std::string logic = "cs4";
  std::size_t max_worlds = 3;
  bool exhaustive = false;
  std::size_t sample = 0;
  std::uint64_t seed = 1;
  unsigned jobs = 1;

  SearchOptions options() const {
    SearchOptions o;
    o.jobs = jobs;
    o.seed = seed;
    if (sample > 0 && !exhaustive) {
      o.mode = SearchOptions::Mode::Sampled;
      o.samples = sample;
    }
    return o;
  }
};

void add_search_flags(CLI::App* app, SearchFlags& f) {
  app->add_option("--logic", f.logic, "cs4, is4, s4i, gs4 or gs4c")->required();
  app->add_option("--max-worlds", f.max_worlds, "largest model size to try")->capture_default_str();
  auto* ex = app->add_flag("--exhaustive", f.exhaustive, "enumerate every model (default)");
  auto* sm = app->add_option("--sample", f.sample, "number of random candidates");
  ex->excludes(sm);
  app->add_option("--seed", f.seed, "seed for --sample")->capture_default_str();
  app->add_option("--jobs", f.jobs, "worker threads")->capture_default_str();
}

std::string describe(const SearchResult& r, const std::string& logic) {
  std::ostringstream out;
  out << "logic=" << logic << " max-worlds=" << r.max_worlds << " mode="
      << (r.options.mode == SearchOptions::Mode::Sampled ? "sampled" : "exhaustive");
  if (r.options.mode == SearchOptions::Mode::Sampled) out << " samples=" << r.options.samples << " seed=" << r.options.seed;
  out << " models=" << r.models_checked;
  return out.str();
}

std::string none_verdict(const SearchResult& r, const char* exhaustive_word) {
  return r.status == SearchResult::Status::NoneFound ? "NONE-FOUND" : exhaustive_word;
}

int report(const SearchResult& r, const std::string& logic, const char* found_word, const char* none_word) {
  if (!r.found()) {
    std::cout << none_verdict(r, none_word) << ' ' << describe(r, logic) << '\n';
    return kAnswered;
  }
  std::cout << found_word << " world=" << r.model->names[r.world] << ' ' << describe(r, logic) << '\n';
  std::cout << write_model(*r.model);
  return kFound;
}

int cmd_decide(const std::string& text, const SearchFlags& fl) {
  Formula f = read_formula(text);
  Logic l = read_logic(fl.logic);
  auto r = find_countermodel(f, frame_class_of(l), fl.max_worlds, fl.options());
  return report(r, to_string(l), "COUNTERMODEL", "VALID-UP-TO-BOUND");
}

int cmd_sat(const std::string& text, const SearchFlags& fl) {
  Formula f = read_formula(text);
  Logic l = read_logic(fl.logic);
  auto r = find_satisfying(f, frame_class_of(l), fl.max_worlds, fl.options());
  return report(r, to_string(l), "SATISFIABLE", "NONE-UP-TO-BOUND");
}

std::vector<Formula> read_premises(const std::string& path) {
  std::vector<Formula> out;
  std::istringstream in(read_file(path));
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse(line));
    } catch (const SyntaxError& e) {
      throw InputError(path + ": line " + std::to_string(no) + ": " + e.what());
    }
  }
  return out;
}

int cmd_entail(const std::string& premises, const std::string& text, const SearchFlags& fl) {
  auto gamma = read_premises(premises);
  Formula f = read_formula(text);
  Logic l = read_logic(fl.logic);
  auto r = check_entailment_bounded(gamma, f, frame_class_of(l), fl.max_worlds, fl.options());
  return report(r, to_string(l), "COUNTEREXAMPLE", "NONE-UP-TO-BOUND");
}

int cmd_prove_check(const std::string& path) {
  Proof pr = load_proof(path);
  ProofCheck c = check_proof(pr);
  if (!c) {
    std::cout << "REJECTED line " << c.line << ": " << c.reason << '\n';
    return kFound;
  }
  std::cout << "ACCEPTED logic=" << to_string(pr.logic) << " lines=" << pr.lines.size();
  if (!pr.lines.empty()) std::cout << " :: " << print(pr.lines.back().formula);
  std::cout << '\n';
  return kAnswered;
}

int cmd_bound(const std::string& text) {
  Formula f = read_formula(text);
  std::cout << "sigma " << subformula_closure(f).size() << '\n';
  std::cout << "bound " << complete_bound(f) << '\n';
  return kAnswered;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for intuitionistic modal logics over birelational models"};
  app.require_subcommand(1);

  std::string formula, file, file2, logic, sigma;
  bool strong = false;
  SearchFlags fl;

  auto* parse_cmd = app.add_subcommand("parse", "print the canonical form of a formula");
  parse_cmd->add_option("formula", formula)->required();

  auto* check_cmd = app.add_subcommand("check-model", "well-formedness, frame properties and classes");
  check_cmd->add_option("model", file)->required();

  auto* eval_cmd = app.add_subcommand("eval", "per-world truth table");
  eval_cmd->add_option("model", file)->required();
  eval_cmd->add_option("formula", formula)->required();

  auto* fuzzy_cmd = app.add_subcommand("fuzzy-eval", "per-world Goedel values");
  fuzzy_cmd->add_option("model", file)->required();
  fuzzy_cmd->add_option("formula", formula)->required();

  auto* quot_cmd = app.add_subcommand("quotient", "quotient by the greatest sigma-bisimulation");
  quot_cmd->add_option("model", file)->required();
  quot_cmd->add_option("--sigma", sigma, "sigma is the subformula closure of this formula")->required();
  quot_cmd->add_flag("--strong", strong, "use strong bisimulation");

  auto* lin_cmd = app.add_subcommand("linearize", "downward linearization");
  lin_cmd->add_option("model", file)->required();
  lin_cmd->add_option("--logic", logic, "gs4 or gs4c")->required();

  auto* decide_cmd = app.add_subcommand("decide", "bounded countermodel search");
  decide_cmd->add_option("formula", formula)->required();
  add_search_flags(decide_cmd, fl);

  auto* sat_cmd = app.add_subcommand("sat", "bounded satisfiability search");
  sat_cmd->add_option("formula", formula)->required();
  add_search_flags(sat_cmd, fl);

  auto* entail_cmd = app.add_subcommand("entail", "bounded local consequence search");
  entail_cmd->add_option("--premises", file2, "one formula per line")->required();
  entail_cmd->add_option("formula", formula)->required();
  add_search_flags(entail_cmd, fl);

  auto* proof_cmd = app.add_subcommand("prove-check", "check a Hilbert proof");
  proof_cmd->add_option("proof", file)->required();

  auto* bound_cmd = app.add_subcommand("bound", "subformula count and quotient size bound");
  bound_cmd->add_option("formula", formula)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kAnswered : kInputError;
  }

  try {
    if (*parse_cmd) return cmd_parse(formula);
    if (*check_cmd) return cmd_check_model(file);
    if (*eval_cmd) return cmd_eval(file, formula);
    if (*fuzzy_cmd) return cmd_fuzzy_eval(file, formula);
    if (*quot_cmd) return cmd_quotient(file, sigma, strong);
    if (*lin_cmd) return cmd_linearize(file, logic);
    if (*decide_cmd) return cmd_decide(formula, fl);
    if (*sat_cmd) return cmd_sat(formula, fl);
    if (*entail_cmd) return cmd_entail(file2, formula, fl);
    if (*proof_cmd) return cmd_prove_check(file);
    if (*bound_cmd) return cmd_bound(formula);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
