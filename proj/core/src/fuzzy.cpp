#include "birel/fuzzy.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "birel/errors.hpp"
#include "birel/model_io.hpp"

namespace birel {

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  return v;
}

const Rational kZero{0};
const Rational kOne{1};

bool in_unit(const Rational& q) { return q >= kZero && q <= kOne; }

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t num = parse_int(text.substr(0, slash));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

FuzzyModel::FuzzyModel(std::size_t n) : r(n, std::vector<Rational>(n, kZero)) {
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
}

Rational FuzzyModel::atom(const std::string& prop, std::size_t w) const {
  auto it = atoms.find(prop);
  return it == atoms.end() ? kZero : it->second[w];
}

void validate(const FuzzyModel& m) {
  const std::size_t n = m.size();
  if (m.r.size() != n) throw ModelError("fuzzy model: R has wrong number of rows");
  for (std::size_t a = 0; a < n; ++a) {
    if (m.r[a].size() != n) throw ModelError("fuzzy model: R row has wrong length");
    for (std::size_t b = 0; b < n; ++b)
      if (!in_unit(m.r[a][b]))
        throw ModelError("fuzzy model: R(" + m.names[a] + "," + m.names[b] + ") = " +
                         to_string(m.r[a][b]) + " outside [0,1]");
  }
  for (const auto& [p, vals] : m.atoms) {
    if (vals.size() != n) throw ModelError("fuzzy model: valuation of " + p + " has wrong length");
    for (std::size_t w = 0; w < n; ++w)
      if (!in_unit(vals[w]))
        throw ModelError("fuzzy model: V(" + p + "," + m.names[w] + ") outside [0,1]");
  }
}

namespace {

Rational goedel_implies(const Rational& a, const Rational& b) { return a <= b ? kOne : b; }

class FuzzyEvaluator {
 public:
  explicit FuzzyEvaluator(const FuzzyModel& m) : m_(m) {}

  const std::vector<Rational>& eval(const Formula& f) {
    if (auto it = cache_.find(f); it != cache_.end()) return it->second;
    const std::size_t n = m_.size();
    std::vector<Rational> out(n, kZero);
    switch (f.kind()) {
      case Formula::Kind::Var:
        for (std::size_t w = 0; w < n; ++w) out[w] = m_.atom(f.name(), w);
        break;
      case Formula::Kind::Bottom:
        break;
      case Formula::Kind::And: {
        const auto a = eval(f.lhs());
        const auto& b = eval(f.rhs());
        for (std::size_t w = 0; w < n; ++w) out[w] = std::min(a[w], b[w]);
        break;
      }
      case Formula::Kind::Or: {
        const auto a = eval(f.lhs());
        const auto& b = eval(f.rhs());
        for (std::size_t w = 0; w < n; ++w) out[w] = std::max(a[w], b[w]);
        break;
      }
      case Formula::Kind::Implies: {
        const auto a = eval(f.lhs());
        const auto& b = eval(f.rhs());
        for (std::size_t w = 0; w < n; ++w) out[w] = goedel_implies(a[w], b[w]);
        break;
      }
      case Formula::Kind::Dia: {
        const auto& a = eval(f.arg());
        for (std::size_t w = 0; w < n; ++w) {
          Rational best = kZero;
          for (std::size_t v = 0; v < n; ++v) best = std::max(best, std::min(m_.r[w][v], a[v]));
          out[w] = best;
        }
        break;
      }
      case Formula::Kind::Box: {
        const auto& a = eval(f.arg());
        for (std::size_t w = 0; w < n; ++w) {
          Rational worst = kOne;
          for (std::size_t v = 0; v < n; ++v) worst = std::min(worst, goedel_implies(m_.r[w][v], a[v]));
          out[w] = worst;
        }
        break;
      }
    }
    return cache_.emplace(f, std::move(out)).first->second;
  }

 private:
  const FuzzyModel& m_;
  std::unordered_map<Formula, std::vector<Rational>, FormulaHash> cache_;
};

}  // namespace

std::vector<Rational> fuzzy_eval(const FuzzyModel& m, const Formula& f) {
  validate(m);
  return FuzzyEvaluator(m).eval(f);
}

FuzzyFrameReport fuzzy_frame_check(const FuzzyModel& m) {
  FuzzyFrameReport rep;
  const std::size_t n = m.size();
  for (std::size_t w = 0; w < n && rep.reflexive; ++w)
    if (m.r[w][w] != kOne) {
      rep.reflexive = false;
      rep.reflexive_witness = {w};
    }
  for (std::size_t u = 0; u < n && rep.transitive; ++u)
    for (std::size_t v = 0; v < n && rep.transitive; ++v)
      for (std::size_t w = 0; w < n && rep.transitive; ++w)
        if (m.r[u][w] < std::min(m.r[u][v], m.r[v][w])) {
          rep.transitive = false;
          rep.transitive_witness = {u, v, w};
        }
  for (std::size_t a = 0; a < n && rep.crisp; ++a)
    for (std::size_t b = 0; b < n && rep.crisp; ++b)
      if (m.r[a][b] != kZero && m.r[a][b] != kOne) {
        rep.crisp = false;
        rep.crisp_witness = {a, b};
      }
  return rep;
}

std::optional<std::size_t> fuzzy_local_consequence(const FuzzyModel& m,
                                                   const std::vector<Formula>& premises,
                                                   const Formula& f) {
  validate(m);
  FuzzyEvaluator ev(m);
  for (std::size_t w = 0; w < m.size(); ++w) {
    bool premises_hold = std::all_of(premises.begin(), premises.end(),
                                     [&](const Formula& g) { return ev.eval(g)[w] == kOne; });
    if (premises_hold && ev.eval(f)[w] != kOne) return w;
  }
  return std::nullopt;
}

FuzzyModel parse_fuzzy_model(std::string_view text) {
  FuzzyModel m;
  struct Entry {
    std::size_t line;
    std::vector<std::string> words;
  };
  std::vector<Entry> entries;
  bool seen_header = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> words;
    for (std::string w; ls >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (!seen_header) {
      if (words != std::vector<std::string>{"fuzzy", "v1"})
        throw FormatError(lineno, "expected header 'fuzzy v1'");
      seen_header = true;
      continue;
    }
    if (words[0] == "world") {
      if (words.size() != 2) throw FormatError(lineno, "usage: world <name>");
      if (std::find(m.names.begin(), m.names.end(), words[1]) != m.names.end())
        throw FormatError(lineno, "duplicate world '" + words[1] + "'");
      m.names.push_back(words[1]);
    } else if (words[0] == "r" || words[0] == "val") {
      entries.push_back({lineno, std::move(words)});
    } else {
      throw FormatError(lineno, "unknown directive '" + words[0] + "'");
    }
  }
  if (!seen_header) throw FormatError(lineno, "missing header 'fuzzy v1'");

  const std::size_t n = m.names.size();
  m.r.assign(n, std::vector<Rational>(n, kZero));
  std::vector<std::vector<bool>> r_set(n, std::vector<bool>(n, false));
  std::map<std::string, std::vector<bool>> v_set;
  auto world = [&](const std::string& name, std::size_t line) {
    auto it = std::find(m.names.begin(), m.names.end(), name);
    if (it == m.names.end()) throw FormatError(line, "unknown world '" + name + "'");
    return static_cast<std::size_t>(it - m.names.begin());
  };
  auto value = [](const std::string& s, std::size_t line) {
    Rational q;
    try {
      q = parse_rational(s);
    } catch (const std::exception& e) {
      throw FormatError(line, e.what());
    }
    if (!in_unit(q)) throw FormatError(line, "value " + s + " outside [0,1]");
    return q;
  };
  for (const auto& [line, w] : entries) {
    if (w[0] == "r") {
      if (w.size() != 4) throw FormatError(line, "usage: r <a> <b> <num>/<den>");
      auto a = world(w[1], line), b = world(w[2], line);
      Rational q = value(w[3], line);
      if (r_set[a][b] && m.r[a][b] != q) throw FormatError(line, "conflicting r entry");
      m.r[a][b] = q;
      r_set[a][b] = true;
    } else {
      if (w.size() != 4) throw FormatError(line, "usage: val <prop> <name> <num>/<den>");
      if (!is_identifier(w[1])) throw FormatError(line, "invalid proposition name '" + w[1] + "'");
      auto x = world(w[2], line);
      Rational q = value(w[3], line);
      auto& vals = m.atoms.try_emplace(w[1], n, kZero).first->second;
      auto& seen = v_set.try_emplace(w[1], n, false).first->second;
      if (seen[x] && vals[x] != q) throw FormatError(line, "conflicting val entry");
      vals[x] = q;
      seen[x] = true;
    }
  }
  return m;
}

FuzzyModel load_fuzzy_model(const std::string& path) { return parse_fuzzy_model(read_file(path)); }

std::string write_fuzzy_model(const FuzzyModel& m) {
  std::ostringstream out;
  out << "fuzzy v1\n";
  for (const auto& name : m.names) out << "world " << name << '\n';
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b)
      if (m.r[a][b] != kZero) out << "r " << m.names[a] << ' ' << m.names[b] << ' ' << to_string(m.r[a][b]) << '\n';
  for (const auto& [p, vals] : m.atoms)
    for (std::size_t w = 0; w < m.size(); ++w)
      if (vals[w] != kZero) out << "val " << p << ' ' << m.names[w] << ' ' << to_string(vals[w]) << '\n';
  return out.str();
}

}  // namespace birel
