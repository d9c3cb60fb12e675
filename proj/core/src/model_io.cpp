#include "birel/model_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace birel {

bool is_identifier(std::string_view s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  for (char c : s)
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')) return false;
  return s != "false" && s != "true";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream ss{std::string(line)};
  std::string w;
  while (ss >> w) out.push_back(w);
  return out;
}

}  // namespace

BirelationalModel parse_model(std::string_view text) {
  BirelationalModel m;
  std::vector<std::pair<std::size_t, std::size_t>> pre_edges, mod_edges;
  std::vector<std::size_t> fallible;
  std::map<std::string, std::vector<std::size_t>> val;
  bool close_pre = false, close_mod = false, seen_header = false;

  auto world = [&](const std::string& name, std::size_t line) {
    auto w = m.find_world(name);
    if (!w) throw FormatError(line, "unknown world '" + name + "'");
    return *w;
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto words = split_words(raw);
    if (words.empty()) continue;
    if (!seen_header) {
      if (words != std::vector<std::string>{"birel", "v1"})
        throw FormatError(lineno, "expected header 'birel v1'");
      seen_header = true;
      continue;
    }
    const std::string& kw = words[0];
    if (kw == "world") {
      if (words.size() != 2) throw FormatError(lineno, "usage: world <name>");
      if (m.find_world(words[1])) throw FormatError(lineno, "duplicate world '" + words[1] + "'");
      m.names.push_back(words[1]);
    } else if (kw == "fallible") {
      if (words.size() != 2) throw FormatError(lineno, "usage: fallible <name>");
      fallible.push_back(world(words[1], lineno));
    } else if (kw == "pre" || kw == "mod") {
      if (words.size() != 3) throw FormatError(lineno, "usage: " + kw + " <a> <b>");
      auto edge = std::pair{world(words[1], lineno), world(words[2], lineno)};
      (kw == "pre" ? pre_edges : mod_edges).push_back(edge);
    } else if (kw == "val") {
      if (words.size() < 2) throw FormatError(lineno, "usage: val <prop> <name> ...");
      if (!is_identifier(words[1]))
        throw FormatError(lineno, "invalid proposition name '" + words[1] + "'");
      auto& ws = val[words[1]];
      for (std::size_t i = 2; i < words.size(); ++i) ws.push_back(world(words[i], lineno));
    } else if (kw == "close") {
      if (words.size() != 2 || (words[1] != "pre" && words[1] != "mod"))
        throw FormatError(lineno, "usage: close pre|mod");
      (words[1] == "pre" ? close_pre : close_mod) = true;
    } else {
      throw FormatError(lineno, "unknown directive '" + kw + "'");
    }
  }
  if (!seen_header) throw FormatError(lineno, "missing header 'birel v1'");

  const std::size_t n = m.names.size();
  m.fallible = WorldSet(n);
  m.pre = Relation(n);
  m.mod = Relation(n);
  for (auto f : fallible) m.fallible.set(f);
  for (auto [a, b] : pre_edges) m.pre.set(a, b);
  for (auto [a, b] : mod_edges) m.mod.set(a, b);
  for (auto& [p, ws] : val) {
    WorldSet s(n);
    for (auto w : ws) s.set(w);
    m.val.emplace(p, std::move(s));
  }
  if (close_pre) m.pre = reflexive_transitive_closure(m.pre);
  if (close_mod) m.mod = reflexive_transitive_closure(m.mod);
  return m;
}

BirelationalModel load_model(const std::string& path) { return parse_model(read_file(path)); }

std::string write_model(const BirelationalModel& m) {
  std::ostringstream out;
  out << "birel v1\n";
  for (const auto& name : m.names) out << "world " << name << '\n';
  for_each_member(m.fallible, [&](std::size_t f) { out << "fallible " << m.names[f] << '\n'; });
  for (auto [a, b] : m.pre.edges()) out << "pre " << m.names[a] << ' ' << m.names[b] << '\n';
  for (auto [a, b] : m.mod.edges()) out << "mod " << m.names[a] << ' ' << m.names[b] << '\n';
  for (const auto& [p, s] : m.val) {
    out << "val " << p;
    for_each_member(s, [&](std::size_t w) { out << ' ' << m.names[w]; });
    out << '\n';
  }
  return out.str();
}

}  // namespace birel
