#include "ura/automata/automaton.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "ura/core/error.hpp"

namespace ura {

bool RegisterAutomaton::is_initial(std::size_t location) const {
  return std::find(initial.begin(), initial.end(), location) != initial.end();
}

bool RegisterAutomaton::is_final(std::size_t location) const {
  return std::find(final.begin(), final.end(), location) != final.end();
}

std::optional<std::size_t> RegisterAutomaton::location_index(std::string_view name) const {
  for (std::size_t i = 0; i < locations.size(); ++i)
    if (locations[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> RegisterAutomaton::symbol_index(std::string_view name) const {
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    if (alphabet[i] == name) return i;
  return std::nullopt;
}

void RegisterAutomaton::validate() const {
  if (registers < 0) throw Error("negative register count");
  for (std::size_t l : initial)
    if (l >= locations.size()) throw Error("initial location out of range");
  for (std::size_t l : final)
    if (l >= locations.size()) throw Error("final location out of range");
  for (const Rule& r : rules) {
    if (r.source >= locations.size() || r.target >= locations.size())
      throw Error("rule location out of range");
    if (r.symbol >= alphabet.size()) throw Error("rule symbol out of range");
    if (r.guard.max_register() > registers) throw Error("rule mentions register beyond dimension");
    if (r.type && r.type->size() != static_cast<std::size_t>(2 * registers + 1))
      throw Error("rule type has wrong arity");
  }
  if (orbitised && std::any_of(rules.begin(), rules.end(), [](const Rule& r) { return !r.type; }))
    throw Error("orbitised automaton has a rule without orbit");
}

std::optional<EqualityType> single_orbit(const Constraint& guard, int registers) {
  auto positions = static_cast<std::size_t>(2 * registers + 1);
  std::vector<bool> bottom_allowed(positions, true);
  bottom_allowed[static_cast<std::size_t>(registers)] = false;
  std::optional<EqualityType> found;
  int count = 0;
  for_each_equality_type(positions, bottom_allowed, [&](const EqualityType& t) {
    if (count > 1) return;
    Valuation rep = t.representative();
    if (guard.holds(rep, registers)) {
      ++count;
      found = t;
    }
  });
  if (count != 1) return std::nullopt;
  return found;
}

void detect_orbits(RegisterAutomaton& a) {
  bool all = true;
  for (Rule& r : a.rules) {
    if (!r.type) r.type = single_orbit(r.guard, a.registers);
    all = all && r.type.has_value();
  }
  a.orbitised = all;
}

namespace {

struct Token {
  std::string text;
  std::size_t column;
  bool quoted;
};

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '"' || c == '#';
  });
}

std::vector<Token> tokenize(const std::string& line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') break;
    if (c == '"') {
      std::size_t end = line.find('"', i + 1);
      if (end == std::string::npos) throw ParseError("unterminated constraint string", line_no, i + 1);
      out.push_back({line.substr(i + 1, end - i - 1), i + 1, true});
      i = end + 1;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#' &&
           line[i] != '"')
      ++i;
    out.push_back({line.substr(start, i - start), start + 1, false});
  }
  return out;
}

}  // namespace

RegisterAutomaton parse_automaton(std::string_view text) {
  RegisterAutomaton a;
  std::vector<std::pair<std::vector<Token>, std::size_t>> rule_lines;
  std::vector<std::pair<std::vector<Token>, std::size_t>> set_lines;
  std::set<std::string> seen_headers;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = tokenize(line, line_no);
    if (tokens.empty()) continue;
    const Token& head = tokens.front();
    if (head.quoted) throw ParseError("expected keyword", line_no, head.column);
    const std::string& kw = head.text;
    if (kw == "rule") {
      rule_lines.emplace_back(std::move(tokens), line_no);
      continue;
    }
    if (kw != "registers" && kw != "alphabet" && kw != "locations" && kw != "initial" && kw != "final")
      throw ParseError("unknown keyword '" + kw + "'", line_no, head.column);
    if (!seen_headers.insert(kw).second) throw ParseError("duplicate '" + kw + "' line", line_no, head.column);
    for (std::size_t i = 1; i < tokens.size(); ++i)
      if (tokens[i].quoted) throw ParseError("unexpected quoted text", line_no, tokens[i].column);
    if (kw == "registers") {
      if (tokens.size() != 2) throw ParseError("expected one register count", line_no, head.column);
      const std::string& n = tokens[1].text;
      if (!std::all_of(n.begin(), n.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
          n.size() > 3)
        throw ParseError("invalid register count '" + n + "'", line_no, tokens[1].column);
      a.registers = std::stoi(n);
    } else if (kw == "alphabet" || kw == "locations") {
      auto& names = kw == "alphabet" ? a.alphabet : a.locations;
      if (tokens.size() < 2) throw ParseError("expected at least one name", line_no, head.column + kw.size());
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!valid_name(tokens[i].text)) throw ParseError("invalid name", line_no, tokens[i].column);
        if (std::find(names.begin(), names.end(), tokens[i].text) != names.end())
          throw ParseError("duplicate name '" + tokens[i].text + "'", line_no, tokens[i].column);
        names.push_back(tokens[i].text);
      }
    } else {
      set_lines.emplace_back(std::move(tokens), line_no);
    }
  }
  for (const char* required : {"registers", "alphabet", "locations"})
    if (!seen_headers.count(required))
      throw ParseError(std::string("missing '") + required + "' line", line_no + 1, 1);

  auto location_of = [&](const Token& t, std::size_t ln) {
    auto idx = a.location_index(t.text);
    if (!idx) throw ParseError("undeclared location '" + t.text + "'", ln, t.column);
    return *idx;
  };
  for (auto& [tokens, ln] : set_lines) {
    auto& target = tokens.front().text == "initial" ? a.initial : a.final;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      std::size_t l = location_of(tokens[i], ln);
      if (std::find(target.begin(), target.end(), l) == target.end()) target.push_back(l);
    }
    std::sort(target.begin(), target.end());
  }
  for (auto& [tokens, ln] : rule_lines) {
    if (tokens.size() != 5 || !tokens[4].quoted || tokens[1].quoted || tokens[2].quoted || tokens[3].quoted)
      throw ParseError("expected: rule <src> <sym> <dst> \"<constraint>\"", ln, tokens.front().column);
    Rule r;
    r.source = location_of(tokens[1], ln);
    auto sym = a.symbol_index(tokens[2].text);
    if (!sym) throw ParseError("undeclared symbol '" + tokens[2].text + "'", ln, tokens[2].column);
    r.symbol = *sym;
    r.target = location_of(tokens[3], ln);
    try {
      r.guard = parse_constraint(tokens[4].text, a.registers);
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()).substr(std::string(e.what()).find(": ") + 2), ln,
                       tokens[4].column + e.column());
    }
    a.rules.push_back(std::move(r));
  }
  detect_orbits(a);
  return a;
}

std::string serialize_automaton(const RegisterAutomaton& a) {
  auto join = [&](const std::vector<std::size_t>& idx) {
    std::string s;
    for (std::size_t i : idx) s += " " + a.locations[i];
    return s;
  };
  std::ostringstream out;
  out << "registers " << a.registers << "\n";
  out << "alphabet";
  for (const auto& s : a.alphabet) out << " " << s;
  out << "\nlocations";
  for (const auto& l : a.locations) out << " " << l;
  out << "\ninitial" << join(a.initial) << "\n";
  out << "final" << join(a.final) << "\n";
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::string>> rows;
  for (const Rule& r : a.rules) rows.emplace_back(r.source, r.symbol, r.target, r.guard.to_string());
  std::stable_sort(rows.begin(), rows.end());
  for (const auto& [s, y, t, g] : rows)
    out << "rule " << a.locations[s] << " " << a.alphabet[y] << " " << a.locations[t] << " \"" << g << "\"\n";
  return out.str();
}

std::string fresh_location_name(const RegisterAutomaton& a, const std::string& base) {
  if (!a.location_index(base)) return base;
  for (int i = 1;; ++i) {
    std::string candidate = base + "_" + std::to_string(i);
    if (!a.location_index(candidate)) return candidate;
  }
}

}  // namespace ura
