#include "ura/counting/linrec.hpp"

#include <json.hpp>
#include <sstream>

#include "ura/core/error.hpp"

namespace ura {

std::optional<std::size_t> LinrecSystem::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (variables[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> LinrecSystem::derived_index(std::string_view name) const {
  for (std::size_t i = 0; i < derived.size(); ++i)
    if (derived[i].name == name) return i;
  return std::nullopt;
}

void LinrecSystem::validate() const {
  if (equations.size() != variables.size() || boundaries.size() != variables.size())
    throw Error("linrec system dimensions disagree");
  for (const auto& row : equations)
    if (row.size() != variables.size()) throw Error("linrec equation matrix is not square");
  for (const auto& dv : derived)
    for (const auto& [j, c] : dv.terms)
      if (j >= variables.size()) throw Error("derived variable '" + dv.name + "' references unknown variable");
}

SequenceTable::SequenceTable(std::vector<std::string> names, std::size_t max_n, std::size_t max_k)
    : names_(std::move(names)), max_n_(max_n), max_k_(max_k) {
  data_.assign(names_.size(), std::vector<Rat>((max_n + 1) * (max_k + 1)));
}

std::optional<std::size_t> SequenceTable::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t SequenceTable::add_column(const std::string& name) {
  names_.push_back(name);
  data_.emplace_back((max_n_ + 1) * (max_k_ + 1));
  return names_.size() - 1;
}

SequenceTable evaluate(const LinrecSystem& sys, std::size_t max_n, std::size_t max_k) {
  sys.validate();
  std::vector<std::string> names = sys.variables;
  for (const auto& dv : sys.derived) names.push_back(dv.name);
  SequenceTable t(names, max_n, max_k);
  const std::size_t m = sys.size();

  // Coefficients evaluated at every source column k in [0, max_k).
  struct Term {
    std::size_t var;
    int kind;  // 0: f(n,k), 1: f(n+1,k), 2: f(n,k+1)
    std::vector<Rat> value;
  };
  std::vector<std::vector<Term>> rows(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const AffineOperator& op = sys.equations[i][j];
      const PolyK* parts[3] = {&op.p00, &op.p01, &op.p10};
      for (int kind = 0; kind < 3; ++kind) {
        if (parts[kind]->is_zero()) continue;
        Term term{j, kind, {}};
        for (std::size_t k = 0; k < max_k; ++k) term.value.push_back(parts[kind]->eval(Rat(static_cast<long>(k))));
        rows[i].push_back(std::move(term));
      }
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    const Boundary& b = sys.boundaries[i];
    t.at(i, 0, 0) = b.origin;
    for (std::size_t k = 1; k <= max_k; ++k) t.at(i, 0, k) = b.first_row;
    for (std::size_t n = 1; n <= max_n; ++n) t.at(i, n, 0) = b.first_column;
  }
  Rat acc, prod;
  for (std::size_t n = 0; n < max_n; ++n) {
    for (std::size_t k = 0; k < max_k; ++k) {
      for (std::size_t i = 0; i < m; ++i) {
        acc = 0;
        for (const Term& term : rows[i]) {
          const Rat& v = term.kind == 0   ? t.at(term.var, n, k)
                         : term.kind == 1 ? t.at(term.var, n + 1, k)
                                          : t.at(term.var, n, k + 1);
          if (v == 0) continue;
          prod = term.value[k] * v;
          acc += prod;
        }
        t.at(i, n + 1, k + 1) = acc;
      }
    }
  }
  for (std::size_t d = 0; d < sys.derived.size(); ++d) {
    const std::size_t col = m + d;
    for (std::size_t n = 0; n <= max_n; ++n)
      for (std::size_t k = 0; k <= max_k; ++k) {
        Rat v(0);
        for (const auto& [j, c] : sys.derived[d].terms) v += c * t.at(j, n, k);
        t.at(col, n, k) = v;
      }
  }
  return t;
}

LinrecSystem stirling_system(long alphabet_size) {
  if (alphabet_size < 1) throw Error("alphabet size must be positive");
  LinrecSystem sys;
  sys.variables = {"S"};
  AffineOperator op;
  op.p00 = PolyK(alphabet_size);
  op.p10 = PolyK(std::vector<Rat>{Rat(alphabet_size), Rat(alphabet_size)});
  sys.equations = {{op}};
  sys.boundaries = {Boundary{Rat(1), Rat(0), Rat(0)}};
  return sys;
}

namespace {

using nlohmann::json;

json poly_json(const PolyK& p) {
  json arr = json::array();
  for (const Rat& c : p.coefficients()) arr.push_back(to_fraction_string(c));
  return arr;
}

PolyK poly_from_json(const json& j) {
  std::vector<Rat> cs;
  for (const auto& c : j) cs.push_back(parse_rat(c.get<std::string>()));
  return PolyK(std::move(cs));
}

}  // namespace

std::string to_json(const LinrecSystem& sys) {
  json j;
  j["variables"] = sys.variables;
  json eqs = json::array();
  for (const auto& row : sys.equations) {
    json r = json::array();
    for (const auto& op : row) r.push_back({{"p00", poly_json(op.p00)}, {"p01", poly_json(op.p01)}, {"p10", poly_json(op.p10)}});
    eqs.push_back(r);
  }
  j["equations"] = eqs;
  json bs = json::array();
  for (const auto& b : sys.boundaries)
    bs.push_back({{"origin", to_fraction_string(b.origin)},
                  {"first_row", to_fraction_string(b.first_row)},
                  {"first_column", to_fraction_string(b.first_column)}});
  j["boundaries"] = bs;
  json ds = json::array();
  for (const auto& dv : sys.derived) {
    json terms = json::array();
    for (const auto& [v, c] : dv.terms) terms.push_back({{"var", sys.variables[v]}, {"coeff", to_fraction_string(c)}});
    ds.push_back({{"name", dv.name}, {"terms", terms}});
  }
  j["derived"] = ds;
  return j.dump(2);
}

LinrecSystem linrec_from_json(std::string_view text) {
  LinrecSystem sys;
  try {
    json j = json::parse(text);
    sys.variables = j.at("variables").get<std::vector<std::string>>();
    for (const auto& row : j.at("equations")) {
      std::vector<AffineOperator> r;
      for (const auto& cell : row)
        r.push_back(AffineOperator{poly_from_json(cell.at("p00")), poly_from_json(cell.at("p01")),
                                   poly_from_json(cell.at("p10"))});
      sys.equations.push_back(std::move(r));
    }
    for (const auto& b : j.at("boundaries"))
      sys.boundaries.push_back(Boundary{parse_rat(b.at("origin").get<std::string>()),
                                        parse_rat(b.at("first_row").get<std::string>()),
                                        parse_rat(b.at("first_column").get<std::string>())});
    if (j.contains("derived")) {
      for (const auto& d : j.at("derived")) {
        DerivedVariable dv;
        dv.name = d.at("name").get<std::string>();
        for (const auto& t : d.at("terms")) {
          auto idx = sys.variable_index(t.at("var").get<std::string>());
          if (!idx) throw Error("derived variable references unknown variable");
          dv.terms.emplace_back(*idx, parse_rat(t.at("coeff").get<std::string>()));
        }
        sys.derived.push_back(std::move(dv));
      }
    }
  } catch (const json::exception& e) {
    throw Error(std::string("invalid linrec JSON: ") + e.what());
  }
  sys.validate();
  return sys;
}

std::string to_csv(const SequenceTable& table, std::string_view prefix) {
  std::ostringstream out;
  out << "var,n,k,value\n";
  for (std::size_t v = 0; v < table.names().size(); ++v) {
    if (!prefix.empty() && table.names()[v].compare(0, prefix.size(), prefix) != 0) continue;
    for (std::size_t n = 0; n <= table.max_n(); ++n)
      for (std::size_t k = 0; k <= table.max_k(); ++k)
        out << table.names()[v] << "," << n << "," << k << "," << to_fraction_string(table.at(v, n, k)) << "\n";
  }
  return out.str();
}

std::string to_text(const LinrecSystem& sys) {
  std::ostringstream out;
  auto term = [](const PolyK& p, const std::string& f) -> std::string {
    if (p == PolyK(1)) return f;
    if (p.coefficients().size() == 1 || (p.coefficients().size() == 2 && p.coeff(0) == 0))
      return p.to_string() + "*" + f;
    return "(" + p.to_string() + ")*" + f;
  };
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const std::string& v = sys.variables[i];
    std::string rhs;
    for (std::size_t j = 0; j < sys.size(); ++j) {
      const AffineOperator& op = sys.equations[i][j];
      const std::string& w = sys.variables[j];
      if (!op.p00.is_zero()) rhs += (rhs.empty() ? "" : " + ") + term(op.p00, w + "(n,k)");
      if (!op.p01.is_zero()) rhs += (rhs.empty() ? "" : " + ") + term(op.p01, w + "(n+1,k)");
      if (!op.p10.is_zero()) rhs += (rhs.empty() ? "" : " + ") + term(op.p10, w + "(n,k+1)");
    }
    const Boundary& b = sys.boundaries[i];
    out << v << "(n+1,k+1) = " << (rhs.empty() ? "0" : rhs) << "\n";
    out << "  " << v << "(0,0) = " << to_display_string(b.origin) << ", " << v
        << "(0,k+1) = " << to_display_string(b.first_row) << ", " << v
        << "(n+1,0) = " << to_display_string(b.first_column) << "\n";
  }
  for (const auto& dv : sys.derived) {
    out << dv.name << "(n,k) =";
    bool first = true;
    for (const auto& [j, c] : dv.terms) {
      std::string sign = c < 0 ? "-" : "+";
      Rat mag = abs(c);
      out << " " << (first && c > 0 ? "" : sign + " ") << (mag == 1 ? "" : to_display_string(mag) + "*")
          << sys.variables[j] << "(n,k)";
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace ura
