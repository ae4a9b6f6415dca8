#include "ura/zeroness/relation.hpp"

#include <json.hpp>

#include "ura/core/error.hpp"

namespace ura {

namespace {

using nlohmann::json;

// Rational c with every coefficient / c integral and coprime.
template <class Map>
Rat content_of(const Map& terms) {
  Int num = 0, den = 1;
  for (const auto& [key, p] : terms)
    for (const Rat& c : p.coefficients()) {
      if (c == 0) continue;
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num().get_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    }
  if (num == 0) return Rat(1);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

template <class Map>
Map normalize_terms(const Map& terms) {
  if (terms.empty()) return terms;
  const PolyK& lead = terms.rbegin()->second;
  Rat factor = lead.is_constant() ? lead.leading() : content_of(terms) * (lead.leading() < 0 ? -1 : 1);
  Map out;
  PolyK inv(1 / factor);
  for (const auto& [key, p] : terms) out.emplace(key, p * inv);
  return out;
}

}  // namespace

int CancellingRelation2::max_i() const {
  int m = 0;
  for (const auto& [ij, p] : terms) m = std::max(m, ij.first);
  return m;
}

int CancellingRelation2::max_j() const {
  int m = 0;
  for (const auto& [ij, p] : terms) m = std::max(m, ij.second);
  return m;
}

CancellingRelation2 CancellingRelation2::from_operator(const SkewKS1& op, std::string target) {
  CancellingRelation2 rel;
  rel.target = std::move(target);
  for (int j = 0; j <= op.degree(); ++j) {
    const PolyKS1& c = op.coefficients()[static_cast<std::size_t>(j)];
    std::map<int, std::vector<Rat>> by_s1;
    for (const auto& t : c.terms()) {
      auto& v = by_s1[t.s];
      if (v.size() <= static_cast<std::size_t>(t.k)) v.resize(static_cast<std::size_t>(t.k) + 1, Rat(0));
      v[static_cast<std::size_t>(t.k)] = t.c;
    }
    for (auto& [i, v] : by_s1) rel.terms.emplace(std::make_pair(i, j), PolyK(std::move(v)));
  }
  return rel;
}

SkewKS1 CancellingRelation2::to_operator() const {
  SkewKS1 out;
  for (const auto& [ij, p] : terms)
    out += SkewKS1::monomial(PolyKS1(p) * PolyKS1::monomial(Rat(1), 0, ij.first), ij.second);
  return out;
}

CancellingRelation2 CancellingRelation2::normalized() const {
  CancellingRelation2 r;
  r.target = target;
  r.terms = normalize_terms(terms);
  return r;
}

CancellingRelation1 CancellingRelation1::from_operator(const SkewKS1& op, std::string target) {
  CancellingRelation1 rel;
  rel.target = std::move(target);
  for (int j = 0; j <= op.degree(); ++j) {
    const PolyKS1& c = op.coefficients()[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    if (!c.is_k_only()) throw InternalError("one-dimensional relation mentions S1");
    rel.terms.emplace(j, c.as_poly_k());
  }
  return rel;
}

CancellingRelation1 CancellingRelation1::normalized() const {
  CancellingRelation1 r;
  r.target = target;
  r.terms = normalize_terms(terms);
  return r;
}

bool verify_relation(const CancellingRelation2& rel, const SequenceTable& table, std::size_t var) {
  if (var >= table.names().size()) throw Error("no such table column");
  const auto mi = static_cast<std::size_t>(rel.max_i()), mj = static_cast<std::size_t>(rel.max_j());
  if (mi > table.max_n() || mj > table.max_k()) throw Error("table too small for the relation");
  Rat acc, kp, term;
  for (std::size_t n = 0; n + mi <= table.max_n(); ++n)
    for (std::size_t k = 0; k + mj <= table.max_k(); ++k) {
      acc = 0;
      for (const auto& [ij, p] : rel.terms) {
        const Rat& v = table.at(var, n + static_cast<std::size_t>(ij.first), k + static_cast<std::size_t>(ij.second));
        if (v == 0) continue;
        acc += p.eval(Rat(static_cast<long>(k))) * v;
      }
      if (acc != 0) return false;
    }
  return true;
}

bool verify_relation(const CancellingRelation1& rel, const std::vector<Rat>& sequence) {
  if (rel.terms.empty()) return true;
  const auto span = static_cast<std::size_t>(rel.lead());
  if (span >= sequence.size()) throw Error("sequence too short for the relation");
  for (std::size_t t = 0; t + span < sequence.size(); ++t) {
    Rat acc(0);
    for (const auto& [j, p] : rel.terms) acc += p.eval(Rat(static_cast<long>(t))) * sequence[t + static_cast<std::size_t>(j)];
    if (acc != 0) return false;
  }
  return true;
}

std::string to_text(const CancellingRelation2& rel) {
  std::string out = "CR2 target=" + rel.target;
  if (rel.is_zero()) return out + " lead=none monic=false\n";
  auto [li, lj] = rel.lead();
  out += " lead=(" + std::to_string(li) + "," + std::to_string(lj) + ") monic=" + (rel.monic() ? "true" : "false") + "\n";
  for (const auto& [ij, p] : rel.terms)
    out += "(" + std::to_string(ij.first) + "," + std::to_string(ij.second) + "): " + p.to_string() + "\n";
  return out;
}

std::string to_text(const CancellingRelation1& rel) {
  std::string out = "CR1 target=" + rel.target;
  if (rel.is_zero()) return out + " lead=none\n";
  out += " lead=" + std::to_string(rel.lead()) + "\n";
  for (const auto& [j, p] : rel.terms) out += "(" + std::to_string(j) + "): " + p.to_string() + "\n";
  return out;
}

std::string to_json(const CancellingRelation2& rel) {
  json terms = json::array();
  for (const auto& [ij, p] : rel.terms) {
    json coeffs = json::array();
    for (const Rat& c : p.coefficients()) coeffs.push_back(to_fraction_string(c));
    terms.push_back({{"i", ij.first}, {"j", ij.second}, {"coeffs", coeffs}});
  }
  json j{{"target", rel.target}, {"terms", terms}, {"monic", rel.monic()}};
  if (!rel.is_zero()) j["lead"] = {rel.lead().first, rel.lead().second};
  return j.dump();
}

CancellingRelation2 relation_from_json(std::string_view text) {
  CancellingRelation2 rel;
  try {
    json j = json::parse(text);
    rel.target = j.at("target").get<std::string>();
    for (const auto& t : j.at("terms")) {
      std::vector<Rat> cs;
      for (const auto& c : t.at("coeffs")) cs.push_back(parse_rat(c.get<std::string>()));
      PolyK p(std::move(cs));
      if (!p.is_zero()) rel.terms.emplace(std::make_pair(t.at("i").get<int>(), t.at("j").get<int>()), p);
    }
  } catch (const json::exception& e) {
    throw Error(std::string("malformed relation JSON: ") + e.what());
  }
  return rel;
}

Int lagrange_root_bound(const PolyK& p) {
  if (p.is_zero()) throw Error("root bound of the zero polynomial");
  if (p.is_constant()) return Int(0);
  Int den = 1;
  for (const Rat& c : p.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  // Primitive integer form: same roots, smallest coefficients.
  Int g = 0, max_abs = 0;
  std::vector<Int> ints;
  for (const Rat& c : p.coefficients()) {
    Rat scaled = c * den;
    ints.push_back(abs(scaled.get_num()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  for (const Int& a : ints)
    if (a / g > max_abs) max_abs = a / g;
  return 1 + Int(p.degree()) * max_abs;
}

}  // namespace ura
