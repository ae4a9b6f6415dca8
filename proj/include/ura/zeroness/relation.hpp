#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ura/counting/linrec.hpp"
#include "ura/counting/poly_k.hpp"
#include "ura/skewalg/skew_poly.hpp"

namespace ura {

// sum_{(i,j)} terms[(i,j)](k) * f(n+i, k+j) = 0 for all n, k >= 0.
struct CancellingRelation2 {
  std::string target;
  std::map<std::pair<int, int>, PolyK> terms;  // no zero entries

  bool is_zero() const { return terms.empty(); }
  // Lexicographically greatest (i, j).
  std::pair<int, int> lead() const { return terms.rbegin()->first; }
  const PolyK& lead_coefficient() const { return terms.rbegin()->second; }
  bool monic() const { return !terms.empty() && lead_coefficient() == PolyK(1); }
  int max_i() const;
  int max_j() const;

  // Reads a skew polynomial c(k,S1) S2^j term by term; S1^a becomes i = a.
  static CancellingRelation2 from_operator(const SkewKS1& op, std::string target);
  SkewKS1 to_operator() const;
  // Lead made 1 when constant, otherwise integral, primitive, positive lead.
  CancellingRelation2 normalized() const;
  friend bool operator==(const CancellingRelation2&, const CancellingRelation2&) = default;
};

// sum_j terms[j](t) * f(t+j) = 0 for all t >= 0.
struct CancellingRelation1 {
  std::string target;
  std::map<int, PolyK> terms;

  bool is_zero() const { return terms.empty(); }
  int lead() const { return terms.rbegin()->first; }
  const PolyK& lead_coefficient() const { return terms.rbegin()->second; }

  // The operator must not mention S1.
  static CancellingRelation1 from_operator(const SkewKS1& op, std::string target);
  CancellingRelation1 normalized() const;
  friend bool operator==(const CancellingRelation1&, const CancellingRelation1&) = default;
};

// True iff the relation holds at every (n, k) whose shifts stay in the table.
// Throws Error when the table is smaller than the largest shift.
bool verify_relation(const CancellingRelation2& rel, const SequenceTable& table, std::size_t var);
bool verify_relation(const CancellingRelation1& rel, const std::vector<Rat>& sequence);

// "CR2 target=G lead=(2,3) monic=true" then "(i,j): poly" lines, lead last.
std::string to_text(const CancellingRelation2& rel);
std::string to_json(const CancellingRelation2& rel);
CancellingRelation2 relation_from_json(std::string_view text);
std::string to_text(const CancellingRelation1& rel);

// 1 + deg(p) * max |a_i| over the integer coefficients of a cleared p, or 0
// when p is constant; every real root of p is below it.
Int lagrange_root_bound(const PolyK& p);

}  // namespace ura
