#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ura/counting/linrec.hpp"
#include "ura/counting/section.hpp"
#include "ura/skewalg/skew_poly.hpp"
#include "ura/zeroness/relation.hpp"

namespace ura {

// Row r encodes sum_c m[r][c] f_c = 0.
template <class C>
using SkewMatrix = std::vector<std::vector<SkewPoly<C>>>;

// Row i: S1 S2 f_i - sum_j (p00 + p01 S1 + p10 S2) f_j.
SkewMatrix<PolyKS1> system_to_matrix(const LinrecSystem& sys);

// Row i: S2 f_i - sum_j a_ij(k) f_j.
SkewMatrix<PolyKS1> system_to_matrix(const OneDimSystem& sys);

// Operator R != 0 with R f_target = 0, obtained by eliminating every other
// column through common left multiples. `m` must be square and full rank.
SkewKS1 eliminate(SkewMatrix<PolyKS1> m, std::size_t target);

// The square system that determines a named sequence: identically zero
// variables and variables the target does not depend on are dropped, and a
// derived target gets its own column with the row G - sum c_i f_i = 0.
// `zero` is set when the target is identically zero (matrix then empty).
struct TargetMatrix {
  SkewMatrix<PolyKS1> matrix;
  std::vector<std::string> columns;
  std::size_t target = 0;
  bool zero = false;
};
TargetMatrix target_matrix(const LinrecSystem& sys, std::string_view target);
TargetMatrix target_matrix(const OneDimSystem& sys, std::string_view target);

CancellingRelation2 cancelling_relation(const LinrecSystem& sys, std::string_view target);

// Relation for the sequence k -> f(M, k).
CancellingRelation1 section_cr(const LinrecSystem& sys, std::string_view target, std::size_t M);

}  // namespace ura
