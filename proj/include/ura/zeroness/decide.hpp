#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ura/counting/linrec.hpp"
#include "ura/zeroness/relation.hpp"

namespace ura {

struct Verdict {
  bool zero = true;
  // Witness when nonzero: the first nonzero point ordered by n+k, then n.
  std::size_t n = 0, k = 0;
  Rat value;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// "ZERO" or "NONZERO n=<n> k=<k> value=<num/den>".
std::string to_string(const Verdict& v);

struct ZeronessReport {
  Verdict verdict;
  CancellingRelation2 relation;
  std::size_t columns_checked = 0;  // second-axis sections L = 0..K
  std::size_t rows_checked = 0;     // first-axis sections M = 0..i*
};

enum class Backend { Elimination, Hermite };

// Number of variables of the pruned section with k fixed at L that `target`
// depends on; its first order+1 values decide the section.
std::size_t column_order(const LinrecSystem& sys, std::string_view target, std::size_t L);

// Finite grid check justified by `rel`, which must annihilate `target`.
ZeronessReport decide_with_relation(const LinrecSystem& sys, std::string_view target, CancellingRelation2 rel);

ZeronessReport decide_zeroness(const LinrecSystem& sys, std::string_view target,
                               Backend backend = Backend::Elimination);

}  // namespace ura
