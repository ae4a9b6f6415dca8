#include "ura/zeroness/decide.hpp"

#include <algorithm>
#include <optional>

#include "ura/core/error.hpp"
#include "ura/counting/section.hpp"
#include "ura/zeroness/eliminate.hpp"
#include "ura/zeroness/hnf.hpp"

namespace ura {

namespace {

std::size_t to_size(const Int& v, const char* what) {
  if (v < 0 || v > Int(1'000'000)) throw Error(std::string(what) + " is too large for the grid check");
  return v.get_ui();
}

std::size_t column_of(const SequenceTable& t, std::string_view target) {
  auto idx = t.index(target);
  if (!idx) throw Error("unknown sequence '" + std::string(target) + "'");
  return *idx;
}

}  // namespace

std::string to_string(const Verdict& v) {
  if (v.zero) return "ZERO";
  return "NONZERO n=" + std::to_string(v.n) + " k=" + std::to_string(v.k) + " value=" + to_fraction_string(v.value);
}

std::size_t column_order(const LinrecSystem& sys, std::string_view target, std::size_t L) {
  OneDimSystem sec = section(sys, Axis::Second, L);
  const std::string name = std::string(target) + "@" + std::to_string(L);
  const bool is_variable = sec.index(name).has_value();
  TargetMatrix tm = target_matrix(sec, is_variable ? std::string_view(name) : target);
  if (tm.zero) return 0;
  return tm.matrix.size() - (is_variable ? 0 : 1);
}

ZeronessReport decide_with_relation(const LinrecSystem& sys, std::string_view target, CancellingRelation2 rel) {
  if (rel.is_zero()) throw InternalError("zero cancelling relation");
  ZeronessReport report;
  const auto [i_star, j_star] = rel.lead();
  const std::size_t K = 2 + static_cast<std::size_t>(j_star) + to_size(lagrange_root_bound(rel.lead_coefficient()), "root bound");
  report.relation = std::move(rel);

  // Grid extents: columns L = 0..K up to their section order, rows M = 0..i*
  // up to the section relation span plus its root bound.
  std::vector<std::size_t> col_depth(K + 1);
  std::size_t max_n = static_cast<std::size_t>(i_star);
  for (std::size_t L = 0; L <= K; ++L) {
    col_depth[L] = column_order(sys, target, L);
    max_n = std::max(max_n, col_depth[L]);
  }
  std::vector<std::size_t> row_depth(static_cast<std::size_t>(i_star) + 1);
  std::size_t max_k = K;
  for (std::size_t M = 0; M < row_depth.size(); ++M) {
    CancellingRelation1 cr = section_cr(sys, target, M);
    row_depth[M] = static_cast<std::size_t>(cr.lead()) + to_size(lagrange_root_bound(cr.lead_coefficient()), "root bound");
    max_k = std::max(max_k, row_depth[M]);
  }
  report.columns_checked = K + 1;
  report.rows_checked = row_depth.size();

  SequenceTable table = evaluate(sys, max_n, max_k);
  const std::size_t col = column_of(table, target);
  std::optional<std::pair<std::size_t, std::size_t>> found;
  auto consider = [&](std::size_t n, std::size_t k) {
    if (table.at(col, n, k) != 0 && (!found || n + k < found->first + found->second)) found = {n, k};
  };
  for (std::size_t L = 0; L <= K; ++L)
    for (std::size_t n = 0; n <= col_depth[L]; ++n) consider(n, L);
  for (std::size_t M = 0; M < row_depth.size(); ++M)
    for (std::size_t k = 0; k <= row_depth[M]; ++k) consider(M, k);
  if (!found) return report;

  // Canonical witness, independent of which relation justified the grid.
  const std::size_t diag = found->first + found->second;
  SequenceTable small = evaluate(sys, diag, diag);
  const std::size_t c = column_of(small, target);
  for (std::size_t d = 0; d <= diag; ++d)
    for (std::size_t n = 0; n <= d; ++n)
      if (small.at(c, n, d - n) != 0) {
        report.verdict = Verdict{false, n, d - n, small.at(c, n, d - n)};
        return report;
      }
  throw InternalError("witness vanished on re-evaluation");
}

ZeronessReport decide_zeroness(const LinrecSystem& sys, std::string_view target, Backend backend) {
  CancellingRelation2 rel =
      backend == Backend::Elimination ? cancelling_relation(sys, target) : hnf_cancelling_relation(sys, target);
  return decide_with_relation(sys, target, std::move(rel));
}

}  // namespace ura
