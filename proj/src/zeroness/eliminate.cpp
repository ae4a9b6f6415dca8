#include "ura/zeroness/eliminate.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "ura/core/error.hpp"

namespace ura {

namespace {

PolyKS1 s1_times(const PolyK& p) { return PolyKS1(p) * PolyKS1::s1(); }

SkewKS1 entry(const AffineOperator& op, bool diagonal) {
  PolyKS1 c0 = -(PolyKS1(op.p00) + s1_times(op.p01));
  PolyKS1 c1 = -PolyKS1(op.p10);
  if (diagonal) c1 += PolyKS1::s1();
  return SkewKS1(std::vector<PolyKS1>{c0, c1});
}

// Dependency view shared by two- and one-dimensional systems.
struct DependencyGraph {
  std::vector<bool> initially_zero;
  std::vector<std::vector<std::size_t>> deps;
};

// Greatest fixpoint: zero boundaries and only zero dependencies.
std::vector<bool> identically_zero(const DependencyGraph& g) {
  std::vector<bool> zero = g.initially_zero;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < zero.size(); ++i) {
      if (!zero[i]) continue;
      for (std::size_t j : g.deps[i])
        if (!zero[j]) {
          zero[i] = false;
          changed = true;
          break;
        }
    }
  }
  return zero;
}

std::vector<std::size_t> relevant(const DependencyGraph& g, const std::vector<bool>& zero,
                                  const std::vector<std::size_t>& seeds) {
  std::vector<bool> seen(zero.size(), false);
  std::vector<std::size_t> stack;
  for (std::size_t s : seeds)
    if (!zero[s] && !seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j : g.deps[i])
      if (!zero[j] && !seen[j]) {
        seen[j] = true;
        stack.push_back(j);
      }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

struct ResolvedTarget {
  std::optional<std::size_t> variable;
  const DerivedVariable* derived = nullptr;
};

template <class Entry>
TargetMatrix assemble(const DependencyGraph& g, const std::vector<std::string>& names, const ResolvedTarget& t,
                      const std::string& target_name, Entry entry_of) {
  std::vector<bool> zero = identically_zero(g);
  std::vector<std::size_t> seeds;
  if (t.variable) {
    seeds.push_back(*t.variable);
  } else {
    for (const auto& [idx, c] : t.derived->terms)
      if (c != 0) seeds.push_back(idx);
  }
  std::vector<std::size_t> keep = relevant(g, zero, seeds);
  TargetMatrix out;
  if (keep.empty()) {
    out.zero = true;
    out.columns = {target_name};
    return out;
  }
  std::vector<std::size_t> position(names.size(), names.size());
  for (std::size_t p = 0; p < keep.size(); ++p) position[keep[p]] = p;
  const std::size_t size = keep.size() + (t.derived != nullptr ? 1 : 0);
  out.matrix.assign(size, std::vector<SkewKS1>(size));
  for (std::size_t p = 0; p < keep.size(); ++p) {
    out.columns.push_back(names[keep[p]]);
    for (std::size_t q = 0; q < keep.size(); ++q) out.matrix[p][q] = entry_of(keep[p], keep[q]);
  }
  if (t.variable) {
    out.target = position[*t.variable];
  } else {
    out.target = keep.size();
    out.columns.push_back(target_name);
    auto& row = out.matrix[keep.size()];
    row[keep.size()] = SkewKS1(PolyKS1(1));
    for (const auto& [idx, c] : t.derived->terms)
      if (position[idx] < keep.size()) row[position[idx]] -= SkewKS1(PolyKS1(c));
  }
  return out;
}

Rat row_content(const std::vector<SkewKS1>& row) {
  Int num = 0, den = 1;
  for (const SkewKS1& e : row)
    for (const PolyKS1& c : e.coefficients()) {
      if (c.is_zero()) continue;
      Rat r = c.content();
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), r.get_num().get_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den().get_mpz_t());
    }
  if (num == 0) return Rat(1);
  Rat out(num, den);
  out.canonicalize();
  return out;
}

// Dividing a row by a polynomial would not be sound on sequences (operators
// have kernels), so only the rational content is removed.
void normalize_row(std::vector<SkewKS1>& row) {
  Rat c = row_content(row);
  for (const SkewKS1& e : row)
    if (!e.is_zero()) {
      if (e.leading().leading() < 0) c = -c;
      break;
    }
  if (c == 1) return;
  Rat inv = 1 / c;
  for (SkewKS1& e : row) {
    std::vector<PolyKS1> cs = e.coefficients();
    for (PolyKS1& x : cs) x *= inv;
    e = SkewKS1(std::move(cs));
  }
}

int combined_degree(const SkewKS1& e) {
  if (e.is_zero()) return 0;
  int d = 0;
  for (const PolyKS1& c : e.coefficients())
    if (!c.is_zero()) d = std::max(d, c.degree());
  return e.degree() + d;
}

}  // namespace

SkewMatrix<PolyKS1> system_to_matrix(const LinrecSystem& sys) {
  sys.validate();
  const std::size_t n = sys.size();
  SkewMatrix<PolyKS1> m(n, std::vector<SkewKS1>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = entry(sys.equations[i][j], i == j);
  return m;
}

SkewMatrix<PolyKS1> system_to_matrix(const OneDimSystem& sys) {
  const std::size_t n = sys.order();
  SkewMatrix<PolyKS1> m(n, std::vector<SkewKS1>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<PolyKS1> cs{-PolyKS1(sys.equations[i][j]), PolyKS1(i == j ? 1 : 0)};
      m[i][j] = SkewKS1(std::move(cs));
    }
  return m;
}

SkewKS1 eliminate(SkewMatrix<PolyKS1> m, std::size_t target) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error("elimination needs a square matrix");
  if (target >= n) throw Error("elimination target out of range");
  std::vector<bool> row_alive(n, true), col_alive(n, true);
  for (std::size_t step = 0; step + 1 < n; ++step) {
    // Column with the fewest occurrences, then the smallest degree sum.
    std::optional<std::tuple<std::size_t, int, std::size_t>> best;
    for (std::size_t c = 0; c < n; ++c) {
      if (!col_alive[c] || c == target) continue;
      std::size_t count = 0;
      int degrees = 0;
      for (std::size_t r = 0; r < n; ++r)
        if (row_alive[r] && !m[r][c].is_zero()) {
          ++count;
          degrees += m[r][c].degree();
        }
      auto key = std::make_tuple(count, degrees, c);
      if (!best || key < *best) best = key;
    }
    const std::size_t v = std::get<2>(*best);
    if (std::get<0>(*best) == 0) throw InternalError("elimination matrix is rank deficient");
    std::optional<std::tuple<int, int, std::size_t>> pivot_key;
    for (std::size_t r = 0; r < n; ++r) {
      if (!row_alive[r] || m[r][v].is_zero()) continue;
      int nonzero = 0;
      for (std::size_t c = 0; c < n; ++c)
        if (col_alive[c] && !m[r][c].is_zero()) ++nonzero;
      auto key = std::make_tuple(combined_degree(m[r][v]), nonzero, r);
      if (!pivot_key || key < *pivot_key) pivot_key = key;
    }
    const std::size_t p = std::get<2>(*pivot_key);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == p || !row_alive[r] || m[r][v].is_zero()) continue;
      auto mult = clm(m[p][v], m[r][v]);  // left * m[p][v] = right * m[r][v]
      for (std::size_t c = 0; c < n; ++c) {
        if (!col_alive[c]) continue;
        if (c == v) {
          m[r][c] = SkewKS1();
          continue;
        }
        SkewKS1 updated = mult.right * m[r][c];
        if (!m[p][c].is_zero()) updated -= mult.left * m[p][c];
        m[r][c] = std::move(updated);
      }
      normalize_row(m[r]);
    }
    row_alive[p] = false;
    col_alive[v] = false;
  }
  for (std::size_t r = 0; r < n; ++r)
    if (row_alive[r]) {
      if (m[r][target].is_zero()) throw InternalError("elimination produced the zero relation");
      return m[r][target];
    }
  throw InternalError("elimination lost every row");
}

TargetMatrix target_matrix(const LinrecSystem& sys, std::string_view target) {
  sys.validate();
  ResolvedTarget t;
  t.variable = sys.variable_index(target);
  if (!t.variable) {
    auto d = sys.derived_index(target);
    if (!d) throw Error("unknown sequence '" + std::string(target) + "'");
    t.derived = &sys.derived[*d];
  }
  DependencyGraph g;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const Boundary& b = sys.boundaries[i];
    g.initially_zero.push_back(b.origin == 0 && b.first_row == 0 && b.first_column == 0);
    std::vector<std::size_t> deps;
    for (std::size_t j = 0; j < sys.size(); ++j)
      if (!sys.equations[i][j].is_zero()) deps.push_back(j);
    g.deps.push_back(std::move(deps));
  }
  return assemble(g, sys.variables, t, std::string(target),
                  [&](std::size_t i, std::size_t j) { return entry(sys.equations[i][j], i == j); });
}

TargetMatrix target_matrix(const OneDimSystem& sys, std::string_view target) {
  auto idx = sys.index(target);
  if (!idx) throw Error("unknown sequence '" + std::string(target) + "'");
  ResolvedTarget t;
  if (*idx < sys.order()) {
    t.variable = *idx;
  } else {
    t.derived = &sys.derived[*idx - sys.order()];
  }
  DependencyGraph g;
  for (std::size_t i = 0; i < sys.order(); ++i) {
    g.initially_zero.push_back(sys.initial[i] == 0);
    std::vector<std::size_t> deps;
    for (std::size_t j = 0; j < sys.order(); ++j)
      if (!sys.equations[i][j].is_zero()) deps.push_back(j);
    g.deps.push_back(std::move(deps));
  }
  return assemble(g, sys.variables, t, std::string(target), [&](std::size_t i, std::size_t j) {
    std::vector<PolyKS1> cs{-PolyKS1(sys.equations[i][j]), PolyKS1(i == j ? 1 : 0)};
    return SkewKS1(std::move(cs));
  });
}

CancellingRelation2 cancelling_relation(const LinrecSystem& sys, std::string_view target) {
  TargetMatrix tm = target_matrix(sys, target);
  if (tm.zero) return CancellingRelation2::from_operator(SkewKS1(PolyKS1(1)), std::string(target));
  return CancellingRelation2::from_operator(eliminate(std::move(tm.matrix), tm.target), std::string(target))
      .normalized();
}

CancellingRelation1 section_cr(const LinrecSystem& sys, std::string_view target, std::size_t M) {
  OneDimSystem sec = section(sys, Axis::First, M);
  const std::string name = std::string(target) + "@" + std::to_string(M);
  // Variables are renamed per level; derived sequences keep their name.
  TargetMatrix tm = target_matrix(sec, sec.index(name) ? std::string_view(name) : target);
  if (tm.zero) return CancellingRelation1::from_operator(SkewKS1(PolyKS1(1)), name);
  return CancellingRelation1::from_operator(eliminate(std::move(tm.matrix), tm.target), name).normalized();
}

}  // namespace ura
