#include "ura/zeroness/hnf.hpp"

#include <algorithm>
#include <utility>

#include "ura/core/error.hpp"

namespace ura {

namespace {

using Row = std::vector<SkewRat>;

int max_degree(const SkewMatrix<RatFunc>& a) {
  int d = 0;
  for (const auto& row : a)
    for (const auto& e : row) d = std::max(d, e.degree());
  return d;
}

void check_square(const SkewMatrix<RatFunc>& a) {
  for (const auto& row : a)
    if (row.size() != a.size()) throw Error("Hermite form needs a square matrix");
}

// row_r -= q * row_p
void subtract_multiple(Row& r, const SkewRat& q, const Row& p) {
  if (q.is_zero()) return;
  for (std::size_t j = 0; j < r.size(); ++j)
    if (!p[j].is_zero()) r[j] -= q * p[j];
}

void scale_row(Row& r, const RatFunc& c) {
  for (auto& e : r) e = e.scaled_left(c);
}

std::size_t weight(const RatFunc& r) {
  return r.numerator().terms().size() + r.denominator().terms().size();
}

// Solves m x = rhs exactly; free unknowns are set to zero. nullopt when
// inconsistent.
std::optional<std::vector<RatFunc>> solve(std::vector<std::vector<RatFunc>> m, std::vector<RatFunc> rhs,
                                          std::size_t unknowns) {
  const std::size_t eqs = m.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < eqs; ++c) {
    std::size_t best = eqs;
    for (std::size_t i = r; i < eqs; ++i)
      if (!m[i][c].is_zero() && (best == eqs || weight(m[i][c]) < weight(m[best][c]))) best = i;
    if (best == eqs) continue;
    std::swap(m[r], m[best]);
    std::swap(rhs[r], rhs[best]);
    const RatFunc inv = m[r][c].inverse();
    for (std::size_t j = c; j < unknowns; ++j)
      if (!m[r][j].is_zero()) m[r][j] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < eqs; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const RatFunc f = m[i][c];
      for (std::size_t j = c; j < unknowns; ++j)
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
      if (!rhs[r].is_zero()) rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < eqs; ++i)
    if (!rhs[i].is_zero()) return std::nullopt;
  std::vector<RatFunc> x(unknowns);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

// Row i of the Hermite form with diagonal degree d, given the degrees of the
// rows below. Unknowns: the coefficients of u_i up to degree rho, then the
// free coefficients of H_ij for j >= i.
std::optional<std::pair<Row, Row>> solve_row(const SkewMatrix<RatFunc>& a, std::size_t i, int d,
                                             const std::vector<int>& degrees, int rho, int deg_a) {
  const std::size_t n = a.size();
  const int top = rho + deg_a;
  if (d > top) return std::nullopt;
  const std::size_t per_u = static_cast<std::size_t>(rho) + 1;
  std::vector<std::size_t> h_offset(n, 0);
  std::size_t unknowns = n * per_u;
  for (std::size_t j = i; j < n; ++j) {
    h_offset[j] = unknowns;
    unknowns += static_cast<std::size_t>(j == i ? d : degrees[j]);
  }
  const std::size_t per_col = static_cast<std::size_t>(top) + 1;
  std::vector<std::vector<RatFunc>> m(n * per_col, std::vector<RatFunc>(unknowns));
  std::vector<RatFunc> rhs(n * per_col);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t j = 0; j < n; ++j) {
      const SkewRat& entry = a[l][j];
      for (int s = 0; s <= rho; ++s) {
        const SkewRat shifted = entry.shifted_up(s);
        for (int e = 0; e <= shifted.degree(); ++e)
          m[j * per_col + static_cast<std::size_t>(e)][l * per_u + static_cast<std::size_t>(s)] = shifted.coeff(e);
      }
    }
  for (std::size_t j = i; j < n; ++j) {
    const int bound = j == i ? d : degrees[j];
    for (int e = 0; e < bound; ++e)
      m[j * per_col + static_cast<std::size_t>(e)][h_offset[j] + static_cast<std::size_t>(e)] = RatFunc(-1);
  }
  rhs[i * per_col + static_cast<std::size_t>(d)] = RatFunc(1);
  auto x = solve(std::move(m), std::move(rhs), unknowns);
  if (!x) return std::nullopt;
  Row u(n), h(n);
  for (std::size_t l = 0; l < n; ++l) {
    std::vector<RatFunc> cs(x->begin() + static_cast<long>(l * per_u), x->begin() + static_cast<long>((l + 1) * per_u));
    u[l] = SkewRat(std::move(cs));
  }
  for (std::size_t j = i; j < n; ++j) {
    const int bound = j == i ? d : degrees[j];
    std::vector<RatFunc> cs(x->begin() + static_cast<long>(h_offset[j]),
                            x->begin() + static_cast<long>(h_offset[j]) + bound);
    if (j == i) cs.push_back(RatFunc(1));
    h[j] = SkewRat(std::move(cs));
  }
  return std::make_pair(std::move(h), std::move(u));
}

PolyKS1 lcm(const PolyKS1& a, const PolyKS1& b) {
  auto q = exact_divide(a * b, gcd(a, b));
  if (!q) throw InternalError("lcm division failed");
  return q->normalized();
}

PolyKS1 to_polynomial(const RatFunc& r) {
  if (!r.is_polynomial()) throw InternalError("denominator left after clearing");
  PolyKS1 p = r.numerator();
  p *= Rat(1) / r.denominator().leading();
  return p;
}

}  // namespace

SkewMatrix<RatFunc> lift(const SkewMatrix<PolyKS1>& m) {
  SkewMatrix<RatFunc> out;
  out.reserve(m.size());
  for (const auto& row : m) {
    Row r;
    r.reserve(row.size());
    for (const auto& e : row) {
      std::vector<RatFunc> cs(e.coefficients().begin(), e.coefficients().end());
      r.emplace_back(std::move(cs));
    }
    out.push_back(std::move(r));
  }
  return out;
}

SkewMatrix<RatFunc> identity_matrix(std::size_t n) {
  SkewMatrix<RatFunc> out(n, Row(n));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = SkewRat(RatFunc(1));
  return out;
}

bool is_hermite_form(const SkewMatrix<RatFunc>& h) {
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i].size() != h.size()) return false;
    const SkewRat& diag = h[i][i];
    if (diag.is_zero() || !(diag.leading() == RatFunc(1))) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (!h[i][j].is_zero()) return false;
    for (std::size_t r = 0; r < i; ++r)
      if (!h[r][i].is_zero() && h[r][i].degree() >= diag.degree()) return false;
  }
  return true;
}

HermiteForm hnf_euclidean(const SkewMatrix<RatFunc>& a) {
  check_square(a);
  const std::size_t n = a.size();
  HermiteForm out{a, identity_matrix(n), std::vector<int>(n)};
  auto& H = out.H;
  auto& U = out.U;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = n;
    for (;;) {
      p = n;
      for (std::size_t r = c; r < n; ++r)
        if (!H[r][c].is_zero() && (p == n || H[r][c].degree() < H[p][c].degree())) p = r;
      if (p == n) throw Error("matrix is singular");
      bool done = true;
      for (std::size_t r = c; r < n; ++r) {
        if (r == p || H[r][c].is_zero()) continue;
        auto [q, rem] = left_divmod(H[r][c], H[p][c]);
        subtract_multiple(H[r], q, H[p]);
        subtract_multiple(U[r], q, U[p]);
        if (!rem.is_zero()) done = false;
      }
      if (done) break;
    }
    std::swap(H[c], H[p]);
    std::swap(U[c], U[p]);
    const RatFunc inv = H[c][c].leading().inverse();
    scale_row(H[c], inv);
    scale_row(U[c], inv);
    for (std::size_t r = 0; r < c; ++r) {
      if (H[r][c].is_zero() || H[r][c].degree() < H[c][c].degree()) continue;
      auto q = left_divmod(H[r][c], H[c][c]).first;
      subtract_multiple(H[r], q, H[c]);
      subtract_multiple(U[r], q, U[c]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) out.degrees[i] = H[i][i].degree();
  return out;
}

std::optional<HermiteForm> hnf_degree_vector(const SkewMatrix<RatFunc>& a) {
  check_square(a);
  const std::size_t n = a.size();
  const int deg_a = max_degree(a);
  const int rho = static_cast<int>(n) * deg_a;
  const int budget = static_cast<int>(n) * deg_a;
  HermiteForm out{SkewMatrix<RatFunc>(n), SkewMatrix<RatFunc>(n), std::vector<int>(n, 0)};
  int used = 0;
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t i = n - 1 - step;
    bool found = false;
    for (int d = 0; d <= budget - used && !found; ++d) {
      auto row = solve_row(a, i, d, out.degrees, rho, deg_a);
      if (!row) continue;
      out.H[i] = std::move(row->first);
      out.U[i] = std::move(row->second);
      out.degrees[i] = d;
      used += d;
      found = true;
    }
    if (!found) return std::nullopt;
  }
  if (!is_hermite_form(out.H) || !(multiply(out.U, a) == out.H)) return std::nullopt;
  return out;
}

HermiteForm hnf(const SkewMatrix<RatFunc>& a) {
  // The linearised systems grow as n^2 * deg^2; past a few columns row
  // reduction is much cheaper.
  constexpr std::size_t kDegreeVectorLimit = 3;
  if (a.size() <= kDegreeVectorLimit && max_degree(a) <= 2)
    if (auto h = hnf_degree_vector(a)) return std::move(*h);
  return hnf_euclidean(a);
}

SkewKS1 hnf_last_row_relation(const SkewMatrix<PolyKS1>& m, std::size_t target) {
  const std::size_t n = m.size();
  if (target >= n) throw Error("target column out of range");
  std::vector<std::size_t> order;
  for (std::size_t c = 0; c < n; ++c)
    if (c != target) order.push_back(c);
  order.push_back(target);
  SkewMatrix<PolyKS1> permuted(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (m[r].size() != n) throw Error("Hermite form needs a square matrix");
    for (std::size_t c : order) permuted[r].push_back(m[r][c]);
  }
  const HermiteForm form = hnf(lift(permuted));
  PolyKS1 l(1);
  for (const auto& e : form.U.back())
    for (const auto& c : e.coefficients()) l = lcm(l, c.denominator());
  std::vector<PolyKS1> cs;
  for (const auto& c : form.H.back().back().coefficients()) cs.push_back(to_polynomial(RatFunc(l) * c));
  return SkewKS1(std::move(cs));
}

CancellingRelation2 hnf_cancelling_relation(const LinrecSystem& sys, std::string_view target) {
  TargetMatrix tm = target_matrix(sys, target);
  if (tm.zero) return CancellingRelation2::from_operator(SkewKS1(PolyKS1(1)), std::string(target));
  return CancellingRelation2::from_operator(hnf_last_row_relation(tm.matrix, tm.target), std::string(target))
      .normalized();
}

}  // namespace ura
