#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ura/counting/linrec.hpp"
#include "ura/skewalg/skew_poly.hpp"
#include "ura/zeroness/eliminate.hpp"
#include "ura/zeroness/relation.hpp"

namespace ura {

// Rows phi_n(S2^m P), ..., phi_n(S2^0 P), where phi_n lists the n+1
// coefficients from degree n down to degree 0.
template <class C>
std::vector<std::vector<C>> sylvester(const SkewPoly<C>& p, int n, int m) {
  if (m < 0 || n < 0 || (!p.is_zero() && p.degree() > n - m)) throw Error("Sylvester matrix degree violation");
  std::vector<std::vector<C>> out;
  for (int a = m; a >= 0; --a) {
    std::vector<C> row(static_cast<std::size_t>(n) + 1);
    SkewPoly<C> shifted = p.shifted_up(a);
    for (int e = 0; e <= shifted.degree(); ++e) row[static_cast<std::size_t>(n - e)] = shifted.coeff(e);
    out.push_back(std::move(row));
  }
  return out;
}

template <class C>
SkewMatrix<C> multiply(const SkewMatrix<C>& a, const SkewMatrix<C>& b) {
  const std::size_t inner = b.size();
  for (const auto& row : a)
    if (row.size() != inner) throw Error("matrix dimensions do not match");
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  SkewMatrix<C> out(a.size(), std::vector<SkewPoly<C>>(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t l = 0; l < inner; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (!b[l][j].is_zero()) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

SkewMatrix<RatFunc> lift(const SkewMatrix<PolyKS1>& m);
SkewMatrix<RatFunc> identity_matrix(std::size_t n);

// H = U A with H upper triangular, monic diagonal of degrees `degrees`, and
// every entry above a diagonal entry of smaller degree than it.
struct HermiteForm {
  SkewMatrix<RatFunc> H, U;
  std::vector<int> degrees;
};

bool is_hermite_form(const SkewMatrix<RatFunc>& h);

// Row reduction by left Euclidean division over Q(k, S1).
HermiteForm hnf_euclidean(const SkewMatrix<RatFunc>& a);

// Guesses the diagonal degrees from the last row up and solves the
// linearised system phi(H_i) = phi(u_i) * Sylvester(A) for each row.
// nullopt when no degree vector within n * deg A validates.
std::optional<HermiteForm> hnf_degree_vector(const SkewMatrix<RatFunc>& a);

// Degree-vector method for small inputs, Euclidean reduction otherwise.
HermiteForm hnf(const SkewMatrix<RatFunc>& a);

// Last-row relation of the Hermite form with the target moved last, cleared
// by the lcm of the denominators in the last row of U.
SkewKS1 hnf_last_row_relation(const SkewMatrix<PolyKS1>& m, std::size_t target);
CancellingRelation2 hnf_cancelling_relation(const LinrecSystem& sys, std::string_view target);

}  // namespace ura
