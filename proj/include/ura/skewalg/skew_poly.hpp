#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ura/core/degree.hpp"
#include "ura/core/error.hpp"
#include "ura/counting/linrec.hpp"
#include "ura/skewalg/poly_ks1.hpp"
#include "ura/skewalg/ratfunc.hpp"

namespace ura {

namespace skew_detail {

// Unqualified so that coefficient types outside this namespace are found.
template <class C>
C shift_coefficient(const C& c, long amount) {
  return shift_k(c, amount);
}

}  // namespace skew_detail

// Polynomial in S2 with coefficients in C, subject to S2 * c = shift_k(c, 1) * S2.
// C needs value semantics, ring operators, is_zero() and a free shift_k(C, long).
template <class C>
class SkewPoly {
 public:
  SkewPoly() = default;
  SkewPoly(const C& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) coeffs_.push_back(c);
  }
  explicit SkewPoly(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static SkewPoly monomial(const C& c, int degree) {
    SkewPoly p;
    if (!c.is_zero()) {
      p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, C());
      p.coeffs_.back() = c;
    }
    return p;
  }
  static SkewPoly s2() { return monomial(C(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  C coeff(int i) const {
    return i >= 0 && static_cast<std::size_t>(i) < coeffs_.size() ? coeffs_[static_cast<std::size_t>(i)] : C();
  }
  const C& leading() const { return coeffs_.back(); }
  const std::vector<C>& coefficients() const { return coeffs_; }

  // Applies k -> k + amount to every coefficient.
  SkewPoly shift_k(long amount) const {
    SkewPoly p;
    p.coeffs_.reserve(coeffs_.size());
    for (const C& c : coeffs_) p.coeffs_.push_back(skew_detail::shift_coefficient(c, amount));
    return p;
  }

  // c * this
  SkewPoly scaled_left(const C& c) const {
    if (c.is_zero()) return SkewPoly();
    SkewPoly p = *this;
    for (C& x : p.coeffs_) x = c * x;
    return p;
  }

  // S2^m * this
  SkewPoly shifted_up(int m) const {
    if (is_zero() || m == 0) return *this;
    SkewPoly p;
    p.coeffs_.assign(static_cast<std::size_t>(m), C());
    for (const C& c : coeffs_) p.coeffs_.push_back(skew_detail::shift_coefficient(c, static_cast<long>(m)));
    return p;
  }

  SkewPoly operator-() const {
    SkewPoly p = *this;
    for (C& x : p.coeffs_) x = -x;
    return p;
  }
  SkewPoly& operator+=(const SkewPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  SkewPoly& operator-=(const SkewPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend SkewPoly operator+(SkewPoly a, const SkewPoly& b) { return a += b; }
  friend SkewPoly operator-(SkewPoly a, const SkewPoly& b) { return a -= b; }
  friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
    if (a.is_zero() || b.is_zero()) return SkewPoly();
    std::vector<C> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        out[i + j] += a.coeffs_[i] * skew_detail::shift_coefficient(b.coeffs_[j], static_cast<long>(i));
      }
    }
    return SkewPoly(std::move(out));
  }
  SkewPoly& operator*=(const SkewPoly& o) { return *this = *this * o; }
  friend bool operator==(const SkewPoly& a, const SkewPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<C> coeffs_;
};

using SkewKS1 = SkewPoly<PolyKS1>;
using SkewRat = SkewPoly<RatFunc>;

template <class C>
SkewPoly<C> shift_k(const SkewPoly<C>& p, long amount) {
  return p.shift_k(amount);
}

template <class C>
struct PseudoDivision {
  C multiplier;  // a in a*A = P*B + Q
  SkewPoly<C> quotient;
  SkewPoly<C> remainder;
};

namespace skew_detail {

// Joint content of a list of coefficients; 1 when all are zero.
template <class C>
Rat joint_content(std::initializer_list<const SkewPoly<C>*> polys, const C* extra) {
  Int num = 0, den = 1;
  auto absorb = [&](const C& c) {
    if (c.is_zero()) return;
    Rat r = c.content();
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), r.get_num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den().get_mpz_t());
  };
  if (extra != nullptr) absorb(*extra);
  for (const SkewPoly<C>* p : polys)
    for (const C& c : p->coefficients()) absorb(c);
  if (num == 0) return Rat(1);
  Rat out(num, den);
  out.canonicalize();
  return out;
}

template <class C>
SkewPoly<C> scale(const SkewPoly<C>& p, const Rat& factor) {
  std::vector<C> cs = p.coefficients();
  for (C& c : cs) c *= factor;
  return SkewPoly<C>(std::move(cs));
}

template <class C>
C divide_or_throw(const C& a, const C& b);

// gcd of every coefficient of the given polynomials; zero when all vanish.
template <class C>
C joint_gcd(std::initializer_list<const SkewPoly<C>*> polys) {
  C g;
  for (const SkewPoly<C>* p : polys)
    for (const C& c : p->coefficients()) {
      if (c.is_zero()) continue;
      g = g.is_zero() ? c : gcd(g, c);
      if (g.degree() <= 0) return g;
    }
  return g;
}

template <class C>
SkewPoly<C> divide_coefficients(const SkewPoly<C>& p, const C& d) {
  std::vector<C> cs = p.coefficients();
  for (C& c : cs) c = divide_or_throw(c, d);
  return SkewPoly<C>(std::move(cs));
}

template <class C>
C divide_or_throw(const C& a, const C& b) {
  auto q = exact_divide(a, b);
  if (!q) throw InternalError("gcd does not divide operand");
  return *q;
}

}  // namespace skew_detail

// a*A = P*B + Q with deg Q < deg B. Each step cancels the leading term with
// the gcd-reduced pair a' = shift(b_n)/g, b' = r_m/g, and the triple
// (a, P, Q) is divided by its rational content.
// C additionally needs gcd, exact_divide, content(), leading() and *= Rat.
template <class C>
PseudoDivision<C> pseudo_division(const SkewPoly<C>& A, const SkewPoly<C>& B) {
  if (B.is_zero()) throw Error("pseudo-division by zero skew polynomial");
  PseudoDivision<C> out{C(1), SkewPoly<C>(), A};
  const int n = B.degree();
  while (!out.remainder.is_zero() && out.remainder.degree() >= n) {
    const int m = out.remainder.degree();
    C lead_b = shift_k(B.leading(), m - n);
    C g = gcd(out.remainder.leading(), lead_b);
    C ap = skew_detail::divide_or_throw(lead_b, g);
    C bp = skew_detail::divide_or_throw(out.remainder.leading(), g);
    if (ap.leading() < 0) {
      ap = -ap;
      bp = -bp;
    }
    out.remainder = out.remainder.scaled_left(ap) - B.shifted_up(m - n).scaled_left(bp);
    out.quotient = out.quotient.scaled_left(ap) + SkewPoly<C>::monomial(bp, m - n);
    out.multiplier = ap * out.multiplier;
    Rat c = skew_detail::joint_content<C>({&out.quotient, &out.remainder}, &out.multiplier);
    if (c != 1) {
      Rat inv = 1 / c;
      out.multiplier *= inv;
      out.quotient = skew_detail::scale(out.quotient, inv);
      out.remainder = skew_detail::scale(out.remainder, inv);
    }
  }
  return out;
}

template <class C>
struct CommonLeftMultiple {
  SkewPoly<C> left;   // C in C*A = D*B
  SkewPoly<C> right;  // D
};

// Nonzero C, D with C*A = D*B, deg C <= deg B and deg D <= deg A, via the
// remainder sequence of repeated pseudo-division.
template <class C>
CommonLeftMultiple<C> clm(const SkewPoly<C>& A, const SkewPoly<C>& B) {
  if (A.is_zero() || B.is_zero()) throw Error("common left multiple of zero");
  if (A.degree() < B.degree()) {
    auto swapped = clm(B, A);
    return {swapped.right, swapped.left};
  }
  SkewPoly<C> a_prev = A, a_cur = B;
  SkewPoly<C> s_prev(C(1)), s_cur, t_prev, t_cur(C(1));
  while (true) {
    PseudoDivision<C> pd = pseudo_division(a_prev, a_cur);
    SkewPoly<C> s_next = s_prev.scaled_left(pd.multiplier) - pd.quotient * s_cur;
    SkewPoly<C> t_next = t_prev.scaled_left(pd.multiplier) - pd.quotient * t_cur;
    SkewPoly<C> a_next = pd.remainder;
    // The identity S*A + T*B = A_i is left-linear, so a common factor of all
    // three can be divided out; this keeps the cofactors primitive.
    C g = skew_detail::joint_gcd<C>({&s_next, &t_next, &a_next});
    if (g.degree() > 0) {
      s_next = skew_detail::divide_coefficients(s_next, g);
      t_next = skew_detail::divide_coefficients(t_next, g);
      a_next = skew_detail::divide_coefficients(a_next, g);
    }
    Rat c = skew_detail::joint_content<C>({&s_next, &t_next, &a_next}, nullptr);
    if (c != 1) {
      Rat inv = 1 / c;
      s_next = skew_detail::scale(s_next, inv);
      t_next = skew_detail::scale(t_next, inv);
      a_next = skew_detail::scale(a_next, inv);
    }
    if (a_next.is_zero()) {
      SkewPoly<C> left = s_next, right = -t_next;
      if (left.leading().leading() < 0) {
        left = -left;
        right = -right;
      }
      return {left, right};
    }
    a_prev = std::move(a_cur);
    a_cur = std::move(a_next);
    s_prev = std::move(s_cur);
    s_cur = std::move(s_next);
    t_prev = std::move(t_cur);
    t_cur = std::move(t_next);
  }
}

// Over a field of coefficients: A = Q*B + R with deg R < deg B.
template <class C>
std::pair<SkewPoly<C>, SkewPoly<C>> left_divmod(const SkewPoly<C>& A, const SkewPoly<C>& B) {
  if (B.is_zero()) throw Error("division by zero skew polynomial");
  SkewPoly<C> q, r = A;
  const int n = B.degree();
  while (!r.is_zero() && r.degree() >= n) {
    const int m = r.degree();
    C factor = r.leading() / shift_k(B.leading(), m - n);
    q += SkewPoly<C>::monomial(factor, m - n);
    r -= B.shifted_up(m - n).scaled_left(factor);
  }
  return {q, r};
}

inline bool is_single_term(const PolyKS1& c) { return c.terms().size() <= 1; }
inline bool is_single_term(const RatFunc& c) {
  return c.is_polynomial() && is_single_term(c.numerator());
}

// Decreasing powers of S2, e.g. "(S1^2 - S1 - (k+1))*S2^2 - S2".
template <class C>
std::string to_string(const SkewPoly<C>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int j = p.degree(); j >= 0; --j) {
    const C& c = p.coefficients()[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    std::string mono = j == 0 ? "" : (j == 1 ? "S2" : "S2^" + std::to_string(j));
    std::string body;
    bool negative = false;
    if (is_single_term(c)) {
      body = c.to_string();
      if (body.front() == '-') {
        negative = true;
        body.erase(0, 1);
      }
      if (!mono.empty()) body = body == "1" ? mono : body + "*" + mono;
    } else if (mono.empty()) {
      body = out.empty() ? c.to_string() : "(" + c.to_string() + ")";
    } else {
      body = "(" + c.to_string() + ")*" + mono;
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

// Reads the rendering grammar: sums, products, powers, parentheses, integer
// literals, and the names k, S1, S2. Division is allowed by S2-free factors
// (by rational constants only, for polynomial coefficients).
SkewKS1 parse_skew_ks1(std::string_view text);
SkewRat parse_skew_rat(std::string_view text);

// (P f)(n, k) for the table column `var`, where S1 shifts n and S2 shifts k.
// The result has one column `name` and shrinks by the largest shifts.
SequenceTable apply_operator(const SkewKS1& p, const SequenceTable& table, std::size_t var,
                             const std::string& name);

}  // namespace ura
