#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ura/core/degree.hpp"
#include "ura/core/rational.hpp"
#include "ura/counting/poly_k.hpp"

namespace ura {

// Commutative bivariate polynomial in k and S1 with rational coefficients.
// Terms are kept sorted by (total degree, k-degree), without zeros.
class PolyKS1 {
 public:
  struct Term {
    int k = 0;
    int s = 0;
    Rat c;
    friend bool operator==(const Term&, const Term&) = default;
  };

  PolyKS1() = default;
  PolyKS1(const Rat& constant);    // NOLINT(google-explicit-constructor)
  PolyKS1(long constant) : PolyKS1(Rat(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit PolyKS1(const PolyK& p);  // k only
  static PolyKS1 monomial(const Rat& c, int k_degree, int s1_degree);
  static PolyKS1 k() { return monomial(Rat(1), 1, 0); }
  static PolyKS1 s1() { return monomial(Rat(1), 0, 1); }
  // sum_i coeffs[i](k) * S1^i
  static PolyKS1 from_s1_coefficients(const std::vector<PolyK>& coeffs);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].k == 0 && terms_[0].s == 0); }
  bool is_k_only() const;
  int degree() const;  // total degree
  int degree_k() const;
  int degree_s1() const;
  const std::vector<Term>& terms() const { return terms_; }
  Rat coeff(int k_degree, int s1_degree) const;
  // Coefficient of the greatest term in the canonical order.
  const Rat& leading() const { return terms_.back().c; }
  std::vector<PolyK> s1_coefficients() const;
  // Only valid when is_k_only().
  PolyK as_poly_k() const;

  Rat eval(const Rat& k, const Rat& s1) const;
  PolyKS1 shift_k(long amount) const;

  // Positive rational c with p/c integral, coprime, and leading term positive
  // after dividing by sign(leading) * c.
  Rat content() const;
  // p divided by sign(leading) * content(); zero stays zero.
  PolyKS1 normalized() const;

  PolyKS1 operator-() const;
  PolyKS1& operator+=(const PolyKS1& o);
  PolyKS1& operator-=(const PolyKS1& o);
  PolyKS1& operator*=(const Rat& c);
  PolyKS1& operator*=(const PolyKS1& o);
  friend PolyKS1 operator+(PolyKS1 a, const PolyKS1& b) { return a += b; }
  friend PolyKS1 operator-(PolyKS1 a, const PolyKS1& b) { return a -= b; }
  friend PolyKS1 operator*(const PolyKS1& a, const PolyKS1& b);
  friend bool operator==(const PolyKS1& a, const PolyKS1& b) { return a.terms_ == b.terms_; }

  // Grouped by powers of S1, e.g. "S1^2 - S1 - (k+1)".
  std::string to_string() const;

 private:
  void add_scaled(const PolyKS1& o, const Rat& factor);
  std::vector<Term> terms_;
};

inline PolyKS1 shift_k(const PolyKS1& p, long amount) { return p.shift_k(amount); }

// gcd over Q[k, S1], normalized; gcd(0, 0) = 0.
PolyKS1 gcd(const PolyKS1& a, const PolyKS1& b);

// a / b when b divides a exactly.
std::optional<PolyKS1> exact_divide(const PolyKS1& a, const PolyKS1& b);

}  // namespace ura
