#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ura/core/degree.hpp"
#include "ura/core/rational.hpp"

namespace ura {

// Univariate polynomial in k with rational coefficients, index = power of k.
class PolyK {
 public:
  PolyK() = default;
  PolyK(const Rat& constant);  // NOLINT(google-explicit-constructor)
  PolyK(long constant) : PolyK(Rat(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit PolyK(std::vector<Rat> coefficients);

  static PolyK k();
  static PolyK monomial(const Rat& c, int power);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  Rat coeff(int power) const;
  const Rat& leading() const { return coeffs_.back(); }
  const std::vector<Rat>& coefficients() const { return coeffs_; }

  Rat eval(const Rat& at) const;
  PolyK shift(long amount) const;  // k -> k + amount

  PolyK operator-() const;
  PolyK& operator+=(const PolyK& o);
  PolyK& operator-=(const PolyK& o);
  PolyK& operator*=(const PolyK& o);
  friend PolyK operator+(PolyK a, const PolyK& b) { return a += b; }
  friend PolyK operator-(PolyK a, const PolyK& b) { return a -= b; }
  friend PolyK operator*(const PolyK& a, const PolyK& b);
  friend bool operator==(const PolyK& a, const PolyK& b) { return a.coeffs_ == b.coeffs_; }

  // Compact rendering without spaces, e.g. "k^2+2*k-1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

// a = q*b + r with deg r < deg b; b must be nonzero.
std::pair<PolyK, PolyK> divmod(const PolyK& a, const PolyK& b);

// Monic gcd; gcd(0,0) = 0.
PolyK gcd(PolyK a, PolyK b);

}  // namespace ura
