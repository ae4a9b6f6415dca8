#pragma once

#include <string>

#include "ura/skewalg/poly_ks1.hpp"

namespace ura {

// Element of Q(k, S1). Always reduced, with the denominator carrying
// integer content 1 and a positive leading coefficient.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Rat& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(Rat(c)) {}         // NOLINT(google-explicit-constructor)
  RatFunc(const PolyKS1& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const PolyKS1& num, const PolyKS1& den);

  const PolyKS1& numerator() const { return num_; }
  const PolyKS1& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc inverse() const;
  RatFunc shift_k(long amount) const;
  Rat eval(const Rat& k, const Rat& s1) const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  // "num" or "num/(den)"; numerator parenthesized when it has several terms.
  std::string to_string() const;

 private:
  void reduce();
  PolyKS1 num_, den_;
};

inline RatFunc shift_k(const RatFunc& r, long amount) { return r.shift_k(amount); }

}  // namespace ura
