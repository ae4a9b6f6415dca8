#include "ura/skewalg/ratfunc.hpp"

#include "ura/core/error.hpp"

namespace ura {

namespace {

PolyKS1 divide_exactly(const PolyKS1& a, const PolyKS1& b) {
  auto q = exact_divide(a, b);
  if (!q) throw InternalError("gcd does not divide operand");
  return *q;
}

bool single_term(const PolyKS1& p) { return p.terms().size() <= 1; }

}  // namespace

RatFunc::RatFunc(const PolyKS1& num, const PolyKS1& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw Error("rational function with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = PolyKS1(1);
    return;
  }
  if (!den_.is_constant()) {
    PolyKS1 g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_exactly(num_, g);
      den_ = divide_exactly(den_, g);
    }
  }
  Rat c = den_.content();
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    Rat inv = 1 / c;
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw Error("division by zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::shift_k(long amount) const {
  RatFunc r;
  r.num_ = num_.shift_k(amount);
  r.den_ = den_.shift_k(amount);
  return r;  // shifting preserves reducedness and content
}

Rat RatFunc::eval(const Rat& k, const Rat& s1) const {
  Rat d = den_.eval(k, s1);
  if (d == 0) throw Error("rational function evaluated at a pole");
  return num_.eval(k, s1) / d;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else if (den_.is_constant() && o.den_.is_constant()) {
    num_ *= 1 / den_.leading();
    PolyKS1 other = o.num_;
    other *= 1 / o.den_.leading();
    num_ += other;
    den_ = PolyKS1(1);
    return *this;
  } else {
    PolyKS1 g = gcd(den_, o.den_);
    PolyKS1 a = divide_exactly(den_, g), b = divide_exactly(o.den_, g);
    num_ = num_ * b + o.num_ * a;
    den_ = a * o.den_;
  }
  reduce();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ *= o.num_;
    num_ *= 1 / (den_.leading() * o.den_.leading());
    den_ = PolyKS1(1);
    return *this;
  }
  // Cross-cancel before multiplying to keep sizes small.
  PolyKS1 g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  PolyKS1 n1 = divide_exactly(num_, g1), d2 = divide_exactly(o.den_, g1);
  PolyKS1 n2 = divide_exactly(o.num_, g2), d1 = divide_exactly(den_, g2);
  num_ = n1 * n2;
  den_ = d1 * d2;
  Rat c = den_.content();
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    num_ *= 1 / c;
    den_ *= 1 / c;
  }
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

std::string RatFunc::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  std::string n = single_term(num_) ? num_.to_string() : "(" + num_.to_string() + ")";
  return n + "/(" + den_.to_string() + ")";
}

}  // namespace ura
