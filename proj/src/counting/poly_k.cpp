#include "ura/counting/poly_k.hpp"

#include "ura/core/error.hpp"

namespace ura {

PolyK::PolyK(const Rat& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

PolyK::PolyK(std::vector<Rat> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

PolyK PolyK::k() { return monomial(Rat(1), 1); }

PolyK PolyK::monomial(const Rat& c, int power) {
  PolyK p;
  if (c == 0) return p;
  p.coeffs_.assign(static_cast<std::size_t>(power) + 1, Rat(0));
  p.coeffs_.back() = c;
  return p;
}

void PolyK::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat PolyK::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[static_cast<std::size_t>(power)];
}

Rat PolyK::eval(const Rat& at) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

PolyK PolyK::shift(long amount) const {
  if (amount == 0 || coeffs_.size() <= 1) return *this;
  // Horner in the shifted variable: p(k + a).
  PolyK result;
  PolyK lin(std::vector<Rat>{Rat(amount), Rat(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    result *= lin;
    result += PolyK(*it);
  }
  return result;
}

PolyK PolyK::operator-() const {
  PolyK r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

PolyK& PolyK::operator+=(const PolyK& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

PolyK& PolyK::operator-=(const PolyK& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

PolyK operator*(const PolyK& a, const PolyK& b) {
  PolyK r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

PolyK& PolyK::operator*=(const PolyK& o) { return *this = *this * o; }

std::string PolyK::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rat mag = abs(c);
    bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    std::string mono = i == 0 ? "" : (i == 1 ? "k" : "k^" + std::to_string(i));
    if (mono.empty()) {
      out += to_display_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_display_string(mag) + "*" + mono;
    }
  }
  return out;
}

std::pair<PolyK, PolyK> divmod(const PolyK& a, const PolyK& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  PolyK q, r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    PolyK t = PolyK::monomial(r.leading() / b.leading(), r.degree() - b.degree());
    q += t;
    r -= t * b;
  }
  return {q, r};
}

PolyK gcd(PolyK a, PolyK b) {
  while (!b.is_zero()) {
    PolyK r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rat lead = a.leading();
  std::vector<Rat> cs = a.coefficients();
  for (auto& c : cs) c /= lead;
  return PolyK(std::move(cs));
}

}  // namespace ura
