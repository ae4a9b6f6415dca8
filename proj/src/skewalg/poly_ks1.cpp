#include "ura/skewalg/poly_ks1.hpp"

#include <algorithm>
#include <cstdint>

#include "ura/core/error.hpp"

namespace ura {

namespace {

bool term_less(int k1, int s1, int k2, int s2) {
  if (k1 + s1 != k2 + s2) return k1 + s1 < k2 + s2;
  return k1 < k2;
}

}  // namespace

PolyKS1::PolyKS1(const Rat& constant) {
  if (constant != 0) terms_.push_back({0, 0, constant});
}

PolyKS1::PolyKS1(const PolyK& p) {
  for (int i = 0; i <= p.degree(); ++i)
    if (p.coeff(i) != 0) terms_.push_back({i, 0, p.coeff(i)});
}

PolyKS1 PolyKS1::monomial(const Rat& c, int k_degree, int s1_degree) {
  PolyKS1 p;
  if (c != 0) p.terms_.push_back({k_degree, s1_degree, c});
  return p;
}

PolyKS1 PolyKS1::from_s1_coefficients(const std::vector<PolyK>& coeffs) {
  PolyKS1 p;
  for (std::size_t s = 0; s < coeffs.size(); ++s)
    for (int i = 0; i <= coeffs[s].degree(); ++i)
      if (coeffs[s].coeff(i) != 0) p.terms_.push_back({i, static_cast<int>(s), coeffs[s].coeff(i)});
  std::sort(p.terms_.begin(), p.terms_.end(),
            [](const Term& a, const Term& b) { return term_less(a.k, a.s, b.k, b.s); });
  return p;
}

bool PolyKS1::is_k_only() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.s == 0; });
}

int PolyKS1::degree() const { return terms_.empty() ? kZeroDegree : terms_.back().k + terms_.back().s; }

int PolyKS1::degree_k() const {
  int d = kZeroDegree;
  for (const Term& t : terms_) d = std::max(d, t.k);
  return d;
}

int PolyKS1::degree_s1() const {
  int d = kZeroDegree;
  for (const Term& t : terms_) d = std::max(d, t.s);
  return d;
}

Rat PolyKS1::coeff(int k_degree, int s1_degree) const {
  for (const Term& t : terms_)
    if (t.k == k_degree && t.s == s1_degree) return t.c;
  return Rat(0);
}

std::vector<PolyK> PolyKS1::s1_coefficients() const {
  if (terms_.empty()) return {};
  std::vector<std::vector<Rat>> raw(static_cast<std::size_t>(degree_s1()) + 1);
  for (const Term& t : terms_) {
    auto& v = raw[static_cast<std::size_t>(t.s)];
    if (v.size() <= static_cast<std::size_t>(t.k)) v.resize(static_cast<std::size_t>(t.k) + 1, Rat(0));
    v[static_cast<std::size_t>(t.k)] = t.c;
  }
  std::vector<PolyK> out;
  out.reserve(raw.size());
  for (auto& v : raw) out.emplace_back(std::move(v));
  return out;
}

PolyK PolyKS1::as_poly_k() const {
  if (!is_k_only()) throw InternalError("polynomial mentions S1");
  auto cs = s1_coefficients();
  return cs.empty() ? PolyK() : cs[0];
}

Rat PolyKS1::eval(const Rat& k, const Rat& s1) const {
  Rat acc(0);
  for (const Term& t : terms_) {
    Rat v = t.c;
    for (int i = 0; i < t.k; ++i) v *= k;
    for (int i = 0; i < t.s; ++i) v *= s1;
    acc += v;
  }
  return acc;
}

PolyKS1 PolyKS1::shift_k(long amount) const {
  if (amount == 0 || degree_k() <= 0) return *this;
  auto cs = s1_coefficients();
  for (auto& c : cs) c = c.shift(amount);
  return from_s1_coefficients(cs);
}

Rat PolyKS1::content() const {
  if (terms_.empty()) return Rat(1);
  Int num_gcd = 0, den_lcm = 1;
  for (const Term& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
  }
  Rat c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

PolyKS1 PolyKS1::normalized() const {
  if (terms_.empty()) return *this;
  Rat c = content();
  if (leading() < 0) c = -c;
  if (c == 1) return *this;
  PolyKS1 p = *this;
  Rat inv = 1 / c;
  p *= inv;
  return p;
}

PolyKS1 PolyKS1::operator-() const {
  PolyKS1 p = *this;
  for (Term& t : p.terms_) t.c = -t.c;
  return p;
}

void PolyKS1::add_scaled(const PolyKS1& o, const Rat& factor) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && term_less(terms_[i].k, terms_[i].s, o.terms_[j].k, o.terms_[j].s))) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || term_less(o.terms_[j].k, o.terms_[j].s, terms_[i].k, terms_[i].s)) {
      out.push_back({o.terms_[j].k, o.terms_[j].s, o.terms_[j].c * factor});
      ++j;
    } else {
      Rat c = terms_[i].c + o.terms_[j].c * factor;
      if (c != 0) out.push_back({terms_[i].k, terms_[i].s, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

PolyKS1& PolyKS1::operator+=(const PolyKS1& o) {
  add_scaled(o, Rat(1));
  return *this;
}

PolyKS1& PolyKS1::operator-=(const PolyKS1& o) {
  add_scaled(o, Rat(-1));
  return *this;
}

PolyKS1& PolyKS1::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (Term& t : terms_) t.c *= c;
  }
  return *this;
}

PolyKS1 operator*(const PolyKS1& a, const PolyKS1& b) {
  PolyKS1 r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.is_constant()) {
    r = b;
    r *= a.leading();
    return r;
  }
  if (b.is_constant()) {
    r = a;
    r *= b.leading();
    return r;
  }
  const int kd = a.degree_k() + b.degree_k(), sd = a.degree_s1() + b.degree_s1();
  const auto width = static_cast<std::size_t>(sd) + 1;
  std::vector<Rat> dense((static_cast<std::size_t>(kd) + 1) * width);
  std::vector<bool> touched(dense.size(), false);
  Rat prod;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      std::size_t idx = static_cast<std::size_t>(x.k + y.k) * width + static_cast<std::size_t>(x.s + y.s);
      mpq_mul(prod.get_mpq_t(), x.c.get_mpq_t(), y.c.get_mpq_t());
      dense[idx] += prod;
      touched[idx] = true;
    }
  for (std::size_t idx = 0; idx < dense.size(); ++idx)
    if (touched[idx] && dense[idx] != 0)
      r.terms_.push_back({static_cast<int>(idx / width), static_cast<int>(idx % width), std::move(dense[idx])});
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const PolyKS1::Term& p, const PolyKS1::Term& q) { return term_less(p.k, p.s, q.k, q.s); });
  return r;
}

PolyKS1& PolyKS1::operator*=(const PolyKS1& o) { return *this = *this * o; }

std::string PolyKS1::to_string() const {
  if (terms_.empty()) return "0";
  auto cs = s1_coefficients();
  std::string out;
  for (int s = static_cast<int>(cs.size()) - 1; s >= 0; --s) {
    PolyK c = cs[static_cast<std::size_t>(s)];
    if (c.is_zero()) continue;
    bool negative = false;
    // Pull the sign out when every coefficient is negative.
    if (std::all_of(c.coefficients().begin(), c.coefficients().end(), [](const Rat& r) { return r <= 0; })) {
      negative = true;
      c = -c;
    }
    std::string mono = s == 0 ? "" : (s == 1 ? "S1" : "S1^" + std::to_string(s));
    std::string body;
    const bool compound = std::count_if(c.coefficients().begin(), c.coefficients().end(),
                                        [](const Rat& r) { return r != 0; }) > 1;
    if (mono.empty()) {
      body = compound && (!out.empty() || negative) ? "(" + c.to_string() + ")" : c.to_string();
    } else if (c == PolyK(1)) {
      body = mono;
    } else {
      body = (compound ? "(" + c.to_string() + ")" : c.to_string()) + "*" + mono;
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

namespace {

// Integer arithmetic for gcd and exact division: ZPoly is Z[k] (index = power
// of k), ZZ is Z[k][S1] (index = power of S1). Both are kept trimmed.
using ZPoly = std::vector<Int>;
using ZZ = std::vector<ZPoly>;

void zp_trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int zp_deg(const ZPoly& p) { return p.empty() ? kZeroDegree : static_cast<int>(p.size()) - 1; }

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  zp_trim(r);
  return r;
}

// a -= b * x^shift
void zp_sub_shifted(ZPoly& a, const ZPoly& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= b[i];
  zp_trim(a);
}

Int zp_content(const ZPoly& p) {
  Int g = 0;
  for (const Int& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void zp_divide_int(ZPoly& p, const Int& c) {
  if (c == 1) return;
  for (Int& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

// Arithmetic modulo the Mersenne prime 2^61 - 1, used to prove coprimality
// cheaply before running a remainder sequence.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;
using ModPoly = std::vector<std::uint64_t>;

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e != 0; e >>= 1, a = mod_mul(a, a))
    if (e & 1) r = mod_mul(r, a);
  return r;
}

std::uint64_t reduce_mod(const Int& x) { return mpz_fdiv_ui(x.get_mpz_t(), kPrime); }

void mod_trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Degree of gcd over F_p; -1 for gcd(0, 0).
int mod_gcd_degree(ModPoly a, ModPoly b) {
  mod_trim(a);
  mod_trim(b);
  while (!b.empty()) {
    if (a.size() < b.size()) std::swap(a, b);
    const std::uint64_t inv = mod_pow(b.back(), kPrime - 2);
    while (a.size() >= b.size() && !a.empty()) {
      const std::uint64_t f = mod_mul(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[i + shift] = (a[i + shift] + kPrime - mod_mul(f, b[i])) % kPrime;
      mod_trim(a);
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

ModPoly to_mod(const ZPoly& p) {
  ModPoly out;
  out.reserve(p.size());
  for (const Int& x : p) out.push_back(reduce_mod(x));
  return out;
}

std::uint64_t eval_mod(const ZPoly& p, std::uint64_t at) {
  std::uint64_t acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = (mod_mul(acc, at) + reduce_mod(*it)) % kPrime;
  return acc;
}

// True only when gcd(a, b) in Q[k] is provably constant: the image of the
// gcd keeps its degree when lc(a) survives reduction.
bool zp_provably_coprime(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return false;
  if (reduce_mod(a.back()) == 0) return false;
  return mod_gcd_degree(to_mod(a), to_mod(b)) == 0;
}

// a / b in Z[k] when the division is exact.
std::optional<ZPoly> zp_exact_div(ZPoly a, const ZPoly& b) {
  if (b.empty()) throw InternalError("division by zero in Z[k]");
  if (a.empty()) return ZPoly{};
  const int db = zp_deg(b);
  if (zp_deg(a) < db) return std::nullopt;
  ZPoly q(a.size() - b.size() + 1);
  const Int& lb = b.back();
  while (!a.empty()) {
    const int da = zp_deg(a);
    if (da < db) return std::nullopt;
    if (!mpz_divisible_p(a.back().get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Int t;
    mpz_divexact(t.get_mpz_t(), a.back().get_mpz_t(), lb.get_mpz_t());
    const auto shift = static_cast<std::size_t>(da - db);
    q[shift] = t;
    for (std::size_t i = 0; i < b.size(); ++i) mpz_submul(a[i + shift].get_mpz_t(), t.get_mpz_t(), b[i].get_mpz_t());
    zp_trim(a);
  }
  return q;
}

ZPoly zp_exact_div_or_throw(const ZPoly& a, const ZPoly& b) {
  auto q = zp_exact_div(a, b);
  if (!q) throw InternalError("inexact division in Z[k]");
  return std::move(*q);
}

// lc(b)^(deg a - deg b + 1) * a mod b, generic over the coefficient ring.
template <class P, class Mul, class SubShift, class Scale>
P pseudo_remainder(P a, const P& b, Mul mul, SubShift sub_shift, Scale scale) {
  const auto db = b.size() - 1;
  const auto& lb = b.back();
  int steps = static_cast<int>(a.size()) - static_cast<int>(db);
  while (!a.empty() && a.size() - 1 >= db) {
    auto la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    scale(a, lb);
    sub_shift(a, b, la, shift, mul);
    --steps;
  }
  for (; steps > 0; --steps) scale(a, lb);
  return a;
}

ZPoly zp_primitive(ZPoly p) {
  Int c = zp_content(p);
  if (!p.empty() && p.back() < 0) c = -c;
  if (c != 0) zp_divide_int(p, c);
  return p;
}

// gcd in Z[k] with positive leading coefficient, via primitive remainders.
ZPoly zp_gcd(ZPoly a, ZPoly b) {
  if (a.empty()) {
    if (!b.empty() && b.back() < 0)
      for (Int& x : b) x = -x;
    return b;
  }
  if (b.empty()) return zp_gcd(b, a);
  Int c;
  {
    Int ca = zp_content(a), cb = zp_content(b);
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }
  if (zp_provably_coprime(a, b) || zp_provably_coprime(b, a)) return ZPoly{c};
  a = zp_primitive(std::move(a));
  b = zp_primitive(std::move(b));
  if (zp_deg(a) < zp_deg(b)) std::swap(a, b);
  while (zp_deg(b) > 0) {
    ZPoly r = pseudo_remainder(
        a, b, nullptr,
        [](ZPoly& x, const ZPoly& y, const Int& lx, std::size_t shift, std::nullptr_t) {
          for (std::size_t i = 0; i < y.size(); ++i) mpz_submul(x[i + shift].get_mpz_t(), lx.get_mpz_t(), y[i].get_mpz_t());
          zp_trim(x);
        },
        [](ZPoly& x, const Int& f) {
          for (Int& v : x) v *= f;
        });
    a = std::move(b);
    b = zp_primitive(std::move(r));
  }
  if (!b.empty()) return ZPoly{c};
  for (Int& x : a) x *= c;
  return a;
}

void zz_trim(ZZ& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

int zz_deg(const ZZ& p) { return p.empty() ? kZeroDegree : static_cast<int>(p.size()) - 1; }

ZPoly zz_content(const ZZ& p) {
  ZPoly g;
  for (const ZPoly& c : p) {
    g = zp_gcd(g, c);
    if (g.size() == 1 && g[0] == 1) break;
  }
  return g;
}

ZZ zz_divide(const ZZ& p, const ZPoly& c) {
  ZZ out;
  out.reserve(p.size());
  for (const ZPoly& x : p) out.push_back(zp_exact_div_or_throw(x, c));
  return out;
}

ZPoly zp_power(const ZPoly& p, int e) {
  ZPoly r{Int(1)};
  for (int i = 0; i < e; ++i) r = zp_mul(r, p);
  return r;
}

ZZ zz_pseudo_remainder(const ZZ& a, const ZZ& b) {
  return pseudo_remainder(
      a, b, nullptr,
      [](ZZ& x, const ZZ& y, const ZPoly& lx, std::size_t shift, std::nullptr_t) {
        for (std::size_t i = 0; i < y.size(); ++i) {
          ZPoly t = zp_mul(lx, y[i]);
          zp_sub_shifted(x[i + shift], t, 0);
        }
        zz_trim(x);
      },
      [](ZZ& x, const ZPoly& f) {
        for (ZPoly& v : x) v = zp_mul(v, f);
      });
}

// Subresultant remainder sequence over Z[k]; inputs primitive, nonzero.
ZZ zz_primitive_gcd(ZZ a, ZZ b) {
  if (zz_deg(a) < zz_deg(b)) std::swap(a, b);
  ZPoly g{Int(1)}, h{Int(1)};
  while (true) {
    const int delta = zz_deg(a) - zz_deg(b);
    ZZ r = zz_pseudo_remainder(a, b);
    if (r.empty()) break;
    if (zz_deg(r) == 0) return ZZ{ZPoly{Int(1)}};
    a = std::move(b);
    b = zz_divide(r, zp_mul(g, zp_power(h, delta)));
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = zp_exact_div_or_throw(zp_power(g, delta), zp_power(h, delta - 1));
    }
  }
  return zz_divide(b, zz_content(b));
}

// True only when gcd(a, b) provably has S1-degree 0. Specialising k to a
// point where lc(a) survives keeps the S1-degree of the gcd.
bool zz_provably_free_of_s1(const ZZ& a, const ZZ& b) {
  for (std::uint64_t at : {7u, 1009u, 65537u}) {
    if (eval_mod(a.back(), at) == 0) continue;
    ModPoly ia, ib;
    for (const ZPoly& row : a) ia.push_back(eval_mod(row, at));
    for (const ZPoly& row : b) ib.push_back(eval_mod(row, at));
    return mod_gcd_degree(ia, ib) == 0;
  }
  return false;
}

// Primitive integer form: p = scale * result.
ZZ to_integer(const PolyKS1& p, Rat* scale) {
  Rat c = p.content();
  if (scale != nullptr) *scale = c;
  ZZ out(static_cast<std::size_t>(p.degree_s1()) + 1);
  for (const auto& t : p.terms()) {
    ZPoly& row = out[static_cast<std::size_t>(t.s)];
    if (row.size() <= static_cast<std::size_t>(t.k)) row.resize(static_cast<std::size_t>(t.k) + 1);
    Rat v = t.c / c;
    row[static_cast<std::size_t>(t.k)] = v.get_num();
  }
  return out;
}

PolyKS1 from_integer(const ZZ& p) {
  std::vector<PolyK> cs;
  cs.reserve(p.size());
  for (const ZPoly& row : p) {
    std::vector<Rat> r;
    r.reserve(row.size());
    for (const Int& x : row) r.emplace_back(x);
    cs.emplace_back(std::move(r));
  }
  return PolyKS1::from_s1_coefficients(cs);
}

}  // namespace

PolyKS1 gcd(const PolyKS1& a, const PolyKS1& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  if (a.is_constant() || b.is_constant()) return PolyKS1(1);
  ZZ ua = to_integer(a, nullptr), ub = to_integer(b, nullptr);
  ZPoly ca = zz_content(ua), cb = zz_content(ub);
  ZPoly c = zp_gcd(ca, cb);
  ZZ result;
  if (zz_deg(ua) == 0 || zz_deg(ub) == 0 || zz_provably_free_of_s1(ua, ub) || zz_provably_free_of_s1(ub, ua)) {
    result = ZZ{c};
  } else {
    result = zz_primitive_gcd(zz_divide(ua, ca), zz_divide(ub, cb));
    for (ZPoly& x : result) x = zp_mul(x, c);
  }
  return from_integer(result).normalized();
}

std::optional<PolyKS1> exact_divide(const PolyKS1& a, const PolyKS1& b) {
  if (b.is_zero()) throw Error("division by zero polynomial");
  if (a.is_zero()) return PolyKS1();
  if (b.is_constant()) {
    PolyKS1 q = a;
    q *= 1 / b.leading();
    return q;
  }
  // Gauss: a/b is a polynomial iff the primitive parts divide over Z.
  Rat sa, sb;
  ZZ r = to_integer(a, &sa), d = to_integer(b, &sb);
  const int dd = zz_deg(d);
  if (zz_deg(r) < dd) return std::nullopt;
  ZZ q(r.size() - d.size() + 1);
  while (!r.empty()) {
    if (zz_deg(r) < dd) return std::nullopt;
    auto t = zp_exact_div(r.back(), d.back());
    if (!t) return std::nullopt;
    const auto shift = static_cast<std::size_t>(zz_deg(r) - dd);
    for (std::size_t i = 0; i < d.size(); ++i) zp_sub_shifted(r[i + shift], zp_mul(*t, d[i]), 0);
    q[shift] = std::move(*t);
    zz_trim(r);
  }
  PolyKS1 out = from_integer(q);
  out *= sa / sb;
  return out;
}

}  // namespace ura
