#include <doctest.h>

#include <random>

#include "support.hpp"
#include "ura/core/error.hpp"
#include "ura/skewalg/skew_poly.hpp"

using namespace ura;

namespace {

PolyKS1 K() { return PolyKS1::k(); }
PolyKS1 S1() { return PolyKS1::s1(); }
SkewKS1 S2() { return SkewKS1::s2(); }
SkewKS1 lift(const PolyKS1& c) { return SkewKS1(c); }

PolyKS1 random_coefficient(std::mt19937_64& rng, int max_deg, int density = 3) {
  std::uniform_int_distribution<int> deg(0, max_deg), coin(0, density), val(-3, 3);
  PolyKS1 p;
  for (int a = 0; a <= max_deg; ++a)
    for (int b = 0; a + b <= max_deg; ++b)
      if (coin(rng) == 0) p += PolyKS1::monomial(Rat(val(rng)), a, b);
  (void)deg;
  return p;
}

PolyKS1 random_nonzero_coefficient(std::mt19937_64& rng, int max_deg) {
  PolyKS1 p;
  while (p.is_zero()) p = random_coefficient(rng, max_deg);
  return p;
}

SkewKS1 random_skew(std::mt19937_64& rng, int max_s2, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_s2);
  const int d = deg(rng);
  std::vector<PolyKS1> cs;
  for (int j = 0; j <= d; ++j) cs.push_back(random_coefficient(rng, max_deg));
  return SkewKS1(cs);
}

SkewKS1 random_nonzero_skew(std::mt19937_64& rng, int max_s2, int max_deg) {
  SkewKS1 p;
  while (p.is_zero()) p = random_skew(rng, max_s2, max_deg);
  return p;
}

RatFunc random_ratfunc(std::mt19937_64& rng) {
  return RatFunc(random_coefficient(rng, 2), random_nonzero_coefficient(rng, 1));
}

SkewRat random_skew_rat(std::mt19937_64& rng, int max_s2) {
  std::uniform_int_distribution<int> deg(0, max_s2);
  const int d = deg(rng);
  std::vector<RatFunc> cs;
  for (int j = 0; j <= d; ++j) cs.push_back(random_ratfunc(rng));
  return SkewRat(cs);
}

// Q[k] with a commuting shift variable: the setting of the one-variable
// pseudo-division example.
struct KC {
  PolyK p;
  KC() = default;
  KC(long c) : p(c) {}  // NOLINT
  KC(const PolyK& q) : p(q) {}  // NOLINT
  bool is_zero() const { return p.is_zero(); }
  int degree() const { return p.degree(); }
  Rat leading() const { return p.leading(); }
  Rat content() const { return PolyKS1(p).content(); }
  KC operator-() const { return KC(-p); }
  KC& operator+=(const KC& o) { p += o.p; return *this; }
  KC& operator-=(const KC& o) { p -= o.p; return *this; }
  KC& operator*=(const Rat& c) { p *= PolyK(c); return *this; }
  friend KC operator*(const KC& a, const KC& b) { return KC(a.p * b.p); }
  friend bool operator==(const KC& a, const KC& b) { return a.p == b.p; }
};
KC shift_k(const KC& c, long) { return c; }
KC gcd(const KC& a, const KC& b) { return KC(gcd(a.p, b.p)); }
std::optional<KC> exact_divide(const KC& a, const KC& b) {
  auto [q, r] = divmod(a.p, b.p);
  if (!r.is_zero()) return std::nullopt;
  return KC(q);
}

}  // namespace

TEST_CASE("PolyKS1 basics and shift") {
  CHECK(shift_k(K() * K(), 1) == K() * K() + PolyKS1(2) * K() + PolyKS1(1));
  CHECK(shift_k(S1(), 5) == S1());
  CHECK((S1() * S1() - S1() - (K() + PolyKS1(1))).to_string() == "S1^2 - S1 - (k+1)");
  CHECK(PolyKS1().degree() == kZeroDegree);
  CHECK((K() * S1() + S1() * S1() * S1()).degree() == 3);
  CHECK(PolyKS1::from_s1_coefficients((K() * S1() + PolyKS1(3)).s1_coefficients()) == K() * S1() + PolyKS1(3));
  PolyKS1 p = PolyKS1(Rat(2, 3)) * K() - PolyKS1(Rat(4, 9)) * S1();
  CHECK(p.content() == Rat(2, 9));
  CHECK(p.normalized() == PolyKS1(3) * K() - PolyKS1(2) * S1());
  CHECK((-p).normalized() == p.normalized());
  CHECK(p.eval(Rat(3), Rat(9, 2)) == Rat(2) - Rat(2));

  std::mt19937_64 rng(test::seed());
  for (int i = 0; i < 500; ++i) {
    PolyKS1 a = random_coefficient(rng, 3), b = random_coefficient(rng, 3);
    long s = static_cast<long>(rng() % 7) - 3;
    CHECK(shift_k(shift_k(a, 1), -1) == a);
    CHECK(shift_k(a + b, s) == shift_k(a, s) + shift_k(b, s));
    CHECK(shift_k(a * b, s) == shift_k(a, s) * shift_k(b, s));
  }
}

TEST_CASE("bivariate gcd") {
  CHECK(gcd(K() * S1() + K(), S1() + PolyKS1(1)) == S1() + PolyKS1(1));
  CHECK(gcd(PolyKS1(0), PolyKS1(0)).is_zero());
  CHECK(gcd(K() * K() - PolyKS1(1), K() - PolyKS1(1)) == K() - PolyKS1(1));
  CHECK(gcd(S1() * S1() - K() * K(), S1() * K() + K() * K()) == S1() + K());

  std::mt19937_64 rng(test::seed() + 1);
  for (int i = 0; i < 300; ++i) {
    PolyKS1 a = random_nonzero_coefficient(rng, 2), b = random_nonzero_coefficient(rng, 2),
            c = random_nonzero_coefficient(rng, 2);
    PolyKS1 g = gcd(a * c, b * c);
    CHECK(exact_divide(a * c, g).has_value());
    CHECK(exact_divide(b * c, g).has_value());
    CHECK(exact_divide(g, c).has_value());
    CHECK(g == g.normalized());
    CHECK(gcd(b * c, a * c) == g);
  }
}

TEST_CASE("RatFunc arithmetic") {
  CHECK(RatFunc(PolyKS1(1), S1() - PolyKS1(1)) * RatFunc(S1() - PolyKS1(1)) == RatFunc(1));
  RatFunc r(K() * K() - PolyKS1(1), K() - PolyKS1(1));
  CHECK(r == RatFunc(K() + PolyKS1(1)));
  CHECK(r.is_polynomial());
  CHECK(RatFunc(PolyKS1(2), PolyKS1(-4) * S1()) == RatFunc(PolyKS1(Rat(-1, 2)), S1()));
  CHECK(RatFunc(PolyKS1(1), S1() - PolyKS1(1)).to_string() == "1/(S1 - 1)");
  CHECK_THROWS_AS(RatFunc().inverse(), Error);
  CHECK_THROWS_AS(RatFunc(K(), PolyKS1()), Error);

  std::mt19937_64 rng(test::seed() + 2);
  for (int i = 0; i < 500; ++i) {
    RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == RatFunc());
    if (!a.is_zero()) CHECK(a * a.inverse() == RatFunc(1));
    PolyKS1 m = random_nonzero_coefficient(rng, 1);
    CHECK(RatFunc(a.numerator() * m, a.denominator() * m) == a);
    CHECK(shift_k(a * b, 2) == shift_k(a, 2) * shift_k(b, 2));
  }
}

TEST_CASE("skew multiplication follows the commutation rule") {
  CHECK(S2() * lift(K()) == lift(K() + PolyKS1(1)) * S2());
  CHECK(S2() * lift(S1() * S1() - K() * S1()) == lift(S1() * S1() - (K() + PolyKS1(1)) * S1()) * S2());
  SkewKS1 p = lift(K()) * S2() * S2() + lift(S1());
  CHECK(p * lift(PolyKS1(1)) == p);
  CHECK((p * SkewKS1()).is_zero());
}

TEST_CASE("skew ring laws over polynomial coefficients") {
  std::mt19937_64 rng(test::seed() + 3);
  for (int i = 0; i < 500; ++i) {
    SkewKS1 a = random_skew(rng, 3, 2), b = random_skew(rng, 3, 2), c = random_skew(rng, 2, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
    CHECK(shift_k(a * b, 1) == shift_k(a, 1) * shift_k(b, 1));
  }
}

TEST_CASE("skew ring laws over rational coefficients") {
  std::mt19937_64 rng(test::seed() + 4);
  for (int i = 0; i < 500; ++i) {
    SkewRat a = random_skew_rat(rng, 2), b = random_skew_rat(rng, 2), c = random_skew_rat(rng, 1);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
    if (!b.is_zero()) {
      auto [q, r] = left_divmod(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
    }
  }
}

TEST_CASE("pseudo-division") {
  SkewKS1 F1 = lift(S1() * S1() - (K() + PolyKS1(1)) * S1());
  auto trivial = pseudo_division(F1, lift(PolyKS1(1)));
  CHECK(trivial.multiplier == PolyKS1(1));
  CHECK(trivial.quotient == F1);
  CHECK(trivial.remainder.is_zero());

  SkewKS1 low = lift(K());
  auto small = pseudo_division(low, S2());
  CHECK(small.multiplier == PolyKS1(1));
  CHECK(small.quotient.is_zero());
  CHECK(small.remainder == low);
  CHECK_THROWS_AS(pseudo_division(low, SkewKS1()), Error);

  std::mt19937_64 rng(test::seed() + 5);
  for (int i = 0; i < 500; ++i) {
    SkewKS1 A = random_nonzero_skew(rng, 4, 2), B = random_nonzero_skew(rng, 4, 2);
    if (A.degree() < B.degree()) std::swap(A, B);
    auto pd = pseudo_division(A, B);
    CHECK_FALSE(pd.multiplier.is_zero());
    CHECK(lift(pd.multiplier) * A == pd.quotient * B + pd.remainder);
    CHECK(pd.remainder.degree() < B.degree());
  }
}

TEST_CASE("pseudo-division with a commuting variable") {
  using KS = SkewPoly<KC>;
  PolyK k = PolyK::k();
  KS S = KS::s2();
  KS F1 = S * S - KS(KC(k + PolyK(1))) * S;
  KS F2 = -(S * S) + S;
  auto pd = pseudo_division(F1, F2);
  CHECK(pd.multiplier == KC(1));
  CHECK(pd.quotient == KS(KC(-1)));
  CHECK(pd.remainder == KS(KC(-k)) * S);

  auto m = clm(F1, F2);
  CHECK(m.left * F1 == m.right * F2);
  CHECK(m.left.degree() <= 1);
  CHECK(m.right.degree() <= 1);
}

TEST_CASE("common left multiples") {
  SkewKS1 G1 = lift(-(S1() * S1()) + S1()) * S2() * S2();
  SkewKS1 G2 = lift(S1() * S1() - K() * S1()) * S2() - lift(S1());
  auto m = clm(G1, G2);
  CHECK_FALSE(m.left.is_zero());
  CHECK_FALSE(m.right.is_zero());
  CHECK(m.left * G1 == m.right * G2);
  CHECK(m.left.degree() <= G2.degree());
  CHECK(m.right.degree() <= G1.degree());

  PolyKS1 a = K() * (S1() + PolyKS1(1)), b = (S1() + PolyKS1(1)) * (S1() - K());
  auto flat = clm(lift(a), lift(b));
  PolyKS1 g = gcd(a, b);
  SkewKS1 bg = lift(*exact_divide(b, g)), ag = lift(*exact_divide(a, g));
  CHECK(((flat.left == bg && flat.right == ag) || (flat.left == -bg && flat.right == -ag)));

  CHECK_THROWS_AS(clm(G1, SkewKS1()), Error);

  std::mt19937_64 rng(test::seed() + 6);
  for (int i = 0; i < 200; ++i) {
    SkewKS1 A = random_nonzero_skew(rng, 3, 2), B = random_nonzero_skew(rng, 3, 2);
    auto r = clm(A, B);
    REQUIRE_FALSE(r.left.is_zero());
    REQUIRE_FALSE(r.right.is_zero());
    CHECK(r.left * A == r.right * B);
    CHECK(r.left.degree() <= B.degree());
    CHECK(r.right.degree() <= A.degree());
  }
}

TEST_CASE("skew polynomial text") {
  SkewKS1 p = lift(S1() * S1() - S1() - (K() + PolyKS1(1))) * S2() * S2() - S2();
  CHECK(to_string(p) == "(S1^2 - S1 - (k+1))*S2^2 - S2");
  CHECK(parse_skew_ks1("(S1^2 - S1 - (k+1))*S2^2 - S2") == p);
  CHECK(to_string(SkewKS1()) == "0");
  CHECK(to_string(lift(K()) * S2() + lift(PolyKS1(-3))) == "k*S2 - 3");
  CHECK(parse_skew_ks1("S2*k") == lift(K() + PolyKS1(1)) * S2());
  CHECK(parse_skew_ks1("k/2") == lift(PolyKS1(Rat(1, 2)) * K()));
  CHECK(parse_skew_rat("1/(S1-1)*S2") == SkewRat(RatFunc(PolyKS1(1), S1() - PolyKS1(1))) * SkewRat::s2());
  CHECK_THROWS_AS(parse_skew_ks1("k/S1"), ParseError);
  CHECK_THROWS_AS(parse_skew_ks1("k/S2"), ParseError);
  CHECK_THROWS_AS(parse_skew_ks1("(k"), ParseError);
  try {
    parse_skew_ks1("k + x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 5);
  }

  std::mt19937_64 rng(test::seed() + 7);
  for (int i = 0; i < 500; ++i) {
    SkewKS1 a = random_skew(rng, 3, 3);
    CHECK(parse_skew_ks1(to_string(a)) == a);
    SkewRat b = random_skew_rat(rng, 2);
    CHECK(parse_skew_rat(to_string(b)) == b);
  }
}

TEST_CASE("operators act on tables") {
  SequenceTable st = evaluate(stirling_system(1), 10, 10);
  SequenceTable shifted = apply_operator(lift(S1()) * S2(), st, 0, "T");
  CHECK(shifted.max_n() == 9);
  CHECK(shifted.max_k() == 9);
  bool all_zero = true, shift_ok = true;
  SequenceTable annihilated = apply_operator(lift(S1()) * S2() - lift(K() + PolyKS1(1)) * S2() - lift(PolyKS1(1)), st, 0, "Z");
  for (std::size_t n = 0; n <= 9; ++n)
    for (std::size_t k = 0; k <= 9; ++k) {
      shift_ok = shift_ok && shifted.at(0, n, k) == st.at(0, n + 1, k + 1);
      all_zero = all_zero && annihilated.at(0, n, k) == 0;
    }
  CHECK(shift_ok);
  CHECK(all_zero);
  SequenceTable zero = apply_operator(SkewKS1(), st, 0, "Z");
  CHECK(zero.at(0, 3, 4) == 0);
  CHECK_THROWS_AS(apply_operator(S2(), evaluate(stirling_system(1), 1, 0), 0, "X"), Error);
}
