#include "ura/skewalg/skew_poly.hpp"

#include <cctype>
#include <limits>

namespace ura {

namespace {

template <class C>
C divide_coefficient(const C& a, const C& b);

template <>
PolyKS1 divide_coefficient(const PolyKS1& a, const PolyKS1& b) {
  auto q = exact_divide(a, b);
  if (!q) throw Error("inexact polynomial division");
  return *q;
}

template <>
RatFunc divide_coefficient(const RatFunc& a, const RatFunc& b) {
  return a / b;
}

template <class C>
class SkewParser {
 public:
  explicit SkewParser(std::string_view text) : text_(text) {}

  SkewPoly<C> parse() {
    SkewPoly<C> p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  SkewPoly<C> expr() {
    SkewPoly<C> acc;
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    acc = term();
    if (negative) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  SkewPoly<C> term() {
    SkewPoly<C> acc = power();
    while (true) {
      if (accept('*')) {
        acc = acc * power();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        SkewPoly<C> d = power();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        if (d.degree() != 0) {
          pos_ = at;
          fail("divisor mentions S2");
        }
        std::vector<C> cs = acc.coefficients();
        try {
          // Right division by c: (a S2^j) / c = (a / shift(c, j)) S2^j.
          for (std::size_t j = 0; j < cs.size(); ++j)
            cs[j] = divide_coefficient(cs[j], shift_k(d.leading(), static_cast<long>(j)));
        } catch (const ParseError&) {
          throw;
        } catch (const Error& e) {
          pos_ = at;
          fail(e.what());
        }
        acc = SkewPoly<C>(std::move(cs));
      } else {
        return acc;
      }
    }
  }

  SkewPoly<C> power() {
    SkewPoly<C> base = primary();
    if (!accept('^')) return base;
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    if (pos_ - start > 4) fail("exponent too large");
    const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    SkewPoly<C> out{C(1)};
    for (int i = 0; i < e; ++i) out = out * base;
    return out;
  }

  SkewPoly<C> primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      SkewPoly<C> inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Int v(std::string(text_.substr(start, pos_ - start)));
      return SkewPoly<C>(C(PolyKS1(Rat(v))));
    }
    if (c == 'k') {
      ++pos_;
      return SkewPoly<C>(C(PolyKS1::k()));
    }
    if (c == 'S' && pos_ + 1 < text_.size()) {
      const char which = text_[pos_ + 1];
      if (which == '1') {
        pos_ += 2;
        return SkewPoly<C>(C(PolyKS1::s1()));
      }
      if (which == '2') {
        pos_ += 2;
        return SkewPoly<C>::s2();
      }
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SkewKS1 parse_skew_ks1(std::string_view text) { return SkewParser<PolyKS1>(text).parse(); }

SkewRat parse_skew_rat(std::string_view text) { return SkewParser<RatFunc>(text).parse(); }

SequenceTable apply_operator(const SkewKS1& p, const SequenceTable& table, std::size_t var,
                             const std::string& name) {
  if (var >= table.names().size()) throw Error("no such table column");
  int max_s1 = 0;
  for (const PolyKS1& c : p.coefficients())
    if (!c.is_zero()) max_s1 = std::max(max_s1, c.degree_s1());
  const int max_s2 = std::max(p.degree(), 0);
  if (static_cast<std::size_t>(max_s1) > table.max_n() || static_cast<std::size_t>(max_s2) > table.max_k())
    throw Error("operator shifts exceed the table");
  const std::size_t out_n = table.max_n() - static_cast<std::size_t>(max_s1);
  const std::size_t out_k = table.max_k() - static_cast<std::size_t>(max_s2);
  SequenceTable out({name}, out_n, out_k);
  for (std::size_t j = 0; j < p.coefficients().size(); ++j) {
    for (const auto& t : p.coefficients()[j].terms()) {
      for (std::size_t n = 0; n <= out_n; ++n)
        for (std::size_t k = 0; k <= out_k; ++k) {
          Rat kp(1);
          for (int e = 0; e < t.k; ++e) kp *= static_cast<long>(k);
          out.at(0, n, k) += t.c * kp * table.at(var, n + static_cast<std::size_t>(t.s), k + j);
        }
    }
  }
  return out;
}

}  // namespace ura
