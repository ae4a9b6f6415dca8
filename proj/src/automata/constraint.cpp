#include "ura/automata/constraint.hpp"

#include <algorithm>
#include <cctype>

#include "ura/core/error.hpp"

namespace ura {

std::size_t Term::position(int registers) const {
  switch (kind) {
    case Kind::Current:
      return static_cast<std::size_t>(reg - 1);
    case Kind::Input:
      return static_cast<std::size_t>(registers);
    case Kind::Next:
      return static_cast<std::size_t>(registers + reg);
    case Kind::Bottom:
      break;
  }
  throw InternalError("bottom has no tuple position");
}

std::string Term::to_string() const {
  switch (kind) {
    case Kind::Current:
      return "x" + std::to_string(reg);
    case Kind::Next:
      return "x" + std::to_string(reg) + "'";
    case Kind::Input:
      return "y";
    case Kind::Bottom:
      return "_";
  }
  return "?";
}

Constraint Constraint::eq(Term a, Term b) {
  Constraint c;
  c.kind_ = Kind::Eq;
  c.lhs_ = a;
  c.rhs_ = b;
  return c;
}

Constraint Constraint::negate(Constraint inner) {
  Constraint c;
  c.kind_ = Kind::Not;
  c.children_.push_back(std::move(inner));
  return c;
}

Constraint Constraint::conj(std::vector<Constraint> parts) {
  if (parts.size() == 1) return std::move(parts.front());
  Constraint c;
  c.kind_ = Kind::And;
  c.children_ = std::move(parts);
  return c;
}

Constraint Constraint::disj(std::vector<Constraint> parts) {
  if (parts.size() == 1) return std::move(parts.front());
  Constraint c;
  c.kind_ = Kind::Or;
  c.children_ = std::move(parts);
  return c;
}

int Constraint::max_register() const {
  int m = 0;
  if (kind_ == Kind::Eq) {
    for (const Term* t : {&lhs_, &rhs_})
      if (t->kind == Term::Kind::Current || t->kind == Term::Kind::Next) m = std::max(m, t->reg);
  }
  for (const auto& ch : children_) m = std::max(m, ch.max_register());
  return m;
}

Constraint Constraint::shift_registers(int offset) const {
  Constraint c = *this;
  if (c.kind_ == Kind::Eq) {
    for (Term* t : {&c.lhs_, &c.rhs_})
      if (t->kind == Term::Kind::Current || t->kind == Term::Kind::Next) t->reg += offset;
  }
  for (auto& ch : c.children_) ch = ch.shift_registers(offset);
  return c;
}

bool Constraint::holds(std::span<const Slot> tuple, int registers) const {
  switch (kind_) {
    case Kind::Eq: {
      auto value = [&](const Term& t) -> Slot {
        return t.kind == Term::Kind::Bottom ? Slot{} : tuple[t.position(registers)];
      };
      return value(lhs_) == value(rhs_);
    }
    case Kind::Not:
      return !children_.front().holds(tuple, registers);
    case Kind::And:
      return std::all_of(children_.begin(), children_.end(),
                         [&](const Constraint& c) { return c.holds(tuple, registers); });
    case Kind::Or:
      return std::any_of(children_.begin(), children_.end(),
                         [&](const Constraint& c) { return c.holds(tuple, registers); });
  }
  return false;
}

namespace {

int precedence(Constraint::Kind k) {
  switch (k) {
    case Constraint::Kind::Or:
      return 0;
    case Constraint::Kind::And:
      return 1;
    default:
      return 2;
  }
}

std::string render(const Constraint& c) {
  switch (c.kind()) {
    case Constraint::Kind::Eq:
      return c.lhs().to_string() + " = " + c.rhs().to_string();
    case Constraint::Kind::Not: {
      const Constraint& inner = c.children().front();
      if (inner.kind() == Constraint::Kind::Eq)
        return inner.lhs().to_string() + " != " + inner.rhs().to_string();
      if (inner.kind() == Constraint::Kind::Not) return "!" + render(inner);
      return "!(" + render(inner) + ")";
    }
    case Constraint::Kind::And:
    case Constraint::Kind::Or: {
      std::string sep = c.kind() == Constraint::Kind::And ? " & " : " | ";
      std::string out;
      for (const auto& ch : c.children()) {
        if (!out.empty()) out += sep;
        std::string part = render(ch);
        if (precedence(ch.kind()) <= precedence(c.kind())) part = "(" + part + ")";
        out += part;
      }
      return out;
    }
  }
  return {};
}

class ConstraintParser {
 public:
  ConstraintParser(std::string_view text, int registers) : text_(text), registers_(registers) {}

  Constraint parse() {
    Constraint c = parse_or();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return c;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, 1, pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Constraint parse_or() {
    std::vector<Constraint> parts{parse_and()};
    while (accept("|")) parts.push_back(parse_and());
    return Constraint::disj(std::move(parts));
  }

  Constraint parse_and() {
    std::vector<Constraint> parts{parse_unary()};
    while (accept("&")) parts.push_back(parse_unary());
    return Constraint::conj(std::move(parts));
  }

  Constraint parse_unary() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '!' && text_.substr(pos_, 2) != "!=") {
      ++pos_;
      return Constraint::negate(parse_unary());
    }
    if (accept("(")) {
      Constraint c = parse_or();
      if (!accept(")")) fail("expected ')'");
      return c;
    }
    return parse_literal();
  }

  Term parse_term() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ >= text_.size()) fail("expected atom");
    char ch = text_[pos_];
    if (ch == '_') {
      ++pos_;
      return Term::bottom();
    }
    if (ch == 'y') {
      ++pos_;
      return Term::input();
    }
    if (ch == 'x') {
      ++pos_;
      std::size_t digits = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (digits == pos_) fail("expected register number after 'x'");
      int index = std::stoi(std::string(text_.substr(digits, pos_ - digits)));
      if (index < 1 || index > registers_) {
        pos_ = start;
        fail("register index " + std::to_string(index) + " out of range 1.." + std::to_string(registers_));
      }
      if (pos_ < text_.size() && text_[pos_] == '\'') {
        ++pos_;
        return Term::next(index);
      }
      return Term::current(index);
    }
    fail("expected atom");
  }

  Constraint parse_literal() {
    std::size_t start = pos_;
    Term a = parse_term();
    bool negated;
    if (accept("!=")) {
      negated = true;
    } else if (accept("=")) {
      negated = false;
    } else {
      fail("expected '=' or '!='");
    }
    Term b = parse_term();
    if (a.kind == Term::Kind::Bottom && b.kind == Term::Kind::Bottom) {
      pos_ = start;
      fail("'_' must be compared with a register or y");
    }
    Constraint c = Constraint::eq(a, b);
    return negated ? Constraint::negate(std::move(c)) : c;
  }

  std::string_view text_;
  int registers_;
  std::size_t pos_ = 0;
};

Term term_at(std::size_t position, int registers) {
  auto p = static_cast<int>(position);
  if (p < registers) return Term::current(p + 1);
  if (p == registers) return Term::input();
  return Term::next(p - registers);
}

}  // namespace

std::string Constraint::to_string() const { return render(*this); }

bool eval_constraint(const Constraint& c, std::span<const Slot> current, Atom input,
                     std::span<const Slot> next) {
  std::vector<Slot> tuple(current.begin(), current.end());
  tuple.push_back(input);
  tuple.insert(tuple.end(), next.begin(), next.end());
  return c.holds(tuple, static_cast<int>(current.size()));
}

Constraint parse_constraint(std::string_view text, int registers) {
  return ConstraintParser(text, registers).parse();
}

Constraint canonical_constraint(const EqualityType& type, int registers) {
  std::vector<Constraint> lits;
  std::vector<std::size_t> firsts;  // first position of each block
  for (std::size_t p = 0; p < type.size(); ++p) {
    if (type.is_bottom(p)) {
      lits.push_back(Constraint::eq(term_at(p, registers), Term::bottom()));
    } else if (static_cast<std::size_t>(type.code(p)) == firsts.size()) {
      firsts.push_back(p);
    } else {
      lits.push_back(Constraint::eq(term_at(p, registers),
                                    term_at(firsts[static_cast<std::size_t>(type.code(p))], registers)));
    }
  }
  for (std::size_t f : firsts)
    if (f != static_cast<std::size_t>(registers))
      lits.push_back(Constraint::neq(term_at(f, registers), Term::bottom()));
  for (std::size_t i = 0; i < firsts.size(); ++i)
    for (std::size_t j = i + 1; j < firsts.size(); ++j)
      lits.push_back(Constraint::neq(term_at(firsts[i], registers), term_at(firsts[j], registers)));
  if (lits.empty()) lits.push_back(Constraint::eq(Term::input(), Term::input()));
  return Constraint::conj(std::move(lits));
}

}  // namespace ura
