#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ura/automata/data.hpp"
#include "ura/automata/equality_type.hpp"

namespace ura {

struct Term {
  enum class Kind { Current, Input, Next, Bottom };
  Kind kind = Kind::Bottom;
  int reg = 0;  // 1-based, for Current and Next

  static Term current(int i) { return {Kind::Current, i}; }
  static Term next(int i) { return {Kind::Next, i}; }
  static Term input() { return {Kind::Input, 0}; }
  static Term bottom() { return {Kind::Bottom, 0}; }

  // Index in the tuple (x1..xd, y, x1'..xd'); undefined for Bottom.
  std::size_t position(int registers) const;
  std::string to_string() const;
  friend bool operator==(const Term&, const Term&) = default;
};

// Quantifier-free equality formula over current registers, input and next
// registers. Value type; children are owned.
class Constraint {
 public:
  enum class Kind { Eq, Not, And, Or };

  static Constraint eq(Term a, Term b);
  static Constraint neq(Term a, Term b) { return negate(eq(a, b)); }
  static Constraint negate(Constraint c);
  static Constraint conj(std::vector<Constraint> parts);
  static Constraint disj(std::vector<Constraint> parts);

  Kind kind() const { return kind_; }
  const Term& lhs() const { return lhs_; }
  const Term& rhs() const { return rhs_; }
  const std::vector<Constraint>& children() const { return children_; }

  // Largest register index mentioned.
  int max_register() const;

  // Every register index shifted by `offset` (both current and next).
  Constraint shift_registers(int offset) const;

  // Evaluate on the flat tuple (x1..xd, y, x1'..xd').
  bool holds(std::span<const Slot> tuple, int registers) const;

  std::string to_string() const;

  friend bool operator==(const Constraint&, const Constraint&) = default;

 private:
  Kind kind_ = Kind::Eq;
  Term lhs_, rhs_;
  std::vector<Constraint> children_;
};

bool eval_constraint(const Constraint& c, std::span<const Slot> current, Atom input,
                     std::span<const Slot> next);

// Throws ParseError with a 1-based column on line 1.
Constraint parse_constraint(std::string_view text, int registers);

// Conjunction of literals that pins down exactly the given orbit over
// 2d+1 positions; the fully unconstrained type renders as "y = y".
Constraint canonical_constraint(const EqualityType& type, int registers);

}  // namespace ura
