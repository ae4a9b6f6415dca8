#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ura/counting/linrec.hpp"
#include "ura/counting/poly_k.hpp"

namespace ura {

// S f_i = sum_j equations[i][j](t) f_j over one index t.
struct OneDimSystem {
  std::vector<std::string> variables;
  std::vector<std::vector<PolyK>> equations;
  std::vector<Rat> initial;
  std::vector<DerivedVariable> derived;

  std::size_t order() const { return variables.size(); }
  // Looks up variables, then derived variables (offset by order()).
  std::optional<std::size_t> index(std::string_view name) const;
};

enum class Axis {
  First,   // n fixed, sequence in k
  Second,  // k fixed, sequence in n
};

// Level-M copies of every variable are named "<name>@<M>", the helper
// constants "<name>@g". Derived variables are carried over at level L.
OneDimSystem section(const LinrecSystem& sys, Axis axis, std::size_t level);
// Same, reading initial values from a table that covers the needed range.
OneDimSystem section(const LinrecSystem& sys, Axis axis, std::size_t level, const SequenceTable& table);

// values[v][t] for t in [0, length], variables then derived variables.
std::vector<std::vector<Rat>> evaluate(const OneDimSystem& sys, std::size_t length);

}  // namespace ura
