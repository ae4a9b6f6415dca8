#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ura/core/rational.hpp"
#include "ura/counting/poly_k.hpp"

namespace ura {

// p00 + p01*S1 + p10*S2, with S1 shifting n and S2 shifting k.
struct AffineOperator {
  PolyK p00, p01, p10;
  bool is_zero() const { return p00.is_zero() && p01.is_zero() && p10.is_zero(); }
  friend bool operator==(const AffineOperator&, const AffineOperator&) = default;
};

struct Boundary {
  Rat origin;        // f(0,0)
  Rat first_row;     // f(0,k) for k >= 1
  Rat first_column;  // f(n,0) for n >= 1
  friend bool operator==(const Boundary&, const Boundary&) = default;
};

// Named linear combination of system variables, e.g. G = S - G_s.
struct DerivedVariable {
  std::string name;
  std::vector<std::pair<std::size_t, Rat>> terms;
  friend bool operator==(const DerivedVariable&, const DerivedVariable&) = default;
};

// Row i reads S1 S2 f_i = sum_j equations[i][j] f_j, coefficients evaluated
// at the source index.
struct LinrecSystem {
  std::vector<std::string> variables;
  std::vector<std::vector<AffineOperator>> equations;
  std::vector<Boundary> boundaries;
  std::vector<DerivedVariable> derived;

  std::size_t size() const { return variables.size(); }
  std::optional<std::size_t> variable_index(std::string_view name) const;
  std::optional<std::size_t> derived_index(std::string_view name) const;
  // Throws Error on inconsistent dimensions or references.
  void validate() const;
  friend bool operator==(const LinrecSystem&, const LinrecSystem&) = default;
};

// Values of each variable (then each derived variable) on [0,N] x [0,K].
class SequenceTable {
 public:
  SequenceTable() = default;
  SequenceTable(std::vector<std::string> names, std::size_t max_n, std::size_t max_k);

  std::size_t max_n() const { return max_n_; }
  std::size_t max_k() const { return max_k_; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index(std::string_view name) const;

  const Rat& at(std::size_t var, std::size_t n, std::size_t k) const { return data_[var][n * (max_k_ + 1) + k]; }
  Rat& at(std::size_t var, std::size_t n, std::size_t k) { return data_[var][n * (max_k_ + 1) + k]; }

  std::size_t add_column(const std::string& name);

 private:
  std::vector<std::string> names_;
  std::size_t max_n_ = 0, max_k_ = 0;
  std::vector<std::vector<Rat>> data_;
};

SequenceTable evaluate(const LinrecSystem& sys, std::size_t max_n, std::size_t max_k);

// S(n+1,k+1) = s*S(n,k) + s*(k+1)*S(n,k+1), S(0,0) = 1.
LinrecSystem stirling_system(long alphabet_size);

std::string to_json(const LinrecSystem& sys);
LinrecSystem linrec_from_json(std::string_view text);

// Header "var,n,k,value"; values as "num/den". Restricted to names starting
// with `prefix` when it is non-empty.
std::string to_csv(const SequenceTable& table, std::string_view prefix = {});

// Human-readable equations, one per line.
std::string to_text(const LinrecSystem& sys);

}  // namespace ura
