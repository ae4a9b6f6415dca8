#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ura/automata/data.hpp"

namespace ura {

// Complete description of which positions of a tuple over atoms-or-undefined
// coincide. Encoded per position: kBottom, or a block index numbered in order
// of first occurrence.
class EqualityType {
 public:
  static constexpr int kBottom = -1;

  EqualityType() = default;
  // Throws unless codes form a restricted-growth encoding.
  explicit EqualityType(std::vector<int> codes);

  static EqualityType of(std::span<const Slot> values);

  std::size_t size() const { return codes_.size(); }
  int code(std::size_t position) const { return codes_[position]; }
  bool is_bottom(std::size_t position) const { return codes_[position] == kBottom; }
  const std::vector<int>& codes() const { return codes_; }
  int width() const;

  // Type of the sub-tuple [begin, end), renumbered.
  EqualityType restrict(std::size_t begin, std::size_t end) const;

  // Block b is realised by atom b + 1.
  Valuation representative() const;

  // "_" for undefined positions, 1-based block numbers otherwise, e.g. "_12".
  std::string to_string() const;

  friend bool operator==(const EqualityType&, const EqualityType&) = default;
  // Canonical order: undefined-position pattern first (undefined sorts
  // earlier), then restricted-growth codes lexicographically.
  friend std::strong_ordering operator<=>(const EqualityType& a, const EqualityType& b);

 private:
  std::vector<int> codes_;
};

void for_each_equality_type(std::size_t positions, const std::vector<bool>& bottom_allowed,
                            const std::function<void(const EqualityType&)>& visit);

std::vector<EqualityType> enumerate_equality_types(std::size_t positions,
                                                   const std::vector<bool>& bottom_allowed);

// All types over d register positions (undefined allowed everywhere).
std::vector<EqualityType> valuation_orbits(std::size_t registers);

}  // namespace ura
