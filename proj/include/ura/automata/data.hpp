#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace ura {

// Data values are naturals; only equality between them is meaningful.
using Atom = std::uint64_t;

// Register content; std::nullopt is the undefined value.
using Slot = std::optional<Atom>;
using Valuation = std::vector<Slot>;

struct Letter {
  std::size_t symbol = 0;
  Atom atom = 0;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using DataWord = std::vector<Letter>;

}  // namespace ura
