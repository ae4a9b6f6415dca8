#pragma once

#include <limits>

namespace ura {

// Degree of the zero polynomial; compares below every real degree.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

}  // namespace ura
