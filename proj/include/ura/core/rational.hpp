#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ura {

using Int = mpz_class;
using Rat = mpq_class;

// Always "num/den", e.g. "3/1", "-1/2".
std::string to_fraction_string(const Rat& r);

// Plain form: "3", "-1/2".
std::string to_display_string(const Rat& r);

// Accepts "a", "-a", "a/b".
Rat parse_rat(std::string_view text);

}  // namespace ura
