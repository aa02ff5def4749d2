#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace schurtab {

// All coefficients in the library are exact rationals. No floating point anywhere.
using Rat = mpq_class;

// "p" for integers, "p/q" otherwise.
std::string ratToString(const Rat& r);

// Accepts "p" or "p/q" with optional sign; throws Error(Usage) on anything else.
Rat ratFromString(std::string_view s);

} // namespace schurtab
