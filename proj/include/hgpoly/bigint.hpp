#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hgpoly {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& value) { return value.get_str(10); }

/// Strict decimal parse: optional leading '-', then digits only.
BigInt parse_decimal(std::string_view text);

}  // namespace hgpoly
