#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace qgc {

// Exact coefficient and energy type. Penalties grow like (n+1)^L, so
// 64 bits is not enough headroom once they are multiplied out.
using Int = __int128;

inline constexpr Int kIntMax =
    static_cast<Int>((static_cast<unsigned __int128>(1) << 127) - 1);

std::string to_string(Int value);

// Parses an optionally signed decimal integer; throws Error(Parse).
Int parse_int(std::string_view text);

// Overflow-checked arithmetic; throws Error(ResourceLimit) on overflow.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_pow(Int base, unsigned exponent);

inline Int abs(Int v) { return v < 0 ? -v : v; }

// Lossy, for Boltzmann factors and reports only.
inline double to_double(Int v) { return static_cast<double>(v); }

}  // namespace qgc
