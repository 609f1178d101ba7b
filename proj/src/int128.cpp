#include "qgc/int128.hpp"

#include <algorithm>

#include "qgc/errors.hpp"

namespace qgc {

std::string to_string(Int value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Work in the negative range so the minimum value does not overflow.
  Int v = negative ? value : -value;
  std::string digits;
  while (v != 0) {
    const int d = -static_cast<int>(v % 10);
    digits.push_back(static_cast<char>('0' + d));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Int parse_int(std::string_view text) {
  if (text.empty()) fail(ErrorKind::Parse, "empty integer literal");
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) {
    fail(ErrorKind::Parse, "integer literal has no digits: '" + std::string(text) + "'");
  }
  Int acc = 0;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch < '0' || ch > '9') {
      fail(ErrorKind::Parse, "bad digit in integer literal '" + std::string(text) + "'");
    }
    Int next;
    if (__builtin_mul_overflow(acc, Int{10}, &next) ||
        __builtin_sub_overflow(next, Int{ch - '0'}, &next)) {
      fail(ErrorKind::Parse, "integer literal out of range: '" + std::string(text) + "'");
    }
    acc = next;
  }
  if (!negative) {
    Int out;
    if (__builtin_sub_overflow(Int{0}, acc, &out)) {
      fail(ErrorKind::Parse, "integer literal out of range: '" + std::string(text) + "'");
    }
    return out;
  }
  return acc;
}

Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) {
    fail(ErrorKind::ResourceLimit, "coefficient overflow in addition");
  }
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) {
    fail(ErrorKind::ResourceLimit, "coefficient overflow in multiplication");
  }
  return out;
}

Int checked_pow(Int base, unsigned exponent) {
  Int out = 1;
  for (unsigned i = 0; i < exponent; ++i) out = checked_mul(out, base);
  return out;
}

}  // namespace qgc
