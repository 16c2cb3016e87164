#pragma once

#include <cstdint>
#include <string>
#include <type_traits>

#include "nsg/error.hpp"

namespace nsg {

using i128 = __int128;

// Overflow-checked integer arithmetic. Every helper throws
// ErrorKind::ArithmeticOverflow instead of wrapping.
template <class T>
T checked_add(T a, T b) {
    T r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::ArithmeticOverflow, "integer overflow in addition");
    return r;
}

template <class T>
T checked_sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::ArithmeticOverflow, "integer overflow in subtraction");
    return r;
}

template <class T>
T checked_mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::ArithmeticOverflow, "integer overflow in multiplication");
    return r;
}

template <class T>
T checked_pow(T base, unsigned exp) {
    T r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

std::string to_string(i128 value);

/// Narrow a 128-bit value to int64, throwing on loss.
std::int64_t narrow_i64(i128 value);

}  // namespace nsg
