#pragma once

#include "kummerws/errors.hpp"
#include "kummerws/types.hpp"

// Overflow-checked 64-bit arithmetic. Silent wraparound is never acceptable
// here: every result is asserted exactly against another computation path.
namespace kummerws::checked {

inline Int add(Int a, Int b) {
    Int out;
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
    return out;
}

inline Int sub(Int a, Int b) {
    Int out;
    if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in subtraction");
    return out;
}

inline Int mul(Int a, Int b) {
    Int out;
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
    return out;
}

inline Int neg(Int a) { return sub(0, a); }

// Floor division with positive divisor, exact for negative numerators.
inline Int floor_div(Int a, Int b) {
    if (b <= 0) throw Error("floor_div requires a positive divisor");
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

inline Int ceil_div(Int a, Int b) {
    if (b <= 0) throw Error("ceil_div requires a positive divisor");
    Int q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

// Nonnegative residue of a mod b, b > 0.
inline Int pos_mod(Int a, Int b) {
    if (b <= 0) throw Error("pos_mod requires a positive modulus");
    Int rem = a % b;
    if (rem < 0) rem += b;
    return rem;
}

}  // namespace kummerws::checked
