#pragma once

#include <optional>

#include "kummerws/types.hpp"

// Parameter validation and exact divisor/valuation arithmetic for the cyclic
// cover y^m = f(x)^lambda of the projective line, where f has r distinct
// roots and gcd(m, r*lambda) = 1. The r+1 places above the roots of f and
// above infinity are totally ramified; everything in this library lives on
// that ramified locus and depends only on the triple (r, m, lambda).
namespace kummerws {

struct CurveParams {
    Int r = 0;
    Int m = 0;
    Int lambda = 0;
    std::optional<Int> characteristic;  // metadata; must not divide m when present

    friend bool operator==(const CurveParams&, const CurveParams&) = default;
};

// Returns validated parameters or throws RejectedParams carrying one reason
// per violated invariant.
CurveParams validate_params(Int r, Int m, Int lambda,
                            std::optional<Int> characteristic = std::nullopt);

// (r-1)(m-1)/2, always an integer since gcd(m,r)=1 forces one factor even.
Int genus(const CurveParams& params);

// Exponents (A, B) with A*lambda + B*m = 1 and 0 <= A < m, so that
// z = y^A f(x)^B has divisor P_1 + ... + P_r - r*Pinf.
struct ZExponents {
    Int a_exp = 0;
    Int b_exp = 0;

    friend bool operator==(const ZExponents&, const ZExponents&) = default;
};

ZExponents z_exponents(const CurveParams& params);

// Divisor of z^{z_exp} * prod (x - a_i)^{e_i}:
//   at P_i:   z_exp + m*e_i
//   at Pinf: -(r*z_exp + m*sum e_i)
// Always of total degree zero.
DivisorSpec monomial_divisor(const CurveParams& params, const Monomial& mono);

// Checks index range, distinctness and nonempty length for a tuple.
void validate_tuple(const CurveParams& params, const PlaceTuple& tuple);

// Coefficients of pole_orders on the tuple's places, zero elsewhere.
DivisorSpec divisor_from_pole_vector(const CurveParams& params, const PlaceTuple& tuple,
                                     const PoleVector& pole_orders);

// Explicit monomial whose pole divisor is exactly sum_i gamma_elem[i]*Q_i,
// with nonnegative valuation at every other ramified place. Accepts exactly
// the elements produced by the gamma module for the tuple's shape (for
// length-1 tuples: any pole order in the one-place semigroup). Throws
// NotAGammaElement otherwise.
Monomial witness_function(const CurveParams& params, const PlaceTuple& tuple,
                          const PoleVector& gamma_elem);

}  // namespace kummerws
