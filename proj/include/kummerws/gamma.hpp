#pragma once

#include "kummerws/curve.hpp"
#include "kummerws/types.hpp"

// Closed-form minimal generating sets of the multi-place Weierstrass
// semigroups at totally ramified places.
//
// For l distinct finite places (2 <= l <= r):
//   Gamma = { (m*k_1+j, ..., m*k_l+j) : 1 <= j <= m-1-floor(m/r),
//             k_i >= 0, sum k_i = r - l - floor(r*j/m) },
// empty exactly when l > r - floor(r/m).
//
// With the place at infinity in front (1 <= l <= r finite places):
//   Gamma = { (m*k_0-r*j, m*k_1+j, ..., m*k_l+j) : 1 <= j <= m-1-floor(m/r),
//             k_0 >= ceil(r*j/m), k_i >= 0, sum_{i>=0} k_i = r - l },
// empty exactly when l > r - ceil(r/m).
//
// The defining equation carries the same exponent lambda at every root, so
// the sets depend only on the tuple's shape (length, infinity flag), not on
// which finite indices are chosen; witness functions are built against the
// concrete indices and re-checked by tests.
namespace kummerws {

struct GammaSet {
    CurveParams params;
    int finite_count = 0;
    bool includes_infinity = false;
    std::vector<PoleVector> elements;  // canonical: sorted lexicographically

    int length() const { return finite_count + (includes_infinity ? 1 : 0); }
};

GammaSet gamma_finite(const CurveParams& params, int l);

// l counts the finite places; tuples are (Pinf, P_1, ..., P_l).
GammaSet gamma_with_infinity(const CurveParams& params, int l);

// Dispatch on the tuple's shape. Tuples of total length 1 are rejected: the
// one-place generating set is the full (infinite) semigroup, exposed in
// truncated form through gamma_tilde and the onepoint module.
GammaSet gamma(const CurveParams& params, const PlaceTuple& tuple);

// Union of all sub-tuple generating sets, each embedded with zeros on the
// remaining coordinates. Single-place sub-tuples contribute their truncated
// nongap sets, so the result carries the truncation bound it was built with;
// any element with a coordinate above the bound is omitted.
struct TildeSet {
    Int bound = 0;
    std::vector<PoleVector> elements;  // sorted, deduplicated
};

Int default_tilde_bound(const CurveParams& params);  // 2g + 5

TildeSet gamma_tilde(const CurveParams& params, const PlaceTuple& tuple);
TildeSet gamma_tilde(const CurveParams& params, const PlaceTuple& tuple, Int bound);

}  // namespace kummerws
