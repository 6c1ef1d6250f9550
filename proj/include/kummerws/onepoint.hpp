#pragma once

#include "kummerws/curve.hpp"
#include "kummerws/types.hpp"

// One-place Weierstrass gap sets. At every finite ramified place the gaps are
//   { m*k + j : 1 <= j <= m-1-floor(m/r), 0 <= k <= r-2-floor(r*j/m) },
// and at infinity the nongaps form the numerical semigroup <m, r>. Both lists
// have exactly genus-many entries, all within [1, 2g-1].
namespace kummerws {

struct GapList {
    PlaceId place = PlaceId::infinity();
    std::vector<Int> gaps;  // strictly increasing
};

// Gap set at a finite ramified place (identical for every index; reported
// against P1).
GapList gaps_at_finite(const CurveParams& params);

// Gap set at the place above infinity, computed by an additive sieve of
// <m, r> over [0, m*r]; the Frobenius number m*r - m - r bounds every gap.
GapList gaps_at_infinity(const CurveParams& params);

bool is_gap(const CurveParams& params, PlaceId place, Int n);

// Complement of the gap set within [0, bound], ascending (0 is always first).
std::vector<Int> nongaps_up_to(const CurveParams& params, PlaceId place, Int bound);

}  // namespace kummerws
