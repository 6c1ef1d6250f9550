#pragma once

#include <cstddef>
#include <map>
#include <mutex>

#include "kummerws/curve.hpp"
#include "kummerws/gamma.hpp"
#include "kummerws/onepoint.hpp"
#include "kummerws/types.hpp"

// Brute-force ground truth, built from first principles so it shares no code
// path with the closed-form modules it checks.
//
// Everything rests on one exact dimension count. Every function on the curve
// y^m = f(x)^lambda decomposes uniquely as sum_{t=0}^{m-1} h_t(x) * y^t with
// rational h_t. Fix a divisor D = n_inf*Pinf + sum n_i*P_i supported on the
// ramified places. The term valuations are
//     v_{P_i}(h_t y^t) = m * v_i(h_t) + t*lambda,
//     v_{Pinf}(h_t y^t) = m * v_inf(h_t) - t*r*lambda,
// and because gcd(lambda, m) = gcd(r*lambda, m) = 1 the t-th term's valuation
// is congruent to t*lambda (resp. -t*r*lambda) mod m — pairwise distinct
// across t. A sum of terms with pairwise distinct valuations has valuation
// equal to their minimum, so the sum lies in L(D) iff every term does. Each
// term condition reads off the coefficient constraints on h_t:
//     v_i(h_t) >= ceil((-n_i - t*lambda) / m) =: a_{i,t},
//     deg-side: v_inf(h_t) >= ceil((t*r*lambda - n_inf) / m) =: b_t,
// i.e. h_t ranges over a Riemann-Roch space of the rational function field
// whose dimension is max(0, 1 - b_t - sum_i a_{i,t}). Hence
//     ell(D) = sum_{t=0}^{m-1} max(0, 1 - b_t - sum_i a_{i,t}).
// No field elements are ever constructed; the count is pure lattice
// arithmetic in (r, m, lambda). The Riemann-Roch sanity checks in the test
// suite (ell(0) = 1, ell(D) = deg(D)+1-g for deg(D) >= 2g-1, unit steps)
// validate the formula against the genus formula, an independent derivation.
//
// Membership, gaps, pure gaps and the generating sets are then exhaustive
// searches over boxes bounded by 2g-1 (no gap exceeds that, and generating
// set elements have gap coordinates in every position).
namespace kummerws {

// Exact dimension of L(D) for a divisor supported on {Pinf, P1, ..., Pr}.
Int rr_dimension(const CurveParams& params, const DivisorSpec& divisor);

// Memoized ell(D) lookups for one parameter set. Thread-safe; the cache
// stops growing at max_entries and falls back to direct evaluation.
class DimensionTable {
 public:
    explicit DimensionTable(const CurveParams& params, std::size_t max_entries = 1u << 20);

    Int dimension(const DivisorSpec& divisor) const;
    const CurveParams& params() const { return params_; }

 private:
    CurveParams params_;
    std::size_t max_entries_;
    mutable std::mutex mutex_;
    mutable std::map<std::vector<Int>, Int> cache_;
};

// v in H(Q_1, ..., Q_l) iff ell(D) drops when any single place with positive
// coefficient is removed from D = sum v_i Q_i. The all-zero vector is a
// member (constants).
bool member_oracle(const CurveParams& params, const PlaceTuple& tuple, const PoleVector& v);
bool member_oracle(const DimensionTable& table, const PlaceTuple& tuple, const PoleVector& v);

// Gap set at one ramified place: { n in [1, 2g-1] : ell(nP) = ell((n-1)P) }.
GapList gaps_oracle(const CurveParams& params, PlaceId place);

// Exhaustive minimal generating set for a tuple of length >= 2. Candidates
// are restricted to products of gap sets; minimality is checked in the fiber
// of coordinate 0 (equivalent for every coordinate).
GammaSet gamma_oracle(const CurveParams& params, const PlaceTuple& tuple);

// v (strictly positive) is a pure gap iff ell(D) = ell(D - Q_i) for every i.
bool pure_gap_oracle(const CurveParams& params, const PlaceTuple& tuple, const PoleVector& v);
bool pure_gap_oracle(const DimensionTable& table, const PlaceTuple& tuple, const PoleVector& v);

// All pure gaps of a tuple of length >= 2; coordinates bounded by 2g-1.
std::vector<PoleVector> pure_gaps_box(const CurveParams& params, const PlaceTuple& tuple);

namespace detail {

// gamma_oracle with the minimality fiber pinned to an arbitrary coordinate;
// exposed so tests can confirm the choice of coordinate does not matter.
GammaSet gamma_oracle_in_fiber(const CurveParams& params, const PlaceTuple& tuple, int fiber);

}  // namespace detail

}  // namespace kummerws
