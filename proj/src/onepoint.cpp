#include "kummerws/onepoint.hpp"

#include <algorithm>

#include "kummerws/checked.hpp"

namespace kummerws {

namespace {

// Keeps materialized lists at desk scale; larger parameters must be rejected
// rather than silently truncated.
constexpr Int max_materialized = Int(1) << 27;

void check_scale(Int size, const char* what) {
    if (size > max_materialized) {
        throw Error(std::string("parameters too large to materialize ") + what);
    }
}

}  // namespace

GapList gaps_at_finite(const CurveParams& params) {
    Int j_max = params.m - 1 - checked::floor_div(params.m, params.r);
    check_scale(checked::mul(params.r - 1, params.m - 1) / 2, "the finite gap list");
    std::vector<Int> gaps;
    for (Int j = 1; j <= j_max; ++j) {
        Int k_max = params.r - 2 - checked::floor_div(checked::mul(params.r, j), params.m);
        for (Int k = 0; k <= k_max; ++k) {
            gaps.push_back(checked::add(checked::mul(params.m, k), j));
        }
    }
    std::sort(gaps.begin(), gaps.end());
    return GapList{PlaceId::finite(1), std::move(gaps)};
}

GapList gaps_at_infinity(const CurveParams& params) {
    Int sieve_bound = checked::mul(params.m, params.r);
    check_scale(sieve_bound, "the infinity gap sieve");
    std::vector<bool> reachable(static_cast<std::size_t>(sieve_bound) + 1, false);
    reachable[0] = true;
    for (Int n = 1; n <= sieve_bound; ++n) {
        auto at = [&](Int v) { return reachable[static_cast<std::size_t>(v)]; };
        reachable[static_cast<std::size_t>(n)] =
            (n >= params.m && at(n - params.m)) || (n >= params.r && at(n - params.r));
    }
    std::vector<Int> gaps;
    for (Int n = 1; n <= sieve_bound; ++n) {
        if (!reachable[static_cast<std::size_t>(n)]) gaps.push_back(n);
    }
    return GapList{PlaceId::infinity(), std::move(gaps)};
}

bool is_gap(const CurveParams& params, PlaceId place, Int n) {
    if (n < 0) throw Error("is_gap expects a nonnegative pole order");
    if (n == 0) return false;
    const GapList list = place.is_infinity() ? gaps_at_infinity(params) : gaps_at_finite(params);
    return std::binary_search(list.gaps.begin(), list.gaps.end(), n);
}

std::vector<Int> nongaps_up_to(const CurveParams& params, PlaceId place, Int bound) {
    if (bound < 0) throw Error("nongap bound must be nonnegative");
    check_scale(bound, "the nongap list");
    const GapList list = place.is_infinity() ? gaps_at_infinity(params) : gaps_at_finite(params);
    std::vector<Int> result;
    std::size_t gap_pos = 0;
    for (Int n = 0; n <= bound; ++n) {
        while (gap_pos < list.gaps.size() && list.gaps[gap_pos] < n) ++gap_pos;
        if (gap_pos < list.gaps.size() && list.gaps[gap_pos] == n) continue;
        result.push_back(n);
    }
    return result;
}

}  // namespace kummerws
