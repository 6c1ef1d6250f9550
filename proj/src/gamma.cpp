#include "kummerws/gamma.hpp"

#include <algorithm>

#include "kummerws/checked.hpp"
#include "kummerws/compositions.hpp"
#include "kummerws/onepoint.hpp"

namespace kummerws {

namespace {

Int j_upper(const CurveParams& params) {
    return params.m - 1 - checked::floor_div(params.m, params.r);
}

void sort_canonical(std::vector<PoleVector>& elements) {
    std::sort(elements.begin(), elements.end());
}

}  // namespace

GammaSet gamma_finite(const CurveParams& params, int l) {
    if (l < 2 || static_cast<Int>(l) > params.r) {
        throw InvalidTupleLength("finite tuple length must satisfy 2 <= l <= r");
    }
    std::vector<PoleVector> elements;
    for (Int j = 1; j <= j_upper(params); ++j) {
        Int budget = params.r - l - checked::floor_div(checked::mul(params.r, j), params.m);
        if (budget < 0) continue;
        for_each_weak_composition(budget, l, [&](const std::vector<Int>& ks) {
            PoleVector elem(ks.size());
            for (std::size_t i = 0; i < ks.size(); ++i) {
                elem[i] = checked::add(checked::mul(params.m, ks[i]), j);
            }
            elements.push_back(std::move(elem));
        });
    }
    sort_canonical(elements);
    return GammaSet{params, l, false, std::move(elements)};
}

GammaSet gamma_with_infinity(const CurveParams& params, int l) {
    if (l < 1 || static_cast<Int>(l) > params.r) {
        throw InvalidTupleLength("finite place count must satisfy 1 <= l <= r");
    }
    std::vector<PoleVector> elements;
    for (Int j = 1; j <= j_upper(params); ++j) {
        Int rj = checked::mul(params.r, j);
        Int k0_min = checked::ceil_div(rj, params.m);
        // Substituting k_0' = k_0 - ceil(r*j/m) turns the constrained sum
        // into a plain weak composition over l+1 parts.
        Int budget = params.r - l - k0_min;
        if (budget < 0) continue;
        for_each_weak_composition(budget, l + 1, [&](const std::vector<Int>& ks) {
            PoleVector elem(ks.size());
            Int k0 = checked::add(ks[0], k0_min);
            elem[0] = checked::sub(checked::mul(params.m, k0), rj);
            for (std::size_t i = 1; i < ks.size(); ++i) {
                elem[i] = checked::add(checked::mul(params.m, ks[i]), j);
            }
            elements.push_back(std::move(elem));
        });
    }
    sort_canonical(elements);
    return GammaSet{params, l, true, std::move(elements)};
}

GammaSet gamma(const CurveParams& params, const PlaceTuple& tuple) {
    validate_tuple(params, tuple);
    if (tuple.includes_infinity) return gamma_with_infinity(params, tuple.finite_count());
    return gamma_finite(params, tuple.finite_count());
}

Int default_tilde_bound(const CurveParams& params) {
    return checked::add(checked::mul(2, genus(params)), 5);
}

TildeSet gamma_tilde(const CurveParams& params, const PlaceTuple& tuple) {
    return gamma_tilde(params, tuple, default_tilde_bound(params));
}

TildeSet gamma_tilde(const CurveParams& params, const PlaceTuple& tuple, Int bound) {
    validate_tuple(params, tuple);
    if (bound < 0) throw Error("tilde truncation bound must be nonnegative");
    const int total = tuple.length();
    if (total > 20) throw Error("tuple too long to materialize the tilde set");
    std::vector<PoleVector> elements;

    for (unsigned mask = 1; mask < (1u << total); ++mask) {
        std::vector<int> positions;
        for (int coord = 0; coord < total; ++coord) {
            if (mask & (1u << coord)) positions.push_back(coord);
        }
        if (positions.size() == 1) {
            const int pos = positions[0];
            for (Int h : nongaps_up_to(params, tuple.place_at(pos), bound)) {
                PoleVector vec(static_cast<std::size_t>(total), 0);
                vec[static_cast<std::size_t>(pos)] = h;
                elements.push_back(std::move(vec));
            }
            continue;
        }
        const bool sub_infinity = tuple.includes_infinity && (mask & 1u);
        const int sub_finite = static_cast<int>(positions.size()) - (sub_infinity ? 1 : 0);
        const GammaSet sub = sub_infinity ? gamma_with_infinity(params, sub_finite)
                                          : gamma_finite(params, sub_finite);
        for (const PoleVector& elem : sub.elements) {
            if (std::any_of(elem.begin(), elem.end(), [&](Int c) { return c > bound; })) continue;
            PoleVector vec(static_cast<std::size_t>(total), 0);
            for (std::size_t t = 0; t < positions.size(); ++t) {
                vec[static_cast<std::size_t>(positions[t])] = elem[t];
            }
            elements.push_back(std::move(vec));
        }
    }

    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return TildeSet{bound, std::move(elements)};
}

}  // namespace kummerws
