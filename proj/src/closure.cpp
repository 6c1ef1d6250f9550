#include "kummerws/closure.hpp"

#include <algorithm>

#include "kummerws/checked.hpp"
#include "kummerws/onepoint.hpp"

namespace kummerws {

PoleVector lub(const std::vector<PoleVector>& vectors) {
    if (vectors.empty()) throw Error("lub of an empty family");
    PoleVector result = vectors.front();
    for (const PoleVector& v : vectors) {
        if (v.size() != result.size()) throw LengthMismatch("lub arguments differ in length");
        for (std::size_t i = 0; i < v.size(); ++i) result[i] = std::max(result[i], v[i]);
    }
    return result;
}

MembershipIndex::MembershipIndex(const CurveParams& params, const PlaceTuple& tuple, Int bound)
    : tuple_(tuple), bound_(bound) {
    validate_tuple(params, tuple);
    if (bound < 0) throw Error("membership bound must be nonnegative");
    if (tuple.length() == 1) {
        // Degenerate tuples go through the one-place module directly.
        nongap_.assign(static_cast<std::size_t>(bound) + 1, false);
        for (Int h : nongaps_up_to(params, tuple.place_at(0), bound)) {
            nongap_[static_cast<std::size_t>(h)] = true;
        }
    } else {
        tilde_ = gamma_tilde(params, tuple, bound).elements;
        const std::size_t len = static_cast<std::size_t>(tuple.length());
        buckets_.assign(len, std::vector<std::vector<std::uint32_t>>(
                                 static_cast<std::size_t>(bound) + 1));
        for (std::size_t t = 0; t < tilde_.size(); ++t) {
            for (std::size_t i = 0; i < len; ++i) {
                buckets_[i][static_cast<std::size_t>(tilde_[t][i])].push_back(
                    static_cast<std::uint32_t>(t));
            }
        }
    }
}

void MembershipIndex::check_vector(const PoleVector& v) const {
    if (static_cast<int>(v.size()) != tuple_.length()) {
        throw LengthMismatch("pole vector length does not match tuple length");
    }
    for (Int c : v) {
        if (c < 0) throw Error("pole orders must be nonnegative");
        if (c > bound_) throw Error("pole order exceeds the index bound");
    }
}

bool MembershipIndex::contains(const PoleVector& v) const {
    check_vector(v);
    if (tuple_.length() == 1) return nongap_[static_cast<std::size_t>(v[0])];
    for (std::size_t i = 0; i < v.size(); ++i) {
        bool witnessed = false;
        for (std::uint32_t idx : buckets_[i][static_cast<std::size_t>(v[i])]) {
            const PoleVector& u = tilde_[idx];
            bool below = true;
            for (std::size_t t = 0; t < v.size(); ++t) {
                if (u[t] > v[t]) {
                    below = false;
                    break;
                }
            }
            if (below) {
                witnessed = true;
                break;
            }
        }
        if (!witnessed) return false;
    }
    return true;
}

bool MembershipIndex::minimal_in_fiber(const PoleVector& v, int coord) const {
    check_vector(v);
    if (coord < 0 || coord >= static_cast<int>(v.size())) {
        throw Error("fiber coordinate out of range");
    }
    if (!contains(v)) throw NotAMember("vector is not in the semigroup");
    for (Int c : v) {
        if (c <= 0) throw Error("fiber minimality requires strictly positive coordinates");
    }
    // Any dominated member with the same coord-th entry lives in [0, v].
    PoleVector u(v.size(), 0);
    u[static_cast<std::size_t>(coord)] = v[static_cast<std::size_t>(coord)];
    for (;;) {
        if (u != v && contains(u)) return false;
        // Odometer over the remaining coordinates.
        std::size_t pos = 0;
        while (pos < v.size()) {
            if (pos == static_cast<std::size_t>(coord)) {
                ++pos;
                continue;
            }
            if (u[pos] < v[pos]) {
                ++u[pos];
                break;
            }
            u[pos] = 0;
            ++pos;
        }
        if (pos == v.size()) break;
    }
    return true;
}

bool contains(const CurveParams& params, const PlaceTuple& tuple, const PoleVector& v) {
    Int bound = 0;
    for (Int c : v) bound = std::max(bound, c);
    return MembershipIndex(params, tuple, bound).contains(v);
}

SemigroupBox semigroup_box(const CurveParams& params, const PlaceTuple& tuple, Int bound) {
    if (bound < 0) throw Error("box bound must be nonnegative");
    Int points = 1;
    for (int i = 0; i < tuple.length(); ++i) {
        points = checked::mul(points, checked::add(bound, 1));
        if (points > (Int(1) << 27)) throw Error("box too large to enumerate");
    }
    MembershipIndex index(params, tuple, bound);
    const std::size_t len = static_cast<std::size_t>(tuple.length());
    std::vector<PoleVector> members;
    PoleVector v(len, 0);
    for (;;) {
        if (index.contains(v)) members.push_back(v);
        std::size_t pos = 0;
        while (pos < len && v[pos] == bound) {
            v[pos] = 0;
            ++pos;
        }
        if (pos == len) break;
        ++v[pos];
    }
    std::sort(members.begin(), members.end());
    return SemigroupBox{tuple.finite_count(), tuple.includes_infinity, bound, std::move(members)};
}

bool is_minimal_in_fiber(const CurveParams& params, const PlaceTuple& tuple, const PoleVector& v,
                         int coord) {
    Int bound = 0;
    for (Int c : v) bound = std::max(bound, c);
    return MembershipIndex(params, tuple, bound).minimal_in_fiber(v, coord);
}

}  // namespace kummerws
