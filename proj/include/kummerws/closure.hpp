#pragma once

#include "kummerws/curve.hpp"
#include "kummerws/gamma.hpp"
#include "kummerws/types.hpp"

// Reconstruction of the full multi-place semigroup H from the embedded
// generating sets: v lies in H exactly when it is a least upper bound
// (coordinatewise max) of tuple-length many tilde elements. Membership is
// decided by the equivalent per-coordinate criterion — for every i some
// u in the tilde set has u <= v and u_i = v_i — which needs only
// l * |tilde| comparisons instead of |tilde|^l lubs. Generators with a
// coordinate above max(v) can never witness, so the tilde set is truncated
// at that bound.
namespace kummerws {

// Coordinatewise maximum of a nonempty family.
PoleVector lub(const std::vector<PoleVector>& vectors);

// Reusable membership queries against one tuple at a fixed coordinate bound.
class MembershipIndex {
 public:
    MembershipIndex(const CurveParams& params, const PlaceTuple& tuple, Int bound);

    bool contains(const PoleVector& v) const;

    // True iff no other member u of H has u <= v with u_i = v_i. Requires
    // v in H (else NotAMember) and strictly positive coordinates.
    bool minimal_in_fiber(const PoleVector& v, int coord) const;

    Int bound() const { return bound_; }

 private:
    void check_vector(const PoleVector& v) const;

    PlaceTuple tuple_;
    Int bound_ = 0;
    std::vector<PoleVector> tilde_;     // length >= 2 tuples
    std::vector<bool> nongap_;          // length-1 tuples, indexed by pole order
    // buckets_[i][s]: indices of tilde elements with i-th coordinate s
    std::vector<std::vector<std::vector<std::uint32_t>>> buckets_;
};

bool contains(const CurveParams& params, const PlaceTuple& tuple, const PoleVector& v);

struct SemigroupBox {
    int finite_count = 0;
    bool includes_infinity = false;
    Int bound = 0;
    std::vector<PoleVector> members;  // sorted lexicographically
};

// All members of H within [0, bound]^l.
SemigroupBox semigroup_box(const CurveParams& params, const PlaceTuple& tuple, Int bound);

bool is_minimal_in_fiber(const CurveParams& params, const PlaceTuple& tuple, const PoleVector& v,
                         int coord);

}  // namespace kummerws
