#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

#include "kummerws/closure.hpp"
#include "kummerws/onepoint.hpp"
#include "kummerws/oracle.hpp"

#include "test_support.hpp"

using namespace kummerws;
using kws_test::tuple_of;

namespace {

// Box membership straight from the lub description: every lub of
// tuple-length many tilde elements that stays in the box.
std::vector<PoleVector> lub_closure_box(const CurveParams& p, const PlaceTuple& tuple, Int bound) {
    TildeSet tilde = gamma_tilde(p, tuple, bound);
    const std::size_t len = static_cast<std::size_t>(tuple.length());
    std::set<PoleVector> members;
    std::vector<std::size_t> pick(len, 0);
    for (;;) {
        PoleVector v(len, 0);
        for (std::size_t t = 0; t < len; ++t) {
            for (std::size_t i = 0; i < len; ++i) {
                v[i] = std::max(v[i], tilde.elements[pick[t]][i]);
            }
        }
        if (*std::max_element(v.begin(), v.end()) <= bound) members.insert(v);
        std::size_t pos = 0;
        while (pos < len && pick[pos] + 1 == tilde.elements.size()) {
            pick[pos] = 0;
            ++pos;
        }
        if (pos == len) break;
        ++pick[pos];
    }
    return {members.begin(), members.end()};
}

std::vector<PoleVector> oracle_box(const CurveParams& p, const PlaceTuple& tuple, Int bound) {
    DimensionTable table(p);
    const std::size_t len = static_cast<std::size_t>(tuple.length());
    std::vector<PoleVector> members;
    PoleVector v(len, 0);
    for (;;) {
        if (member_oracle(table, tuple, v)) members.push_back(v);
        std::size_t pos = 0;
        while (pos < len && v[pos] == bound) {
            v[pos] = 0;
            ++pos;
        }
        if (pos == len) break;
        ++v[pos];
    }
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace

TEST_CASE("lub is the coordinatewise maximum") {
    CHECK(lub({{1, 21}, {21, 1}}) == PoleVector{21, 21});
    CHECK(lub({{4, 7, 2}}) == PoleVector{4, 7, 2});
    CHECK(lub({{4, 1, 19}, {2, 5, 5}}) == PoleVector{4, 5, 19});
    CHECK_THROWS_AS(lub({{1, 2}, {1, 2, 3}}), LengthMismatch);
    CHECK_THROWS_AS(lub({}), Error);
}

TEST_CASE("membership for the (7,5,1) pair") {
    CurveParams p = validate_params(7, 5, 1);
    PlaceTuple pair = tuple_of({1, 2});
    CHECK(contains(p, pair, {1, 21}));
    CHECK(contains(p, pair, {21, 21}));
    CHECK_FALSE(contains(p, pair, {1, 1}));
    CHECK(contains(p, pair, {0, 0}));
    CHECK(contains(p, tuple_of({1, 2, 3}, true), {0, 0, 0, 0}));
}

TEST_CASE("membership agrees with the dimension oracle on the (7,5,1) pair") {
    CurveParams p = validate_params(7, 5, 1);
    PlaceTuple pair = tuple_of({1, 2});
    CHECK(member_oracle(p, pair, {21, 21}));
    CHECK_FALSE(member_oracle(p, pair, {1, 1}));
}

TEST_CASE("one-place boxes reduce to nongap lists") {
    CurveParams p = validate_params(7, 5, 1);
    SemigroupBox box = semigroup_box(p, tuple_of({1}), 30);
    std::vector<Int> flattened;
    for (const PoleVector& v : box.members) flattened.push_back(v[0]);
    CHECK(flattened == nongaps_up_to(p, PlaceId::finite(1), 30));
}

TEST_CASE("tiny boxes") {
    CurveParams p = validate_params(3, 2, 1);
    PlaceTuple pair = tuple_of({1, 2});
    SemigroupBox box = semigroup_box(p, pair, 3);
    CHECK(box.members == oracle_box(p, pair, 3));
    // 1 is the only gap, so (1,0) and (0,1) are out.
    std::set<PoleVector> as_set(box.members.begin(), box.members.end());
    CHECK(as_set.count({0, 0}) == 1);
    CHECK(as_set.count({1, 0}) == 0);
    CHECK(as_set.count({0, 1}) == 0);
    CHECK(as_set.count({1, 1}) == 1);

    SemigroupBox zero = semigroup_box(p, pair, 0);
    CHECK(zero.members == std::vector<PoleVector>{PoleVector{0, 0}});
}

TEST_CASE("boxes match the oracle for all admissible r<=7, m<=7, lengths<=3") {
    for (Int r = 3; r <= 7; ++r) {
        for (Int m = 2; m <= 7; ++m) {
            for (Int lambda : {Int(1), Int(2)}) {
                CurveParams p;
                try {
                    p = validate_params(r, m, lambda);
                } catch (const RejectedParams&) {
                    continue;
                }
                const Int bound = 2 * genus(p) + 5;
                for (const PlaceTuple& tuple : {tuple_of({1, 2}), tuple_of({1, 2, 3}),
                                                tuple_of({1}, true), tuple_of({1, 2}, true)}) {
                    // Flat dimension scan over the box, independent of the
                    // tilde-set machinery under test.
                    const std::size_t len = static_cast<std::size_t>(tuple.length());
                    const std::size_t side = static_cast<std::size_t>(bound) + 1;
                    std::size_t size = 1;
                    for (std::size_t i = 0; i < len; ++i) size *= side;
                    std::vector<Int> ell(size);
                    DivisorSpec d{0, std::vector<Int>(static_cast<std::size_t>(p.r), 0)};
                    PoleVector v(len, 0);
                    for (std::size_t idx = 0; idx < size; ++idx) {
                        for (std::size_t c = 0; c < len; ++c) {
                            d.set_coefficient(tuple.place_at(static_cast<int>(c)), v[c]);
                        }
                        ell[idx] = rr_dimension(p, d);
                        std::size_t pos = 0;
                        while (pos < len && v[pos] == bound) {
                            v[pos] = 0;
                            ++pos;
                        }
                        if (pos < len) ++v[pos];
                    }
                    std::vector<PoleVector> expected;
                    std::fill(v.begin(), v.end(), 0);
                    std::size_t stride = 1;
                    std::vector<std::size_t> strides(len);
                    for (std::size_t i = 0; i < len; ++i) {
                        strides[i] = stride;
                        stride *= side;
                    }
                    for (std::size_t idx = 0; idx < size; ++idx) {
                        bool member = true;
                        for (std::size_t c = 0; c < len && member; ++c) {
                            if (v[c] > 0 && ell[idx] == ell[idx - strides[c]]) member = false;
                        }
                        if (member) expected.push_back(v);
                        std::size_t pos = 0;
                        while (pos < len && v[pos] == bound) {
                            v[pos] = 0;
                            ++pos;
                        }
                        if (pos < len) ++v[pos];
                    }
                    std::sort(expected.begin(), expected.end());
                    CAPTURE(r);
                    CAPTURE(m);
                    CAPTURE(lambda);
                    CAPTURE(tuple.length());
                    CHECK(semigroup_box(p, tuple, bound).members == expected);
                }
            }
        }
    }
}

TEST_CASE("boxes match the oracle across small parameter sets and shapes") {
    for (auto [r, m, lambda] : {std::array<Int, 3>{3, 2, 1}, {3, 4, 1}, {4, 3, 1}, {5, 3, 2}}) {
        CurveParams p = validate_params(r, m, lambda);
        Int bound = 2 * genus(p) + 5;
        for (const PlaceTuple& tuple :
             {tuple_of({1, 2}), tuple_of({1, 2, 3}), tuple_of({1}, true), tuple_of({1, 2}, true)}) {
            const Int cur_r = p.r;
            const Int cur_m = p.m;
            CAPTURE(cur_r);
            CAPTURE(cur_m);
            CAPTURE(tuple.length());
            CHECK(semigroup_box(p, tuple, bound).members == oracle_box(p, tuple, bound));
        }
    }
}

TEST_CASE("point membership and the lub-closure strategy agree") {
    for (auto [r, m, lambda] : {std::array<Int, 3>{3, 2, 1}, {3, 4, 1}, {4, 3, 1}}) {
        CurveParams p = validate_params(r, m, lambda);
        Int bound = 2 * genus(p) + 3;
        for (const PlaceTuple& tuple : {tuple_of({1, 2}), tuple_of({1}, true)}) {
            CHECK(semigroup_box(p, tuple, bound).members == lub_closure_box(p, tuple, bound));
        }
    }
}

TEST_CASE("fiber minimality on the (7,5,1) pair") {
    CurveParams p = validate_params(7, 5, 1);
    PlaceTuple pair = tuple_of({1, 2});
    CHECK(is_minimal_in_fiber(p, pair, {1, 21}, 0));
    CHECK_FALSE(is_minimal_in_fiber(p, pair, {21, 21}, 0));
    CHECK_THROWS_AS(is_minimal_in_fiber(p, pair, {1, 1}, 0), NotAMember);
}

TEST_CASE("fiber minimality does not depend on the coordinate") {
    for (auto [r, m, lambda] : {std::array<Int, 3>{3, 2, 1}, {5, 3, 1}}) {
        CurveParams p = validate_params(r, m, lambda);
        PlaceTuple pair = tuple_of({1, 2});
        Int bound = 2 * genus(p) + 5;
        MembershipIndex index(p, pair, bound);
        for (const PoleVector& v : semigroup_box(p, pair, bound).members) {
            if (v[0] == 0 || v[1] == 0) continue;
            CHECK(index.minimal_in_fiber(v, 0) == index.minimal_in_fiber(v, 1));
        }
    }
}

TEST_CASE("boxes are closed under lub and addition") {
    CurveParams p = validate_params(3, 4, 1);
    PlaceTuple pair = tuple_of({1, 2});
    const Int bound = 2 * genus(p) + 5;
    SemigroupBox box = semigroup_box(p, pair, bound);
    std::set<PoleVector> as_set(box.members.begin(), box.members.end());
    for (const PoleVector& a : box.members) {
        for (const PoleVector& b : box.members) {
            CHECK(as_set.count(lub({a, b})) == 1);
            PoleVector sum = {a[0] + b[0], a[1] + b[1]};
            if (sum[0] <= bound && sum[1] <= bound) CHECK(as_set.count(sum) == 1);
        }
    }
}

TEST_CASE("generating sets are recovered from the closure") {
    for (auto [r, m, lambda] : {std::array<Int, 3>{3, 2, 1}, {3, 4, 1}, {4, 3, 1}}) {
        CurveParams p = validate_params(r, m, lambda);
        const Int bound = 2 * genus(p) + 5;
        for (const PlaceTuple& tuple : {tuple_of({1, 2}), tuple_of({1}, true)}) {
            MembershipIndex index(p, tuple, bound);
            std::vector<std::set<Int>> gap_at(2);
            for (int coord = 0; coord < 2; ++coord) {
                PlaceId place = tuple.place_at(coord);
                const GapList gaps =
                    place.is_infinity() ? gaps_at_infinity(p) : gaps_at_finite(p);
                gap_at[coord] = {gaps.gaps.begin(), gaps.gaps.end()};
            }
            std::vector<PoleVector> recovered;
            for (const PoleVector& v : semigroup_box(p, tuple, bound).members) {
                if (v[0] < 1 || v[1] < 1) continue;
                if (gap_at[0].count(v[0]) == 0 || gap_at[1].count(v[1]) == 0) continue;
                if (index.minimal_in_fiber(v, 0)) recovered.push_back(v);
            }
            CHECK(recovered == gamma(p, tuple).elements);
        }
    }
}

TEST_CASE("membership rejects malformed vectors") {
    CurveParams p = validate_params(7, 5, 1);
    PlaceTuple pair = tuple_of({1, 2});
    CHECK_THROWS_AS(contains(p, pair, {1, 2, 3}), LengthMismatch);
    CHECK_THROWS_AS(contains(p, pair, {-1, 2}), Error);
    CHECK_THROWS_AS(semigroup_box(p, pair, -1), Error);
    MembershipIndex index(p, pair, 10);
    CHECK_THROWS_AS(index.contains({11, 0}), Error);
    CHECK_THROWS_AS(index.minimal_in_fiber({6, 6}, 2), Error);
}
