#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kummerws/errors.hpp"

namespace kummerws {

using Int = std::int64_t;

// Pole-order vector aligned with a PlaceTuple; compared lexicographically.
using PoleVector = std::vector<Int>;

// A ramified place of the cover: either the unique place at infinity or one
// of the r finite places, addressed by a 1-based index.
class PlaceId {
 public:
    static PlaceId infinity() { return PlaceId(0); }

    static PlaceId finite(int index) {
        if (index < 1) throw Error("finite place index must be >= 1");
        return PlaceId(index);
    }

    bool is_infinity() const { return idx_ == 0; }

    int index() const {
        if (is_infinity()) throw Error("place at infinity has no finite index");
        return idx_;
    }

    friend bool operator==(const PlaceId&, const PlaceId&) = default;

 private:
    explicit PlaceId(int idx) : idx_(idx) {}
    int idx_;
};

inline std::string to_string(PlaceId place) {
    return place.is_infinity() ? std::string("Pinf") : "P" + std::to_string(place.index());
}

// Ordered tuple of distinct ramified places. When the place at infinity is
// included it always occupies coordinate 0.
struct PlaceTuple {
    bool includes_infinity = false;
    std::vector<int> finite_indices;  // 1-based, pairwise distinct

    int finite_count() const { return static_cast<int>(finite_indices.size()); }
    int length() const { return finite_count() + (includes_infinity ? 1 : 0); }

    PlaceId place_at(int coord) const {
        if (coord < 0 || coord >= length()) throw Error("tuple coordinate out of range");
        if (includes_infinity) {
            if (coord == 0) return PlaceId::infinity();
            return PlaceId::finite(finite_indices[static_cast<std::size_t>(coord - 1)]);
        }
        return PlaceId::finite(finite_indices[static_cast<std::size_t>(coord)]);
    }

    friend bool operator==(const PlaceTuple&, const PlaceTuple&) = default;
};

// Integer coefficients on the ramified places {Pinf, P1, ..., Pr}.
struct DivisorSpec {
    Int coeff_infinity = 0;
    std::vector<Int> coeff_finite;  // index i-1 holds the coefficient at P_i

    Int coefficient(PlaceId place) const {
        if (place.is_infinity()) return coeff_infinity;
        return coeff_finite.at(static_cast<std::size_t>(place.index() - 1));
    }

    void set_coefficient(PlaceId place, Int value) {
        if (place.is_infinity()) {
            coeff_infinity = value;
        } else {
            coeff_finite.at(static_cast<std::size_t>(place.index() - 1)) = value;
        }
    }

    Int degree() const;

    friend bool operator==(const DivisorSpec&, const DivisorSpec&) = default;
};

// z^{z_exp} * prod_i (x - a_i)^{linear_exps[i-1]}. Negative exponents encode
// poles; the roots a_i themselves are never represented.
struct Monomial {
    Int z_exp = 0;
    std::vector<Int> linear_exps;  // length r

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

}  // namespace kummerws
