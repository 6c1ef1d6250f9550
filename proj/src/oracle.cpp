#include "kummerws/oracle.hpp"

#include <algorithm>

#include "kummerws/checked.hpp"

namespace kummerws {

Int rr_dimension(const CurveParams& params, const DivisorSpec& divisor) {
    if (static_cast<Int>(divisor.coeff_finite.size()) != params.r) {
        throw UnsupportedSupport("divisor support does not match the curve's ramified places");
    }
    Int total = 0;
    for (Int t = 0; t < params.m; ++t) {
        Int t_lambda = checked::mul(t, params.lambda);
        Int b_t = checked::ceil_div(
            checked::sub(checked::mul(t_lambda, params.r), divisor.coeff_infinity), params.m);
        Int term = checked::sub(1, b_t);
        for (Int c : divisor.coeff_finite) {
            Int a_it = checked::ceil_div(checked::neg(checked::add(c, t_lambda)), params.m);
            term = checked::sub(term, a_it);
        }
        if (term > 0) total = checked::add(total, term);
    }
    return total;
}

DimensionTable::DimensionTable(const CurveParams& params, std::size_t max_entries)
    : params_(params), max_entries_(max_entries) {}

Int DimensionTable::dimension(const DivisorSpec& divisor) const {
    std::vector<Int> key;
    key.reserve(divisor.coeff_finite.size() + 1);
    key.push_back(divisor.coeff_infinity);
    key.insert(key.end(), divisor.coeff_finite.begin(), divisor.coeff_finite.end());
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    Int value = rr_dimension(params_, divisor);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (cache_.size() < max_entries_) cache_.emplace(std::move(key), value);
    }
    return value;
}

namespace {

bool member_dims(const DimensionTable& table, const PlaceTuple& tuple, const PoleVector& v) {
    DivisorSpec divisor = divisor_from_pole_vector(table.params(), tuple, v);
    Int full = table.dimension(divisor);
    for (int coord = 0; coord < tuple.length(); ++coord) {
        if (v[static_cast<std::size_t>(coord)] == 0) continue;
        DivisorSpec reduced = divisor;
        PlaceId place = tuple.place_at(coord);
        reduced.set_coefficient(place, reduced.coefficient(place) - 1);
        if (table.dimension(reduced) == full) return false;
    }
    return true;
}

void check_pole_vector(const PlaceTuple& tuple, const PoleVector& v) {
    if (static_cast<int>(v.size()) != tuple.length()) {
        throw LengthMismatch("pole vector length does not match tuple length");
    }
    for (Int c : v) {
        if (c < 0) throw Error("pole orders must be nonnegative");
    }
}

// Flat ell table over the lattice box [0, bound]^len for one tuple; the box
// form of DimensionTable, sized for exhaustive scans.
class BoxDimensions {
 public:
    BoxDimensions(const CurveParams& params, const PlaceTuple& tuple, Int bound)
        : len_(static_cast<std::size_t>(tuple.length())), bound_(bound) {
        Int points = 1;
        for (std::size_t i = 0; i < len_; ++i) {
            points = checked::mul(points, checked::add(bound, 1));
            if (points > (Int(1) << 24)) throw Error("oracle box too large to enumerate");
        }
        size_ = static_cast<std::size_t>(points);
        strides_.resize(len_);
        std::size_t stride = 1;
        for (std::size_t i = 0; i < len_; ++i) {
            strides_[i] = stride;
            stride *= static_cast<std::size_t>(bound + 1);
        }
        ell_.resize(size_);
        DivisorSpec divisor;
        divisor.coeff_finite.assign(static_cast<std::size_t>(params.r), 0);
        PoleVector v(len_, 0);
        for (std::size_t idx = 0; idx < size_; ++idx) {
            for (int coord = 0; coord < tuple.length(); ++coord) {
                divisor.set_coefficient(tuple.place_at(coord),
                                        v[static_cast<std::size_t>(coord)]);
            }
            ell_[idx] = static_cast<int>(rr_dimension(params, divisor));
            std::size_t pos = 0;
            while (pos < len_ && v[pos] == bound) {
                v[pos] = 0;
                ++pos;
            }
            if (pos < len_) ++v[pos];
        }
    }

    std::size_t size() const { return size_; }
    std::size_t stride(std::size_t coord) const { return strides_[coord]; }
    Int bound() const { return bound_; }
    std::size_t len() const { return len_; }
    int ell(std::size_t idx) const { return ell_[idx]; }

    // Index idx holds the point whose coord-th entry is decode(idx, coord).
    Int decode(std::size_t idx, std::size_t coord) const {
        return static_cast<Int>((idx / strides_[coord]) % static_cast<std::size_t>(bound_ + 1));
    }

    bool member(std::size_t idx) const {
        for (std::size_t coord = 0; coord < len_; ++coord) {
            if (decode(idx, coord) == 0) continue;
            if (ell_[idx] == ell_[idx - strides_[coord]]) return false;
        }
        return true;
    }

 private:
    std::size_t len_;
    Int bound_;
    std::size_t size_ = 0;
    std::vector<std::size_t> strides_;
    std::vector<int> ell_;
};

}  // namespace

bool member_oracle(const CurveParams& params, const PlaceTuple& tuple, const PoleVector& v) {
    DimensionTable table(params, 0);  // no caching for one-off queries
    return member_oracle(table, tuple, v);
}

bool member_oracle(const DimensionTable& table, const PlaceTuple& tuple, const PoleVector& v) {
    validate_tuple(table.params(), tuple);
    check_pole_vector(tuple, v);
    return member_dims(table, tuple, v);
}

GapList gaps_oracle(const CurveParams& params, PlaceId place) {
    if (!place.is_infinity() && static_cast<Int>(place.index()) > params.r) {
        throw Error("place index out of range [1, r]");
    }
    const Int g = genus(params);
    DivisorSpec divisor;
    divisor.coeff_finite.assign(static_cast<std::size_t>(params.r), 0);
    std::vector<Int> gaps;
    Int previous = rr_dimension(params, divisor);  // ell(0)
    for (Int n = 1; n <= 2 * g - 1; ++n) {
        divisor.set_coefficient(place, n);
        Int current = rr_dimension(params, divisor);
        if (current == previous) gaps.push_back(n);
        previous = current;
    }
    return GapList{place, std::move(gaps)};
}

GammaSet gamma_oracle(const CurveParams& params, const PlaceTuple& tuple) {
    return detail::gamma_oracle_in_fiber(params, tuple, 0);
}

namespace detail {

GammaSet gamma_oracle_in_fiber(const CurveParams& params, const PlaceTuple& tuple, int fiber) {
    validate_tuple(params, tuple);
    if (tuple.length() < 2) {
        throw InvalidTupleLength("generating-set scans need a tuple of length >= 2");
    }
    if (fiber < 0 || fiber >= tuple.length()) throw Error("fiber coordinate out of range");

    const Int bound = 2 * genus(params) - 1;
    BoxDimensions box(params, tuple, bound);
    const std::size_t len = box.len();

    // Gap bitmaps per coordinate, derived from the dimension table itself.
    std::vector<std::vector<bool>> is_gap_at(len);
    for (std::size_t coord = 0; coord < len; ++coord) {
        is_gap_at[coord].assign(static_cast<std::size_t>(bound) + 1, false);
        for (Int gap : gaps_oracle(params, tuple.place_at(static_cast<int>(coord))).gaps) {
            is_gap_at[coord][static_cast<std::size_t>(gap)] = true;
        }
    }

    // dominated[idx]: some member u has u <= point(idx) and matches it on the
    // fiber coordinate. Row-major order makes every predecessor available.
    std::vector<bool> member(box.size()), dominated(box.size());
    for (std::size_t idx = 0; idx < box.size(); ++idx) {
        member[idx] = box.member(idx);
        bool dom = member[idx];
        for (std::size_t coord = 0; coord < len && !dom; ++coord) {
            if (coord == static_cast<std::size_t>(fiber)) continue;
            if (box.decode(idx, coord) > 0) dom = dominated[idx - box.stride(coord)];
        }
        dominated[idx] = dom;
    }

    std::vector<PoleVector> elements;
    for (std::size_t idx = 0; idx < box.size(); ++idx) {
        if (!member[idx]) continue;
        PoleVector v(len);
        bool all_gaps = true;
        for (std::size_t coord = 0; coord < len; ++coord) {
            v[coord] = box.decode(idx, coord);
            if (v[coord] < 1 || !is_gap_at[coord][static_cast<std::size_t>(v[coord])]) {
                all_gaps = false;
                break;
            }
        }
        if (!all_gaps) continue;
        bool minimal = true;
        for (std::size_t coord = 0; coord < len && minimal; ++coord) {
            if (coord == static_cast<std::size_t>(fiber)) continue;
            if (dominated[idx - box.stride(coord)]) minimal = false;
        }
        if (minimal) elements.push_back(std::move(v));
    }
    std::sort(elements.begin(), elements.end());
    return GammaSet{params, tuple.finite_count(), tuple.includes_infinity, std::move(elements)};
}

}  // namespace detail

bool pure_gap_oracle(const CurveParams& params, const PlaceTuple& tuple, const PoleVector& v) {
    DimensionTable table(params, 0);
    return pure_gap_oracle(table, tuple, v);
}

bool pure_gap_oracle(const DimensionTable& table, const PlaceTuple& tuple, const PoleVector& v) {
    validate_tuple(table.params(), tuple);
    check_pole_vector(tuple, v);
    for (Int c : v) {
        if (c <= 0) throw Error("pure gap queries require strictly positive coordinates");
    }
    DivisorSpec divisor = divisor_from_pole_vector(table.params(), tuple, v);
    Int full = table.dimension(divisor);
    for (int coord = 0; coord < tuple.length(); ++coord) {
        DivisorSpec reduced = divisor;
        PlaceId place = tuple.place_at(coord);
        reduced.set_coefficient(place, reduced.coefficient(place) - 1);
        if (table.dimension(reduced) != full) return false;
    }
    return true;
}

std::vector<PoleVector> pure_gaps_box(const CurveParams& params, const PlaceTuple& tuple) {
    validate_tuple(params, tuple);
    if (tuple.length() < 2) {
        throw InvalidTupleLength("pure gap scans need a tuple of length >= 2");
    }
    const std::size_t len = static_cast<std::size_t>(tuple.length());
    std::vector<std::vector<Int>> gap_values(len);
    for (std::size_t coord = 0; coord < len; ++coord) {
        gap_values[coord] = gaps_oracle(params, tuple.place_at(static_cast<int>(coord))).gaps;
    }
    DimensionTable table(params);
    std::vector<PoleVector> result;
    std::vector<std::size_t> pick(len, 0);
    for (;;) {
        PoleVector v(len);
        for (std::size_t coord = 0; coord < len; ++coord) v[coord] = gap_values[coord][pick[coord]];
        if (pure_gap_oracle(table, tuple, v)) result.push_back(std::move(v));
        std::size_t pos = 0;
        while (pos < len && pick[pos] + 1 == gap_values[pos].size()) {
            pick[pos] = 0;
            ++pos;
        }
        if (pos == len) break;
        ++pick[pos];
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace kummerws
