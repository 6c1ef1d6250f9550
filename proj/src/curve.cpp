#include "kummerws/curve.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "kummerws/checked.hpp"

namespace kummerws {

Int DivisorSpec::degree() const {
    Int total = coeff_infinity;
    for (Int c : coeff_finite) total = checked::add(total, c);
    return total;
}

CurveParams validate_params(Int r, Int m, Int lambda, std::optional<Int> characteristic) {
    std::vector<RejectedParams::Reason> reasons;
    if (r <= 2) reasons.push_back(RejectedParams::Reason::r_too_small);
    if (m < 2) reasons.push_back(RejectedParams::Reason::m_too_small);
    if (lambda < 1) reasons.push_back(RejectedParams::Reason::lambda_too_small);
    if (r > 2 && m >= 2 && lambda >= 1) {
        // gcd(m, r*lambda) = 1 iff m is coprime to both factors; checking the
        // factors separately avoids forming the (possibly huge) product.
        if (std::gcd(m, r) != 1 || std::gcd(m, lambda) != 1) {
            reasons.push_back(RejectedParams::Reason::non_coprime);
        }
    }
    if (characteristic) {
        if (*characteristic < 2) {
            reasons.push_back(RejectedParams::Reason::characteristic_invalid);
        } else if (m >= 2 && m % *characteristic == 0) {
            reasons.push_back(RejectedParams::Reason::characteristic_divides_m);
        }
    }
    if (!reasons.empty()) {
        std::string msg = "rejected parameters:";
        for (auto reason : reasons) {
            msg += " ";
            msg += reason_string(reason);
            msg += ";";
        }
        msg.pop_back();
        throw RejectedParams(msg, std::move(reasons));
    }
    return CurveParams{r, m, lambda, characteristic};
}

Int genus(const CurveParams& params) {
    return checked::mul(params.r - 1, params.m - 1) / 2;
}

ZExponents z_exponents(const CurveParams& params) {
    // Extended Euclid for a*lambda + b*m = 1, canonicalized to 0 <= a < m.
    Int old_r = params.lambda, cur_r = params.m;
    Int old_s = 1, cur_s = 0;
    while (cur_r != 0) {
        Int q = old_r / cur_r;
        Int next_r = old_r - q * cur_r;
        Int next_s = old_s - q * cur_s;
        old_r = cur_r;
        cur_r = next_r;
        old_s = cur_s;
        cur_s = next_s;
    }
    if (old_r != 1) throw Error("lambda and m are not coprime");
    Int a = checked::pos_mod(old_s, params.m);
    Int b = checked::floor_div(checked::sub(1, checked::mul(a, params.lambda)), params.m);
    if (checked::sub(1, checked::mul(a, params.lambda)) % params.m != 0) {
        throw Error("internal error: Bezout residue not divisible by m");
    }
    return ZExponents{a, b};
}

DivisorSpec monomial_divisor(const CurveParams& params, const Monomial& mono) {
    if (static_cast<Int>(mono.linear_exps.size()) != params.r) {
        throw LengthMismatch("monomial exponent vector does not have length r");
    }
    DivisorSpec div;
    div.coeff_finite.resize(mono.linear_exps.size());
    Int exp_sum = 0;
    for (std::size_t i = 0; i < mono.linear_exps.size(); ++i) {
        div.coeff_finite[i] = checked::add(mono.z_exp, checked::mul(params.m, mono.linear_exps[i]));
        exp_sum = checked::add(exp_sum, mono.linear_exps[i]);
    }
    div.coeff_infinity = checked::neg(
        checked::add(checked::mul(params.r, mono.z_exp), checked::mul(params.m, exp_sum)));
    return div;
}

void validate_tuple(const CurveParams& params, const PlaceTuple& tuple) {
    if (tuple.length() < 1) throw InvalidTupleLength("tuple must contain at least one place");
    if (static_cast<Int>(tuple.finite_indices.size()) > params.r) {
        throw InvalidTupleLength("tuple has more finite places than the curve");
    }
    std::set<int> seen;
    for (int idx : tuple.finite_indices) {
        if (idx < 1 || static_cast<Int>(idx) > params.r) {
            throw Error("finite place index out of range [1, r]");
        }
        if (!seen.insert(idx).second) throw Error("duplicate place in tuple");
    }
}

DivisorSpec divisor_from_pole_vector(const CurveParams& params, const PlaceTuple& tuple,
                                     const PoleVector& pole_orders) {
    validate_tuple(params, tuple);
    if (static_cast<int>(pole_orders.size()) != tuple.length()) {
        throw LengthMismatch("pole vector length does not match tuple length");
    }
    DivisorSpec div;
    div.coeff_finite.assign(static_cast<std::size_t>(params.r), 0);
    for (int coord = 0; coord < tuple.length(); ++coord) {
        div.set_coefficient(tuple.place_at(coord), pole_orders[static_cast<std::size_t>(coord)]);
    }
    return div;
}

namespace {

struct ElementShape {
    Int j = 0;                // common residue of the finite coordinates
    Int k_infinity = 0;       // only meaningful when the tuple starts at Pinf
    std::vector<Int> k;       // k_i per finite coordinate
};

// Splits a strictly positive finite coordinate s as s = m*k + j with the
// shared residue j in [1, m-1]; rejects mixed residues.
ElementShape decompose_finite_coords(const CurveParams& params, const PoleVector& elem,
                                     std::size_t first_finite) {
    ElementShape shape;
    shape.j = checked::pos_mod(elem[first_finite], params.m);
    if (shape.j == 0) throw NotAGammaElement("finite coordinate divisible by m");
    for (std::size_t i = first_finite; i < elem.size(); ++i) {
        if (elem[i] <= 0) throw NotAGammaElement("finite coordinate not positive");
        if (checked::pos_mod(elem[i], params.m) != shape.j) {
            throw NotAGammaElement("finite coordinates disagree modulo m");
        }
        shape.k.push_back((elem[i] - shape.j) / params.m);
    }
    Int j_max = params.m - 1 - checked::floor_div(params.m, params.r);
    if (shape.j > j_max) throw NotAGammaElement("residue j exceeds m-1-floor(m/r)");
    return shape;
}

// Shared witness body: a pole of order m*k_1+j at the first finite place via
// z, corrections (x - a_i)^{k_1-k_i} at the remaining tuple places, and
// (x - a_mu)^{k_1+1} at every finite place off the tuple.
Monomial build_witness(const CurveParams& params, const PlaceTuple& tuple,
                       const ElementShape& shape) {
    Monomial mono;
    mono.linear_exps.assign(static_cast<std::size_t>(params.r), 0);
    Int k1 = shape.k.front();
    mono.z_exp = checked::neg(checked::add(checked::mul(params.m, k1), shape.j));
    std::vector<bool> on_tuple(static_cast<std::size_t>(params.r) + 1, false);
    for (std::size_t t = 0; t < tuple.finite_indices.size(); ++t) {
        int idx = tuple.finite_indices[t];
        on_tuple[static_cast<std::size_t>(idx)] = true;
        if (t > 0) {
            mono.linear_exps[static_cast<std::size_t>(idx - 1)] = checked::sub(k1, shape.k[t]);
        }
    }
    for (Int idx = 1; idx <= params.r; ++idx) {
        if (!on_tuple[static_cast<std::size_t>(idx)]) {
            mono.linear_exps[static_cast<std::size_t>(idx - 1)] = checked::add(k1, 1);
        }
    }
    return mono;
}

Monomial witness_single_finite(const CurveParams& params, int index, Int n) {
    Monomial mono;
    mono.linear_exps.assign(static_cast<std::size_t>(params.r), 0);
    if (n == 0) return mono;
    Int j = checked::pos_mod(n, params.m);
    Int k = (n - j) / params.m;
    if (j == 0) {
        mono.linear_exps[static_cast<std::size_t>(index - 1)] = -k;
        return mono;
    }
    // n = m*k + j lies in the semigroup iff k >= r-1-floor(r*j/m).
    if (k < params.r - 1 - checked::floor_div(checked::mul(params.r, j), params.m)) {
        throw NotAGammaElement("pole order is a gap at the finite place");
    }
    mono.z_exp = -n;
    for (Int idx = 1; idx <= params.r; ++idx) {
        if (idx != index) mono.linear_exps[static_cast<std::size_t>(idx - 1)] = checked::add(k, 1);
    }
    return mono;
}

// Inverse of a modulo m via extended Euclid; requires gcd(a, m) = 1.
Int mod_inverse(Int a, Int m) {
    Int old_r = checked::pos_mod(a, m), cur_r = m;
    Int old_s = 1, cur_s = 0;
    while (cur_r != 0) {
        Int q = old_r / cur_r;
        Int next_r = old_r - q * cur_r;
        Int next_s = old_s - q * cur_s;
        old_r = cur_r;
        cur_r = next_r;
        old_s = cur_s;
        cur_s = next_s;
    }
    if (old_r != 1) throw Error("arguments to mod_inverse are not coprime");
    return checked::pos_mod(old_s, m);
}

Monomial witness_single_infinity(const CurveParams& params, Int n) {
    Monomial mono;
    mono.linear_exps.assign(static_cast<std::size_t>(params.r), 0);
    if (n == 0) return mono;
    // n = a*m + b*r with a, b >= 0 and b minimal: b = n * r^{-1} mod m.
    Int b = checked::pos_mod(
        checked::mul(checked::pos_mod(n, params.m), mod_inverse(params.r, params.m)), params.m);
    Int a_times_m = checked::sub(n, checked::mul(b, params.r));
    if (a_times_m < 0 || a_times_m % params.m != 0) {
        throw NotAGammaElement("pole order is a gap at infinity");
    }
    mono.z_exp = b;
    mono.linear_exps[0] = a_times_m / params.m;
    return mono;
}

}  // namespace

Monomial witness_function(const CurveParams& params, const PlaceTuple& tuple,
                          const PoleVector& gamma_elem) {
    validate_tuple(params, tuple);
    if (static_cast<int>(gamma_elem.size()) != tuple.length()) {
        throw NotAGammaElement("element length does not match tuple length");
    }
    for (Int coord : gamma_elem) {
        if (coord < 0) throw NotAGammaElement("negative pole order");
    }

    const int l_fin = tuple.finite_count();
    if (!tuple.includes_infinity) {
        if (l_fin == 1) return witness_single_finite(params, tuple.finite_indices[0], gamma_elem[0]);
        ElementShape shape = decompose_finite_coords(params, gamma_elem, 0);
        Int k_sum = 0;
        for (Int k : shape.k) k_sum = checked::add(k_sum, k);
        Int budget = checked::sub(checked::sub(params.r, l_fin),
                                  checked::floor_div(checked::mul(params.r, shape.j), params.m));
        if (k_sum != budget) throw NotAGammaElement("k-exponents do not sum to the required budget");
        return build_witness(params, tuple, shape);
    }

    if (l_fin == 0) return witness_single_infinity(params, gamma_elem[0]);

    ElementShape shape = decompose_finite_coords(params, gamma_elem, 1);
    Int rj = checked::mul(params.r, shape.j);
    Int k0_num = checked::add(gamma_elem[0], rj);
    if (gamma_elem[0] <= 0) throw NotAGammaElement("infinity coordinate not positive");
    if (k0_num % params.m != 0) throw NotAGammaElement("infinity coordinate has the wrong residue");
    shape.k_infinity = k0_num / params.m;
    if (shape.k_infinity < checked::ceil_div(rj, params.m)) {
        throw NotAGammaElement("k0 below ceil(r*j/m)");
    }
    Int k_sum = shape.k_infinity;
    for (Int k : shape.k) k_sum = checked::add(k_sum, k);
    if (k_sum != checked::sub(params.r, l_fin)) {
        throw NotAGammaElement("k-exponents do not sum to r-l");
    }
    return build_witness(params, tuple, shape);
}

}  // namespace kummerws
