#pragma once

#include <vector>

#include "kummerws/errors.hpp"
#include "kummerws/types.hpp"

namespace kummerws {

// Enumerates the weak compositions of `total` into `parts` nonnegative
// summands, in colexicographic order, starting from (total, 0, ..., 0).
// There are binomial(total + parts - 1, parts - 1) of them. The callback
// receives a reference valid only for the duration of the call.
template <typename Fn>
void for_each_weak_composition(Int total, int parts, Fn&& fn) {
    if (parts < 1) throw Error("weak compositions need at least one part");
    if (total < 0) return;
    std::vector<Int> c(static_cast<std::size_t>(parts), 0);
    c[0] = total;
    for (;;) {
        fn(static_cast<const std::vector<Int>&>(c));
        if (c[static_cast<std::size_t>(parts - 1)] == total) break;
        // Move the leftmost positive pile one slot right, flushing the
        // remainder back to the front.
        std::size_t t = 0;
        while (c[t] == 0) ++t;
        Int moved = c[t];
        c[t] = 0;
        c[0] = moved - 1;
        c[t + 1] += 1;
    }
}

}  // namespace kummerws
