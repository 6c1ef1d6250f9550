#include "kummerws/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "kummerws/gamma.hpp"
#include "kummerws/onepoint.hpp"
#include "kummerws/oracle.hpp"

namespace kummerws {

namespace {

std::string format_vector(const PoleVector& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ",";
        out << v[i];
    }
    out << ")";
    return out.str();
}

std::string first_difference(const std::vector<PoleVector>& got,
                             const std::vector<PoleVector>& want) {
    std::ostringstream out;
    out << "formula has " << got.size() << " elements, oracle has " << want.size();
    for (std::size_t i = 0; i < std::max(got.size(), want.size()); ++i) {
        if (i >= got.size() || i >= want.size() || got[i] != want[i]) {
            out << "; first mismatch at position " << i << ": formula ";
            out << (i < got.size() ? format_vector(got[i]) : std::string("<none>"));
            out << ", oracle ";
            out << (i < want.size() ? format_vector(want[i]) : std::string("<none>"));
            break;
        }
    }
    return out.str();
}

PlaceTuple initial_tuple(bool with_infinity, int finite_count) {
    PlaceTuple tuple;
    tuple.includes_infinity = with_infinity;
    for (int i = 1; i <= finite_count; ++i) tuple.finite_indices.push_back(i);
    return tuple;
}

struct PendingCase {
    CurveParams params;
    std::string label;
    std::function<void(SweepCase&)> run;
};

}  // namespace

std::vector<CurveParams> admissible_params(Int max_r, Int max_m, const std::vector<Int>& lambdas) {
    std::vector<CurveParams> result;
    std::vector<Int> ordered_lambdas = lambdas;
    std::sort(ordered_lambdas.begin(), ordered_lambdas.end());
    ordered_lambdas.erase(std::unique(ordered_lambdas.begin(), ordered_lambdas.end()),
                          ordered_lambdas.end());
    for (Int r = 3; r <= max_r; ++r) {
        for (Int m = 2; m <= max_m; ++m) {
            for (Int lambda : ordered_lambdas) {
                try {
                    result.push_back(validate_params(r, m, lambda));
                } catch (const RejectedParams&) {
                }
            }
        }
    }
    return result;
}

std::vector<SweepCase> verify_sweep(const SweepBounds& bounds, int jobs) {
    if (bounds.max_r < 3 || bounds.max_m < 2) throw Error("sweep bounds leave no admissible parameters");
    if (bounds.max_total_length < 1) throw Error("sweep needs max length >= 1");
    if (bounds.lambdas.empty()) throw Error("sweep needs at least one lambda");
    if (jobs < 1) throw Error("sweep needs at least one worker");

    std::vector<PendingCase> pending;
    for (const CurveParams& params : admissible_params(bounds.max_r, bounds.max_m, bounds.lambdas)) {
        auto gap_case = [](auto compute_formula, auto compute_oracle) {
            return [compute_formula, compute_oracle](SweepCase& out) {
                auto got = compute_formula().gaps;
                auto want = compute_oracle().gaps;
                out.pass = got == want;
                if (!out.pass) {
                    out.detail = "formula has " + std::to_string(got.size()) +
                                 " gaps, oracle has " + std::to_string(want.size());
                }
            };
        };
        pending.push_back({params, "gaps(P1)",
                           gap_case([params] { return gaps_at_finite(params); },
                                    [params] { return gaps_oracle(params, PlaceId::finite(1)); })});
        pending.push_back({params, "gaps(Pinf)",
                           gap_case([params] { return gaps_at_infinity(params); },
                                    [params] { return gaps_oracle(params, PlaceId::infinity()); })});
        const int max_len = bounds.max_total_length;
        for (int l = 2; l <= std::min<Int>(max_len, params.r); ++l) {
            PlaceTuple tuple = initial_tuple(false, l);
            std::string label = "gamma(P1..P" + std::to_string(l) + ")";
            pending.push_back({params, label, [params, tuple, l](SweepCase& out) {
                                   auto got = gamma_finite(params, l).elements;
                                   auto want = gamma_oracle(params, tuple).elements;
                                   out.pass = got == want;
                                   if (!out.pass) out.detail = first_difference(got, want);
                               }});
        }
        for (int l = 1; l <= std::min<Int>(max_len - 1, params.r); ++l) {
            PlaceTuple tuple = initial_tuple(true, l);
            std::string label = "gamma(Pinf,P1..P" + std::to_string(l) + ")";
            pending.push_back({params, label, [params, tuple, l](SweepCase& out) {
                                   auto got = gamma_with_infinity(params, l).elements;
                                   auto want = gamma_oracle(params, tuple).elements;
                                   out.pass = got == want;
                                   if (!out.pass) out.detail = first_difference(got, want);
                               }});
        }
    }

    std::vector<SweepCase> results(pending.size());
    for (std::size_t i = 0; i < pending.size(); ++i) {
        results[i].r = pending[i].params.r;
        results[i].m = pending[i].params.m;
        results[i].lambda = pending[i].params.lambda;
        results[i].label = pending[i].label;
    }

    auto worker = [&](std::atomic<std::size_t>& next) {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= pending.size()) break;
            try {
                pending[i].run(results[i]);
            } catch (const std::exception& e) {
                results[i].pass = false;
                results[i].detail = e.what();
            }
        }
    };

    std::atomic<std::size_t> next{0};
    if (jobs == 1) {
        worker(next);
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back([&] { worker(next); });
        for (auto& th : threads) th.join();
    }
    return results;
}

bool all_passed(const std::vector<SweepCase>& cases) {
    return std::all_of(cases.begin(), cases.end(), [](const SweepCase& c) { return c.pass; });
}

}  // namespace kummerws
