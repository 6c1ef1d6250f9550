// Command-line front end. Data goes to stdout, diagnostics to stderr; exit
// code 0 iff the computation succeeded (an empty set is a success). Output
// format comes from --format, falling back to the KUMMERWS_FORMAT
// environment variable and then to "table".

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kummerws/closure.hpp"
#include "kummerws/curve.hpp"
#include "kummerws/gamma.hpp"
#include "kummerws/onepoint.hpp"
#include "kummerws/oracle.hpp"
#include "kummerws/render.hpp"
#include "kummerws/sweep.hpp"
#include "kummerws/version.hpp"

namespace {

using kummerws::Int;

struct ParamArgs {
    Int r = 0;
    Int m = 0;
    Int lambda = 1;
    std::optional<Int> characteristic;

    kummerws::CurveParams validate() const {
        return kummerws::validate_params(r, m, lambda, characteristic);
    }
};

void add_param_options(CLI::App* cmd, ParamArgs& args) {
    cmd->add_option("-r,--roots", args.r, "number of distinct roots of f")->required();
    cmd->add_option("-m,--degree", args.m, "degree of the cyclic cover")->required();
    cmd->add_option("-l,--lambda", args.lambda, "exponent of f(x)")->capture_default_str();
    cmd->add_option("-p,--characteristic", args.characteristic,
                    "field characteristic (metadata; must not divide m)");
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) parts.push_back(token);
    return parts;
}

Int parse_int(const std::string& token, const char* what) {
    std::size_t used = 0;
    Int value = 0;
    try {
        value = std::stoll(token, &used);
    } catch (const std::exception&) {
        throw kummerws::Error(std::string("invalid ") + what + ": '" + token + "'");
    }
    if (used != token.size()) {
        throw kummerws::Error(std::string("invalid ") + what + ": '" + token + "'");
    }
    return value;
}

// Tuple grammar: comma-separated tokens; "inf" is allowed only in the first
// position; finite places are 1-based indices.
kummerws::PlaceTuple parse_places(const std::string& spec) {
    kummerws::PlaceTuple tuple;
    const std::vector<std::string> parts = split_commas(spec);
    if (parts.empty()) throw kummerws::Error("empty place list");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == "inf") {
            if (i != 0) throw kummerws::Error("'inf' is only allowed as the first place");
            tuple.includes_infinity = true;
            continue;
        }
        Int idx = parse_int(parts[i], "place index");
        if (idx < 1) throw kummerws::Error("finite place indices start at 1");
        tuple.finite_indices.push_back(static_cast<int>(idx));
    }
    return tuple;
}

kummerws::PlaceId parse_place(const std::string& token) {
    if (token == "inf") return kummerws::PlaceId::infinity();
    Int idx = parse_int(token, "place index");
    if (idx < 1) throw kummerws::Error("finite place indices start at 1");
    return kummerws::PlaceId::finite(static_cast<int>(idx));
}

kummerws::PoleVector parse_vector(const std::string& spec) {
    kummerws::PoleVector v;
    for (const std::string& token : split_commas(spec)) {
        v.push_back(parse_int(token, "pole order"));
    }
    return v;
}

void emit(const kummerws::OutputDocument& doc, const std::string& format_flag) {
    kummerws::Format format =
        format_flag.empty() ? kummerws::default_format() : kummerws::parse_format(format_flag);
    std::cout << doc.render(format);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weierstrass semigroups at totally ramified places of cyclic covers "
                 "y^m = f(x)^lambda, with a brute-force verification oracle"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kummerws::tool_version));

    std::string format_flag;
    ParamArgs params_args;
    std::string places_spec;
    std::string place_spec;
    std::string vector_spec;
    Int bound = 0;
    kummerws::SweepBounds sweep_bounds;
    std::string lambdas_spec = "1";
    int jobs = 1;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_flag, "output format: table, json or csv")
            ->check(CLI::IsMember({"table", "json", "csv"}));
    };

    CLI::App* cmd_genus = app.add_subcommand("genus", "genus (r-1)(m-1)/2");
    add_param_options(cmd_genus, params_args);
    add_format(cmd_genus);

    CLI::App* cmd_gaps = app.add_subcommand("gaps", "one-place Weierstrass gap set");
    add_param_options(cmd_gaps, params_args);
    cmd_gaps->add_option("--place", place_spec, "place: 'inf' or a 1-based index")->required();
    add_format(cmd_gaps);

    CLI::App* cmd_gamma =
        app.add_subcommand("gamma", "minimal generating set for a tuple of places");
    add_param_options(cmd_gamma, params_args);
    cmd_gamma->add_option("--places", places_spec, "comma-separated places, e.g. inf,1,2")
        ->required();
    add_format(cmd_gamma);

    CLI::App* cmd_semigroup =
        app.add_subcommand("semigroup", "semigroup members within a lattice box");
    add_param_options(cmd_semigroup, params_args);
    cmd_semigroup->add_option("--places", places_spec, "comma-separated places")->required();
    cmd_semigroup->add_option("--bound", bound, "box bound per coordinate")->required();
    add_format(cmd_semigroup);

    CLI::App* cmd_member = app.add_subcommand("member", "semigroup membership of one vector");
    add_param_options(cmd_member, params_args);
    cmd_member->add_option("--places", places_spec, "comma-separated places")->required();
    cmd_member->add_option("--vector", vector_spec, "comma-separated pole orders")->required();
    add_format(cmd_member);

    CLI::App* cmd_pure = app.add_subcommand("pure-gaps", "all pure gaps of a tuple (oracle scan)");
    add_param_options(cmd_pure, params_args);
    cmd_pure->add_option("--places", places_spec, "comma-separated places")->required();
    add_format(cmd_pure);

    CLI::App* cmd_witness =
        app.add_subcommand("witness", "monomial realizing a generating-set element");
    add_param_options(cmd_witness, params_args);
    cmd_witness->add_option("--places", places_spec, "comma-separated places")->required();
    cmd_witness->add_option("--vector", vector_spec, "comma-separated pole orders")->required();
    add_format(cmd_witness);

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "race closed forms against the brute-force oracle");
    cmd_verify->add_option("--max-r", sweep_bounds.max_r, "largest r to sweep")->capture_default_str();
    cmd_verify->add_option("--max-m", sweep_bounds.max_m, "largest m to sweep")->capture_default_str();
    cmd_verify->add_option("--lambdas", lambdas_spec, "comma-separated lambda values")->capture_default_str();
    cmd_verify->add_option("--max-l", sweep_bounds.max_total_length,
                           "largest total tuple length")->capture_default_str();
    cmd_verify->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    add_format(cmd_verify);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_genus->parsed()) {
            kummerws::CurveParams params = params_args.validate();
            emit(kummerws::genus_document(params, kummerws::genus(params)), format_flag);
        } else if (cmd_gaps->parsed()) {
            kummerws::CurveParams params = params_args.validate();
            kummerws::PlaceId place = parse_place(place_spec);
            if (!place.is_infinity() && place.index() > params.r) {
                throw kummerws::Error("place index out of range [1, r]");
            }
            kummerws::GapList gaps = place.is_infinity() ? kummerws::gaps_at_infinity(params)
                                                         : kummerws::gaps_at_finite(params);
            gaps.place = place;
            emit(kummerws::gaps_document(params, gaps), format_flag);
        } else if (cmd_gamma->parsed()) {
            kummerws::CurveParams params = params_args.validate();
            kummerws::PlaceTuple tuple = parse_places(places_spec);
            emit(kummerws::gamma_document(params, tuple, kummerws::gamma(params, tuple)),
                 format_flag);
        } else if (cmd_semigroup->parsed()) {
            kummerws::CurveParams params = params_args.validate();
            kummerws::PlaceTuple tuple = parse_places(places_spec);
            emit(kummerws::semigroup_document(params, tuple,
                                              kummerws::semigroup_box(params, tuple, bound)),
                 format_flag);
        } else if (cmd_member->parsed()) {
            kummerws::CurveParams params = params_args.validate();
            kummerws::PlaceTuple tuple = parse_places(places_spec);
            kummerws::PoleVector v = parse_vector(vector_spec);
            emit(kummerws::member_document(params, tuple, v,
                                           kummerws::contains(params, tuple, v)),
                 format_flag);
        } else if (cmd_pure->parsed()) {
            kummerws::CurveParams params = params_args.validate();
            kummerws::PlaceTuple tuple = parse_places(places_spec);
            const Int box_bound = 2 * kummerws::genus(params) - 1;
            emit(kummerws::pure_gaps_document(params, tuple, box_bound,
                                              kummerws::pure_gaps_box(params, tuple)),
                 format_flag);
        } else if (cmd_witness->parsed()) {
            kummerws::CurveParams params = params_args.validate();
            kummerws::PlaceTuple tuple = parse_places(places_spec);
            kummerws::PoleVector v = parse_vector(vector_spec);
            kummerws::Monomial mono;
            try {
                mono = kummerws::witness_function(params, tuple, v);
            } catch (const kummerws::NotAGammaElement& e) {
                std::cerr << "error: not a generating-set element (" << e.what() << ")\n";
                return 1;
            }
            emit(kummerws::witness_document(params, tuple, v, mono,
                                            kummerws::monomial_divisor(params, mono)),
                 format_flag);
        } else if (cmd_verify->parsed()) {
            sweep_bounds.lambdas.clear();
            for (const std::string& token : split_commas(lambdas_spec)) {
                sweep_bounds.lambdas.push_back(parse_int(token, "lambda"));
            }
            std::vector<kummerws::SweepCase> cases = kummerws::verify_sweep(sweep_bounds, jobs);
            emit(kummerws::verify_document(sweep_bounds, cases), format_flag);
            if (!kummerws::all_passed(cases)) return 1;
        }
    } catch (const kummerws::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
