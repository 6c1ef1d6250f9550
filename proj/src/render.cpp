#include "kummerws/render.hpp"

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "kummerws/version.hpp"

namespace kummerws {

namespace {

using nlohmann::json;

std::string tuple_label(const PlaceTuple& tuple, int coord) {
    return to_string(tuple.place_at(coord));
}

std::string csv_header(const PlaceTuple& tuple) {
    std::string header;
    for (int coord = 0; coord < tuple.length(); ++coord) {
        if (coord) header += ",";
        header += tuple_label(tuple, coord);
    }
    return header;
}

std::string csv_row(const PoleVector& v) {
    std::string row;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) row += ",";
        row += std::to_string(v[i]);
    }
    return row;
}

std::string table_vector(const PoleVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i]);
    }
    out += ")";
    return out;
}

json params_json(const CurveParams& params) {
    json j{{"r", params.r}, {"m", params.m}, {"lambda", params.lambda}};
    if (params.characteristic) {
        j["characteristic"] = *params.characteristic;
    } else {
        j["characteristic"] = nullptr;
    }
    return j;
}

json envelope(const char* command, const CurveParams& params) {
    return json{{"schema_version", schema_version},
                {"tool", tool_name},
                {"tool_version", tool_version},
                {"command", command},
                {"params", params_json(params)}};
}

json places_json(const PlaceTuple& tuple) {
    json arr = json::array();
    for (int coord = 0; coord < tuple.length(); ++coord) {
        PlaceId p = tuple.place_at(coord);
        arr.push_back(p.is_infinity() ? std::string("inf") : std::to_string(p.index()));
    }
    return arr;
}

json elements_json(const std::vector<PoleVector>& elements) {
    json arr = json::array();
    for (const PoleVector& e : elements) arr.push_back(e);
    return arr;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string vectors_csv(const PlaceTuple& tuple, const std::vector<PoleVector>& elements) {
    std::string text = csv_header(tuple) + "\n";
    for (const PoleVector& e : elements) text += csv_row(e) + "\n";
    return text;
}

std::string vectors_table(const std::vector<PoleVector>& elements) {
    if (elements.empty()) return "(empty)\n";
    std::string text;
    for (const PoleVector& e : elements) text += table_vector(e) + "\n";
    return text;
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "table") return Format::table;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    throw Error("unknown output format: " + name);
}

Format default_format() {
    const char* env = std::getenv("KUMMERWS_FORMAT");
    if (env == nullptr || *env == '\0') return Format::table;
    return parse_format(env);
}

const std::string& OutputDocument::render(Format format) const {
    switch (format) {
        case Format::table: return table_text;
        case Format::json: return json_text;
        case Format::csv: return csv_text;
    }
    throw Error("unknown output format");
}

OutputDocument genus_document(const CurveParams& params, Int genus_value) {
    OutputDocument doc;
    doc.table_text = std::to_string(genus_value) + "\n";
    doc.csv_text = "genus\n" + std::to_string(genus_value) + "\n";
    json j = envelope("genus", params);
    j["genus"] = genus_value;
    doc.json_text = dump(j);
    return doc;
}

OutputDocument gaps_document(const CurveParams& params, const GapList& gaps) {
    OutputDocument doc;
    std::string line;
    for (std::size_t i = 0; i < gaps.gaps.size(); ++i) {
        if (i) line += " ";
        line += std::to_string(gaps.gaps[i]);
    }
    doc.table_text = line + "\n";
    doc.csv_text = "gap\n";
    for (Int gap : gaps.gaps) doc.csv_text += std::to_string(gap) + "\n";
    json j = envelope("gaps", params);
    j["place"] = gaps.place.is_infinity() ? std::string("inf") : std::to_string(gaps.place.index());
    j["gaps"] = gaps.gaps;
    j["count"] = gaps.gaps.size();
    doc.json_text = dump(j);
    return doc;
}

OutputDocument gamma_document(const CurveParams& params, const PlaceTuple& tuple,
                              const GammaSet& set) {
    OutputDocument doc;
    doc.table_text = vectors_table(set.elements);
    doc.csv_text = vectors_csv(tuple, set.elements);
    json j = envelope("gamma", params);
    j["places"] = places_json(tuple);
    j["elements"] = elements_json(set.elements);
    j["count"] = set.elements.size();
    doc.json_text = dump(j);
    return doc;
}

OutputDocument semigroup_document(const CurveParams& params, const PlaceTuple& tuple,
                                  const SemigroupBox& box) {
    OutputDocument doc;
    doc.table_text = vectors_table(box.members);
    doc.csv_text = vectors_csv(tuple, box.members);
    json j = envelope("semigroup", params);
    j["places"] = places_json(tuple);
    j["bound"] = box.bound;
    j["members"] = elements_json(box.members);
    j["count"] = box.members.size();
    doc.json_text = dump(j);
    return doc;
}

OutputDocument member_document(const CurveParams& params, const PlaceTuple& tuple,
                               const PoleVector& vector, bool member) {
    OutputDocument doc;
    const std::string answer = member ? "true" : "false";
    doc.table_text = answer + "\n";
    doc.csv_text = "member\n" + answer + "\n";
    json j = envelope("member", params);
    j["places"] = places_json(tuple);
    j["vector"] = vector;
    j["member"] = member;
    doc.json_text = dump(j);
    return doc;
}

OutputDocument pure_gaps_document(const CurveParams& params, const PlaceTuple& tuple,
                                  Int box_bound, const std::vector<PoleVector>& pure_gaps) {
    OutputDocument doc;
    doc.table_text = vectors_table(pure_gaps);
    doc.csv_text = vectors_csv(tuple, pure_gaps);
    json j = envelope("pure-gaps", params);
    j["places"] = places_json(tuple);
    j["box_bound"] = box_bound;
    j["pure_gaps"] = elements_json(pure_gaps);
    j["count"] = pure_gaps.size();
    doc.json_text = dump(j);
    return doc;
}

OutputDocument witness_document(const CurveParams& params, const PlaceTuple& tuple,
                                const PoleVector& vector, const Monomial& monomial,
                                const DivisorSpec& divisor) {
    OutputDocument doc;

    std::ostringstream table;
    table << "monomial: z^" << monomial.z_exp;
    for (std::size_t i = 0; i < monomial.linear_exps.size(); ++i) {
        if (monomial.linear_exps[i] == 0) continue;
        table << " (x-a" << (i + 1) << ")^" << monomial.linear_exps[i];
    }
    table << "\ndivisor:";
    for (std::size_t i = 0; i < divisor.coeff_finite.size(); ++i) {
        table << " P" << (i + 1) << ":" << divisor.coeff_finite[i];
    }
    table << " Pinf:" << divisor.coeff_infinity << "\n";
    doc.table_text = table.str();

    std::string csv = "key,value\n";
    csv += "z_exp," + std::to_string(monomial.z_exp) + "\n";
    for (std::size_t i = 0; i < monomial.linear_exps.size(); ++i) {
        csv += "exp_x_minus_a" + std::to_string(i + 1) + "," +
               std::to_string(monomial.linear_exps[i]) + "\n";
    }
    for (std::size_t i = 0; i < divisor.coeff_finite.size(); ++i) {
        csv += "div_P" + std::to_string(i + 1) + "," + std::to_string(divisor.coeff_finite[i]) +
               "\n";
    }
    csv += "div_Pinf," + std::to_string(divisor.coeff_infinity) + "\n";
    doc.csv_text = csv;

    json j = envelope("witness", params);
    j["places"] = places_json(tuple);
    j["vector"] = vector;
    j["monomial"] = json{{"z_exp", monomial.z_exp}, {"linear_exps", monomial.linear_exps}};
    j["divisor"] =
        json{{"infinity", divisor.coeff_infinity}, {"finite", divisor.coeff_finite}};
    doc.json_text = dump(j);
    return doc;
}

OutputDocument verify_document(const SweepBounds& bounds, const std::vector<SweepCase>& cases) {
    OutputDocument doc;

    std::size_t failures = 0;
    std::ostringstream table;
    std::string csv = "status,r,m,lambda,case\n";
    json case_array = json::array();
    for (const SweepCase& c : cases) {
        const char* status = c.pass ? "PASS" : "FAIL";
        if (!c.pass) ++failures;
        table << status << " r=" << c.r << " m=" << c.m << " lambda=" << c.lambda << " "
              << c.label;
        if (!c.pass && !c.detail.empty()) table << " [" << c.detail << "]";
        table << "\n";
        csv += std::string(status) + "," + std::to_string(c.r) + "," + std::to_string(c.m) + "," +
               std::to_string(c.lambda) + "," + c.label + "\n";
        json entry{{"status", status}, {"r", c.r},  {"m", c.m},
                   {"lambda", c.lambda}, {"case", c.label}};
        if (!c.pass && !c.detail.empty()) entry["detail"] = c.detail;
        case_array.push_back(std::move(entry));
    }
    table << "verified " << cases.size() << " cases, " << failures << " failures\n";
    doc.table_text = table.str();
    doc.csv_text = csv;

    json j{{"schema_version", schema_version},
           {"tool", tool_name},
           {"tool_version", tool_version},
           {"command", "verify"}};
    j["bounds"] = json{{"max_r", bounds.max_r},
                       {"max_m", bounds.max_m},
                       {"lambdas", bounds.lambdas},
                       {"max_total_length", bounds.max_total_length}};
    j["cases"] = std::move(case_array);
    j["case_count"] = cases.size();
    j["failures"] = failures;
    doc.json_text = dump(j);
    return doc;
}

}  // namespace kummerws
