#pragma once

#include <string>

#include "kummerws/closure.hpp"
#include "kummerws/curve.hpp"
#include "kummerws/gamma.hpp"
#include "kummerws/onepoint.hpp"
#include "kummerws/sweep.hpp"
#include "kummerws/types.hpp"

// Deterministic output documents. Every command renders to one of three
// formats: a terse human-readable table, CSV (comma separator, header row,
// LF line endings), or JSON following docs/output.schema.json. Element lists
// are always emitted in canonical lexicographic order; repeated runs produce
// identical bytes.
namespace kummerws {

enum class Format { table, json, csv };

// Parses "table" / "json" / "csv".
Format parse_format(const std::string& name);

// Format from the KUMMERWS_FORMAT environment variable, table when unset.
Format default_format();

struct OutputDocument {
    std::string table_text;
    std::string csv_text;
    std::string json_text;

    const std::string& render(Format format) const;
};

OutputDocument genus_document(const CurveParams& params, Int genus_value);
OutputDocument gaps_document(const CurveParams& params, const GapList& gaps);
OutputDocument gamma_document(const CurveParams& params, const PlaceTuple& tuple,
                              const GammaSet& set);
OutputDocument semigroup_document(const CurveParams& params, const PlaceTuple& tuple,
                                  const SemigroupBox& box);
OutputDocument member_document(const CurveParams& params, const PlaceTuple& tuple,
                               const PoleVector& vector, bool member);
OutputDocument pure_gaps_document(const CurveParams& params, const PlaceTuple& tuple,
                                  Int box_bound, const std::vector<PoleVector>& pure_gaps);
OutputDocument witness_document(const CurveParams& params, const PlaceTuple& tuple,
                                const PoleVector& vector, const Monomial& monomial,
                                const DivisorSpec& divisor);
OutputDocument verify_document(const SweepBounds& bounds, const std::vector<SweepCase>& cases);

}  // namespace kummerws
