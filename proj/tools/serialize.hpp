#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"
#include "lsrs/hardness.hpp"
#include "lsrs/interval_table.hpp"
#include "lsrs/sequence.hpp"
#include "lsrs/srs.hpp"

namespace lsrs::io {

using Json = nlohmann::ordered_json;

// Raw mode: lines starting with '>' are dropped and the rest concatenated.
// Token mode: the text is passed through unchanged.
std::string ingest(std::string_view text, ParseMode mode);

// [{root: [tokens], exponent, copies: [[positions]]}], positions 1-based.
Json decomposition_json(const Sequence& seq, const SrsDecomposition& dec);

std::string_view table_kind_name(TableKind kind);

// {kind, n, rows}; rows[i-1] holds the values for j = i..n.
Json table_json(const IntervalTable<int>& table);
// Header "i\j,1,..,n"; cells with j < i left blank.
void write_table_csv(std::ostream& out, const IntervalTable<int>& table);

// Variables are 1-based in JSON, as in DIMACS.
Json sat_json(const hardness::SatInstance& f);
// Throws hardness::ConstructionError on malformed documents.
hardness::SatInstance sat_from_json(const Json& doc);

std::string_view role_name(hardness::LetterRole role);
Json reduction_json(const hardness::ReductionInstance& r);

Json validation_json(const ValidationReport& report);

}  // namespace lsrs::io
