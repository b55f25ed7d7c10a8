#pragma once

// Bit-stable serialization of results: JSON with sorted keys and 17
// significant digits, CSV, and markdown tables.

#include <string>
#include <vector>

#include <json.hpp>

#include "dq/bound_engine.hpp"
#include "dq/census.hpp"
#include "dq/explicit_bounds.hpp"
#include "dq/omega_sieve.hpp"
#include "dq/pell_search.hpp"

namespace dq {

using Json = nlohmann::json;

enum class Format { Json, Csv, Markdown };

Format parse_format(const std::string& name);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Report {
    Json json;
    Table table;
};

/// %.17g
std::string format_real(Real x);

/// Pretty-printed with two-space indent, keys sorted, floats via format_real.
std::string dump_json(const Json& j);

std::string to_csv(const Table& t);
std::string to_markdown(const Table& t);

std::string emit_report(const Report& r, Format f);

Json to_json(const Quadruple& q);
Json to_json(const SumValue& v);
Json to_json(const SumReport& r);
Json to_json(const GValues& g);
Json to_json(const AlphaResult& a);
Json to_json(const IterationResult& r);
Json to_json(const CensusLine& l);
Json to_json(const EtaSplit& s);
Json to_json(const TotalReport& t);
Json to_json(const ResidueScanReport& r);

}  // namespace dq
