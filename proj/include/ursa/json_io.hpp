#pragma once

#include <json.hpp>

#include "ursa/balgebra.hpp"
#include "ursa/drinfeld.hpp"
#include "ursa/report.hpp"

namespace ursa {

using nlohmann::json;

// LaurentBi: list of [numerator-string, denominator-string, a, b] per term
json to_json(const LaurentBi& p);
json to_json(const RatFn& f);
json to_json(const UniLaurent& p);
LaurentBi laurent_from_json(const json& j);
RatFn ratfn_from_json(const json& j);

json to_json(const BElement& x);
json to_json(const TensorElement& x);

json root_datum_json(const RootDatum& rd);
json pairing_matrix_json(const RootDatum& rd);
json good_words_json(const Engine& eng);
json ls_table_json(const Engine& eng, const std::vector<LSRelation>& table);
json theta_json(const Engine& eng, const ThetaTruncation& t, bool expand_words);
json report_json(const SuiteReport& rep, bool with_timing = true);

std::string dump_sorted(const json& j);
std::string report_csv(const SuiteReport& rep);

}  // namespace ursa
