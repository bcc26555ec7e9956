#pragma once

// JSON forms of the library types. Rationals are written as "p/q" (or "p")
// strings; readers also take plain JSON integers.

#include "svf/game.hpp"
#include "svf/inverse.hpp"
#include "svf/rational.hpp"
#include "svf/reduction.hpp"
#include "svf/semivalue.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace svf {

using Json = nlohmann::ordered_json;

void to_json(Json& j, const Rational& r);
void from_json(const Json& j, Rational& r);

Json probability_vector_to_json(const ProbabilityVector& p);
ProbabilityVector probability_vector_from_json(const Json& j);

Json game_to_json(const WeightedGame& g);
WeightedGame game_from_json(const Json& j);

Json semivalues_to_json(const SemivalueVector& s);

/// A bare array, or an object carrying "values" or "vector".
std::vector<Rational> vector_from_json(const Json& j);
Json vector_to_json(const std::vector<Rational>& v);

/// The threshold is written next to the weights so the output can be read
/// back as a game.
Json inverse_result_to_json(const InverseResult& r, const Rational& theta);

Json certificate_to_json(const CaratheodoryCertificate& cert);
CaratheodoryCertificate certificate_from_json(const Json& j);

Json rpartition_to_json(const RPartitionInstance& inst);
RPartitionInstance rpartition_from_json(const Json& j);

/// Throws IoError when the file cannot be read, ParseError on bad JSON.
Json load_json_file(const std::string& path);

/// Compact one-line rendering followed by a newline.
std::string render(const Json& j);

} // namespace svf
