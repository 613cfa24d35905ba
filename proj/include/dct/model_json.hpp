#pragma once

#include <json.hpp>

#include "dct/crossprod.hpp"

namespace dct {

/// Deterministic JSON rendering of a model: fixed key order, pair tables
/// as sorted triples.
[[nodiscard]] nlohmann::ordered_json model_to_json(const DoubleCatModel& m);

/// Inverse of model_to_json. Throws Error("BadModelFile") on documents
/// that do not follow the schema.
[[nodiscard]] DoubleCatModel model_from_json(const nlohmann::ordered_json& j);

}  // namespace dct
