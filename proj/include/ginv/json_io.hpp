#pragma once

#include <nlohmann/json.hpp>

#include "ginv/inverses.hpp"
#include "ginv/matrix.hpp"

namespace ginv {

/// {"n": int, "field": "Q"|"Q(i)", "entries": [[scalar-string, ...], ...]}
nlohmann::json matrix_to_json(const Matrix& m);
/// Throws Error(ParseError) on malformed input, non-square shape included.
Matrix matrix_from_json(const nlohmann::json& j);

/// {"kind", "k", "value", "witness_wd"?, "verified"}
nlohmann::json inverse_result_to_json(const InverseResult& r);

}  // namespace ginv
