#pragma once

// JSON fixtures: a matrix is an array of rows, each row an array of scalar
// strings in the syntax accepted by parse_scalar, e.g. [["s", "0"], ["0", "s^-1"]].

#include "uqaudit/linalg.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <optional>

namespace uqaudit {

nlohmann::json matrix_to_json(const Matrix& m, Variable var = Variable::S);

/// Throws DimensionMismatch for ragged input or when the shape differs from
/// the expected one, ParseError for malformed entries.
Matrix matrix_from_json(const nlohmann::json& j, std::optional<std::size_t> expected_rows = std::nullopt,
                        std::optional<std::size_t> expected_cols = std::nullopt);

}  // namespace uqaudit
