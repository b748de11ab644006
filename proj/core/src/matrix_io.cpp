#include "uqaudit/matrix_io.hpp"

#include "uqaudit/errors.hpp"

#include <string>
#include <vector>

namespace uqaudit {

nlohmann::json matrix_to_json(const Matrix& m, Variable var) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string(var));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const nlohmann::json& j, std::optional<std::size_t> expected_rows,
                        std::optional<std::size_t> expected_cols) {
    if (!j.is_array()) throw Error(ErrorKind::ParseError, "matrix fixture must be an array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : j.front().size();
    std::vector<FieldScalar> entries;
    entries.reserve(rows * cols);
    for (const auto& row : j) {
        if (!row.is_array()) throw Error(ErrorKind::ParseError, "matrix row must be an array");
        if (row.size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix fixture");
        for (const auto& cell : row) {
            if (cell.is_string()) {
                entries.push_back(parse_scalar(cell.get<std::string>()));
            } else if (cell.is_number_integer()) {
                entries.emplace_back(cell.get<long>());
            } else {
                throw Error(ErrorKind::ParseError, "matrix entry must be a string or an integer");
            }
        }
    }
    if ((expected_rows && *expected_rows != rows) || (expected_cols && *expected_cols != cols)) {
        throw Error(ErrorKind::DimensionMismatch,
                    "fixture is " + std::to_string(rows) + "x" + std::to_string(cols));
    }
    return Matrix(rows, cols, std::move(entries));
}

}  // namespace uqaudit
