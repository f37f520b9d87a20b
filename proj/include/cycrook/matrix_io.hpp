#pragma once

#include <filesystem>

#include <json.hpp>

#include "cycrook/matrix.hpp"

namespace cycrook {

// {"rows": m, "cols": n, "entries": [[...], ...]}; entries are JSON integers
// or decimal strings.
Matrix<BigInt> matrix_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Matrix<BigInt>& a);

// {"n": .., "k": .., "r": .., "coeffs": [...]}
CirculantSpec<BigInt> circulant_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CirculantSpec<BigInt>& spec);

nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace cycrook
