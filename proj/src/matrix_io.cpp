#include "cycrook/matrix_io.hpp"

#include <fstream>

namespace cycrook {

namespace {

BigInt entry_from_json(const nlohmann::json& v) {
  if (v.is_number_integer()) return BigInt(v.get<long>());
  if (v.is_string()) return parse_bigint(v.get<std::string>());
  throw StructuralError("matrix entries must be integers or decimal strings");
}

nlohmann::json entry_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return to_string(v);
}

std::size_t size_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    throw StructuralError(std::string("missing or invalid '") + key + "'");
  return j[key].get<std::size_t>();
}

}  // namespace

Matrix<BigInt> matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw StructuralError("matrix document must be a JSON object");
  std::size_t m = size_field(j, "rows");
  std::size_t n = size_field(j, "cols");
  if (!j.contains("entries") || !j["entries"].is_array()) throw StructuralError("missing 'entries'");
  const auto& rows = j["entries"];
  if (rows.size() != m) throw StructuralError("'entries' has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(m));
  std::vector<BigInt> data;
  data.reserve(m * n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) throw StructuralError("every row of 'entries' must have " + std::to_string(n) + " items");
    for (const auto& v : row) data.push_back(entry_from_json(v));
  }
  return Matrix<BigInt>(m, n, std::move(data));
}

nlohmann::json to_json(const Matrix<BigInt>& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 1; j <= a.cols(); ++j) row.push_back(entry_to_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(rows)}};
}

CirculantSpec<BigInt> circulant_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw StructuralError("circulant spec must be a JSON object");
  CirculantSpec<BigInt> spec;
  spec.n = size_field(j, "n");
  spec.k = size_field(j, "k");
  spec.r = j.contains("r") ? size_field(j, "r") : 0;
  if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw StructuralError("missing 'coeffs'");
  for (const auto& c : j["coeffs"]) spec.coeffs.push_back(entry_from_json(c));
  if (spec.n < 1 || spec.k < 1 || spec.coeffs.empty())
    throw StructuralError("circulant spec needs n >= 1, k >= 1 and at least one coefficient");
  return spec;
}

nlohmann::json to_json(const CirculantSpec<BigInt>& spec) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : spec.coeffs) coeffs.push_back(entry_to_json(c));
  return {{"n", spec.n}, {"k", spec.k}, {"r", spec.r}, {"coeffs", std::move(coeffs)}};
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open '" + path.string() + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw StructuralError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

}  // namespace cycrook
