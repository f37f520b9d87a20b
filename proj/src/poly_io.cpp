#include "cycrook/poly_io.hpp"

#include "cycrook/errors.hpp"

namespace cycrook {

nlohmann::json to_json(const Poly<BigInt>& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

nlohmann::json to_json(const XZPoly<BigInt>& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : p.x_coeffs()) out.push_back(to_json(c));
  return out;
}

Poly<BigInt> zpoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw StructuralError("polynomial must be a JSON array");
  std::vector<BigInt> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) {
    if (!c.is_string()) throw StructuralError("polynomial coefficients must be decimal strings");
    coeffs.push_back(parse_bigint(c.get<std::string>()));
  }
  return Poly<BigInt>(std::move(coeffs));
}

XZPoly<BigInt> xzpoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw StructuralError("bivariate polynomial must be a JSON array of arrays");
  std::vector<Poly<BigInt>> by_x;
  by_x.reserve(j.size());
  for (const auto& row : j) by_x.push_back(zpoly_from_json(row));
  return XZPoly<BigInt>(std::move(by_x));
}

}  // namespace cycrook
