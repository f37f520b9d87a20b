#pragma once

#include <json.hpp>

#include "cycrook/poly.hpp"

namespace cycrook {

// Machine format: ascending powers, coefficients as decimal strings.
//   ZPoly  z^2 + 1        -> ["1","0","1"]
//   XZPoly 1 + (2z+3)x    -> [["1"],["3","2"]]
nlohmann::json to_json(const Poly<BigInt>& p);
nlohmann::json to_json(const XZPoly<BigInt>& p);
Poly<BigInt> zpoly_from_json(const nlohmann::json& j);
XZPoly<BigInt> xzpoly_from_json(const nlohmann::json& j);

}  // namespace cycrook
