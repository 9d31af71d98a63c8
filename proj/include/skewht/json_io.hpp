#pragma once

#include <nlohmann/json.hpp>

#include "skewht/complexes.hpp"
#include "skewht/invariants.hpp"

namespace skewht {

nlohmann::json qlaurent_to_json(const QLaurent& s);
QLaurent qlaurent_from_json(const nlohmann::json& j);

nlohmann::json monomial_to_json(const Monomial& m);
Monomial monomial_from_json(const nlohmann::json& j, int n);

nlohmann::json label_to_json(const BasisLabel& lab);
BasisLabel label_from_json(const nlohmann::json& j, int n);

/// Complex export: modules as label arrays, differentials as
/// (row, col, [(monomial exponents, coefficient terms)]) triples.
nlohmann::json complex_to_json(const FreeComplex& C);
FreeComplex complex_from_json(const nlohmann::json& j);

nlohmann::json betti_table_to_json(const BettiTable& t);
nlohmann::json poincare_to_json(const BivariatePoly& p);

Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& r);

}  // namespace skewht
